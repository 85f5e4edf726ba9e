#pragma once

#include <string>
#include <vector>

#include "birack/perm.hpp"
#include "birack/switch.hpp"

namespace birack {

// A finite group on labels 1..m; mult[(a-1)*m + (b-1)] is the label of ab.
class GroupTable {
 public:
  GroupTable(int m, std::vector<Label> mult);

  int size() const { return m_; }
  Label mul(Label a, Label b) const { return mult_[(a - 1) * m_ + b - 1]; }
  Label inv(Label a) const { return inv_[a - 1]; }
  Label id() const { return id_; }

 private:
  int m_;
  std::vector<Label> mult_;
  std::vector<Label> inv_;
  Label id_ = 0;
};

// Z_n written additively; label k is the residue k-1.
GroupTable cyclic_group(int n);
// S_3 with elements listed in lexicographic order of their images; label 1 is the identity.
GroupTable symmetric_group3();

Switch twist(int n);
// a^b = lambda a + (1 - lambda mu) b, a_b = mu a over Z_n.
Switch alexander(int n, int lambda, int mu);
Switch burau(int n, int lambda);
// S(a, b) = (a^2 b, b^-1 a^-1 b).
Switch wada(const GroupTable& g);

}  // namespace birack
