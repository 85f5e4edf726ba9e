#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "birack/perm.hpp"

namespace birack {

// Column b is the permutation applied when b acts.
using ActionTable = std::vector<Perm>;

ActionTable identity_table(int n);
bool is_identity_table(const ActionTable& t);

// S(a, b) = (b^a, a_b) with b^a = up[a](b) and a_b = down[b](a).
class Switch {
 public:
  Switch(ActionTable up, ActionTable down);

  int size() const { return n_; }
  const ActionTable& up() const { return up_; }
  const ActionTable& down() const { return down_; }

  Label up_action(Label acting, Label x) const;    // x^acting
  Label down_action(Label acting, Label x) const;  // x_acting
  std::pair<Label, Label> apply(Label a, Label b) const;

  // 0-based flat tables: up_flat()[a*n + x] is x^a, down_flat()[b*n + x] is x_b.
  std::span<const std::uint8_t> up_flat() const { return up_flat_; }
  std::span<const std::uint8_t> down_flat() const { return down_flat_; }
  std::span<const std::uint8_t> up_inv_flat() const { return up_inv_flat_; }
  std::span<const std::uint8_t> down_inv_flat() const { return down_inv_flat_; }

  friend bool operator==(const Switch& a, const Switch& b) {
    return a.up_ == b.up_ && a.down_ == b.down_;
  }

 private:
  int n_;
  ActionTable up_;
  ActionTable down_;
  std::vector<std::uint8_t> up_flat_, down_flat_, up_inv_flat_, down_inv_flat_;
};

Switch make_switch(ActionTable up, ActionTable down);
Switch switch_from_flat(int n, std::span<const std::uint8_t> up, std::span<const std::uint8_t> down);

enum class Axiom { b1 = 1, b2 = 2, b3 = 3 };

struct Witness {
  Axiom axiom;
  std::vector<Label> labels;  // the element (B1), the colliding pairs (B2) or the triple (B3)
};

struct AxiomReport {
  bool b1 = false;
  bool b2 = false;
  bool b3 = false;
  std::optional<Witness> witness;

  bool birack() const { return b2 && b3; }
};

AxiomReport verify_axioms(const Switch& s);

// The two halves of B1, each scanned over every candidate.
bool b1_x_half(const Switch& s);
bool b1_y_half(const Switch& s);

Switch inverse(const Switch& s);

enum class ClassKind { quandle, rack, biquandle, birack, not_birack };

ClassKind classify(const Switch& s);
std::string to_string(ClassKind k);

struct Fingerprint {
  std::uint64_t order = 0;
  int u = 0;
  int d = 0;
  int c1 = 0;
  int c2 = 0;
  bool symmetric = false;
  bool pseudo_up = false;
  bool pseudo_down = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Switch& s);

// Order of S as a permutation of the n^2 pairs.
std::uint64_t switch_order(const Switch& s);

}  // namespace birack
