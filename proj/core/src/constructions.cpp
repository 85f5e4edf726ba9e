#include "birack/constructions.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>

#include "birack/error.hpp"

namespace birack {

GroupTable::GroupTable(int m, std::vector<Label> mult) : m_(m), mult_(std::move(mult)) {
  if (m < 1 || m > kMaxLabels) throw Error("group order " + std::to_string(m) + " out of range");
  if (static_cast<int>(mult_.size()) != m * m) throw Error("group table must have m*m entries");
  for (Label v : mult_) {
    if (v < 1 || v > m) throw Error("group table entry " + std::to_string(v) + " out of range");
  }
  for (Label e = 1; e <= m && !id_; ++e) {
    bool ok = true;
    for (Label a = 1; a <= m && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) id_ = e;
  }
  if (!id_) throw Error("group table has no identity");
  for (Label a = 1; a <= m; ++a) {
    for (Label b = 1; b <= m; ++b) {
      for (Label c = 1; c <= m; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error("group table is not associative at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  inv_.assign(m, 0);
  for (Label a = 1; a <= m; ++a) {
    for (Label b = 1; b <= m; ++b) {
      if (mul(a, b) == id_ && mul(b, a) == id_) inv_[a - 1] = b;
    }
    if (!inv_[a - 1]) throw Error("element " + std::to_string(a) + " has no inverse");
  }
}

GroupTable cyclic_group(int n) {
  if (n < 1 || n > 12) throw Error("built-in cyclic groups have order 1..12");
  std::vector<Label> mult(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mult[a * n + b] = (a + b) % n + 1;
  }
  return GroupTable(n, std::move(mult));
}

GroupTable symmetric_group3() {
  std::vector<std::array<int, 3>> els;
  std::array<int, 3> p{0, 1, 2};
  do {
    els.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(els.begin(), els.end(), q) - els.begin());
  };
  std::vector<Label> mult(36);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      for (int i = 0; i < 3; ++i) ab[i] = els[a][els[b][i]];
      mult[a * 6 + b] = index(ab) + 1;
    }
  }
  return GroupTable(6, std::move(mult));
}

Switch twist(int n) {
  if (n < 1) throw Error("twist needs n >= 1");
  return Switch(identity_table(n), identity_table(n));
}

Switch alexander(int n, int lambda, int mu) {
  if (n < 1 || n > kMaxLabels) throw Error("modulus out of range");
  auto unit = [n](int v) { return std::gcd(((v % n) + n) % n, n) == 1; };
  if (!unit(lambda)) throw Error("lambda = " + std::to_string(lambda) + " is not a unit mod " + std::to_string(n));
  if (!unit(mu)) throw Error("mu = " + std::to_string(mu) + " is not a unit mod " + std::to_string(n));
  auto mod = [n](long v) { return static_cast<std::uint8_t>(((v % n) + n) % n); };
  std::vector<std::uint8_t> up(n * n), down(n * n);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      up[b * n + a] = mod(static_cast<long>(lambda) * a + (1L - static_cast<long>(lambda) * mu) * b);
      down[b * n + a] = mod(static_cast<long>(mu) * a);
    }
  }
  return switch_from_flat(n, up, down);
}

Switch burau(int n, int lambda) { return alexander(n, lambda, 1); }

Switch wada(const GroupTable& g) {
  const int m = g.size();
  std::vector<std::uint8_t> up(m * m), down(m * m);
  for (Label a = 1; a <= m; ++a) {
    for (Label b = 1; b <= m; ++b) {
      up[(a - 1) * m + b - 1] = static_cast<std::uint8_t>(g.mul(g.mul(a, a), b) - 1);
      down[(b - 1) * m + a - 1] = static_cast<std::uint8_t>(g.mul(g.mul(g.inv(b), g.inv(a)), b) - 1);
    }
  }
  Switch s = switch_from_flat(m, up, down);
  assert(verify_axioms(s).birack());
  return s;
}

}  // namespace birack
