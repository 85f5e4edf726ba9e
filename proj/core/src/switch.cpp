#include "birack/switch.hpp"

#include <numeric>
#include <string>

#include "birack/error.hpp"

namespace birack {

ActionTable identity_table(int n) { return ActionTable(n, Perm::identity(n)); }

bool is_identity_table(const ActionTable& t) {
  for (const auto& p : t) {
    if (!p.is_identity()) return false;
  }
  return true;
}

namespace {

void check_table(const ActionTable& t, int n, const char* which) {
  if (static_cast<int>(t.size()) != n) {
    throw Error(std::string(which) + " table has " + std::to_string(t.size()) +
                " columns, expected " + std::to_string(n));
  }
  for (int c = 0; c < n; ++c) {
    if (t[c].size() != n) {
      throw Error(std::string(which) + " column " + std::to_string(c + 1) + " has size " +
                  std::to_string(t[c].size()) + ", expected " + std::to_string(n));
    }
  }
}

void flatten(const ActionTable& t, std::vector<std::uint8_t>& flat, std::vector<std::uint8_t>& inv) {
  const int n = static_cast<int>(t.size());
  flat.resize(n * n);
  inv.resize(n * n);
  for (int c = 0; c < n; ++c) {
    auto img = t[c].raw();
    for (int x = 0; x < n; ++x) {
      flat[c * n + x] = img[x];
      inv[c * n + img[x]] = static_cast<std::uint8_t>(x);
    }
  }
}

void check_label(Label x, int n) {
  if (x < 1 || x > n) throw Error("label " + std::to_string(x) + " out of range 1.." + std::to_string(n));
}

ActionTable table_from_flat(int n, std::span<const std::uint8_t> flat, const char* which) {
  if (static_cast<int>(flat.size()) != n * n) throw Error(std::string(which) + " table has wrong size");
  ActionTable t;
  t.reserve(n);
  for (int c = 0; c < n; ++c) {
    std::vector<std::uint8_t> col(flat.begin() + c * n, flat.begin() + (c + 1) * n);
    try {
      t.push_back(Perm::from_raw(std::move(col)));
    } catch (const Error&) {
      throw Error(std::string(which) + " column " + std::to_string(c + 1) + " is not a bijection");
    }
  }
  return t;
}

}  // namespace

Switch::Switch(ActionTable up, ActionTable down) : n_(static_cast<int>(up.size())) {
  if (n_ == 0) throw Error("switch must have positive size");
  if (static_cast<int>(down.size()) != n_) {
    throw Error("up table has size " + std::to_string(n_) + " but down table has size " +
                std::to_string(down.size()));
  }
  check_table(up, n_, "up");
  check_table(down, n_, "down");
  up_ = std::move(up);
  down_ = std::move(down);
  flatten(up_, up_flat_, up_inv_flat_);
  flatten(down_, down_flat_, down_inv_flat_);
}

Label Switch::up_action(Label acting, Label x) const {
  check_label(acting, n_);
  check_label(x, n_);
  return up_flat_[(acting - 1) * n_ + x - 1] + 1;
}

Label Switch::down_action(Label acting, Label x) const {
  check_label(acting, n_);
  check_label(x, n_);
  return down_flat_[(acting - 1) * n_ + x - 1] + 1;
}

std::pair<Label, Label> Switch::apply(Label a, Label b) const {
  return {up_action(a, b), down_action(b, a)};
}

Switch make_switch(ActionTable up, ActionTable down) { return Switch(std::move(up), std::move(down)); }

Switch switch_from_flat(int n, std::span<const std::uint8_t> up, std::span<const std::uint8_t> down) {
  return Switch(table_from_flat(n, up, "up"), table_from_flat(n, down, "down"));
}

bool b1_x_half(const Switch& s) {
  const int n = s.size();
  auto U = s.up_flat();
  auto D = s.down_flat();
  for (int a = 0; a < n; ++a) {
    int hits = 0;
    for (int x = 0; x < n; ++x) {
      // a^x = x and x_a = a
      if (U[x * n + a] == x && D[a * n + x] == a) ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

bool b1_y_half(const Switch& s) {
  const int n = s.size();
  auto U = s.up_flat();
  auto D = s.down_flat();
  for (int a = 0; a < n; ++a) {
    int hits = 0;
    for (int y = 0; y < n; ++y) {
      // a_y = y and y^a = a
      if (D[y * n + a] == y && U[a * n + y] == a) ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

AxiomReport verify_axioms(const Switch& s) {
  const int n = s.size();
  auto U = s.up_flat();
  auto D = s.down_flat();
  AxiomReport r;

  std::optional<Witness> w1;
  for (int a = 0; a < n && !w1; ++a) {
    int xs = 0, ys = 0;
    for (int x = 0; x < n; ++x) {
      if (U[x * n + a] == x && D[a * n + x] == a) ++xs;
      if (D[x * n + a] == x && U[a * n + x] == a) ++ys;
    }
    if (xs != 1 || ys != 1) w1 = Witness{Axiom::b1, {a + 1}};
  }
  r.b1 = !w1;

  std::optional<Witness> w2;
  std::vector<int> preimage(n * n, -1);
  for (int a = 0; a < n && !w2; ++a) {
    for (int b = 0; b < n; ++b) {
      int img = U[a * n + b] * n + D[b * n + a];
      if (preimage[img] >= 0) {
        int a0 = preimage[img] / n, b0 = preimage[img] % n;
        w2 = Witness{Axiom::b2, {a0 + 1, b0 + 1, a + 1, b + 1}};
        break;
      }
      preimage[img] = a * n + b;
    }
  }
  r.b2 = !w2;

  auto S = [&](int a, int b) { return std::pair<int, int>{U[a * n + b], D[b * n + a]}; };
  std::optional<Witness> w3;
  for (int a = 0; a < n && !w3; ++a) {
    for (int b = 0; b < n && !w3; ++b) {
      for (int c = 0; c < n; ++c) {
        // (S x id)(id x S)(S x id), applied left to right
        auto [l1, l2] = S(a, b);
        auto [l3, l4] = S(l2, c);
        auto [l5, l6] = S(l1, l3);
        // (id x S)(S x id)(id x S)
        auto [r2, r3] = S(b, c);
        auto [r1, r4] = S(a, r2);
        auto [r5, r6] = S(r4, r3);
        if (l5 != r1 || l6 != r5 || l4 != r6) {
          w3 = Witness{Axiom::b3, {a + 1, b + 1, c + 1}};
          break;
        }
      }
    }
  }
  r.b3 = !w3;

  if (w1) r.witness = w1;
  else if (w2) r.witness = w2;
  else if (w3) r.witness = w3;
  return r;
}

Switch inverse(const Switch& s) {
  const int n = s.size();
  auto U = s.up_flat();
  auto D = s.down_flat();
  std::vector<int> pre(n * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int img = U[a * n + b] * n + D[b * n + a];
      if (pre[img] >= 0) throw Error("switch is not invertible");
      pre[img] = a * n + b;
    }
  }
  // The inverse sends (c, d) to (a, b); as a switch, a = d^c and b = c_d.
  std::vector<std::uint8_t> up(n * n), down(n * n);
  for (int c = 0; c < n; ++c) {
    for (int d = 0; d < n; ++d) {
      int ab = pre[c * n + d];
      up[c * n + d] = static_cast<std::uint8_t>(ab / n);
      down[d * n + c] = static_cast<std::uint8_t>(ab % n);
    }
  }
  try {
    return switch_from_flat(n, up, down);
  } catch (const Error& e) {
    throw Error(std::string("inverse does not have switch form: ") + e.what());
  }
}

ClassKind classify(const Switch& s) {
  AxiomReport r = verify_axioms(s);
  if (!r.birack()) return ClassKind::not_birack;
  bool rack = is_identity_table(s.down()) || is_identity_table(s.up());
  if (rack) return r.b1 ? ClassKind::quandle : ClassKind::rack;
  return r.b1 ? ClassKind::biquandle : ClassKind::birack;
}

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::quandle: return "quandle";
    case ClassKind::rack: return "rack";
    case ClassKind::biquandle: return "biquandle";
    case ClassKind::birack: return "birack";
    case ClassKind::not_birack: return "not-a-birack";
  }
  return "?";
}

std::uint64_t switch_order(const Switch& s) {
  const int n = s.size();
  auto U = s.up_flat();
  auto D = s.down_flat();
  std::vector<int> next(n * n);
  std::vector<bool> hit(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int v = U[a * n + b] * n + D[b * n + a];
      if (hit[v]) throw Error("switch is not invertible");
      hit[v] = true;
      next[a * n + b] = v;
    }
  }
  std::uint64_t ord = 1;
  std::vector<bool> seen(n * n);
  for (int p = 0; p < n * n; ++p) {
    if (seen[p]) continue;
    std::uint64_t len = 0;
    for (int q = p; !seen[q]; q = next[q]) {
      seen[q] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Fingerprint fingerprint(const Switch& s) {
  const int n = s.size();
  auto U = s.up_flat();
  auto D = s.down_flat();
  Fingerprint f;
  f.order = switch_order(s);
  auto constant_points = [n](std::span<const std::uint8_t> t) {
    int count = 0;
    for (int x = 0; x < n; ++x) {
      bool constant = true;
      for (int y = 1; y < n && constant; ++y) constant = t[y * n + x] == t[x];
      count += constant;
    }
    return count;
  };
  auto columns_equal = [n](std::span<const std::uint8_t> t) {
    for (int y = 1; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        if (t[y * n + x] != t[x]) return false;
      }
    }
    return true;
  };
  f.u = constant_points(U);
  f.d = constant_points(D);
  f.c1 = f.u + f.d;
  f.c2 = f.u > f.d ? f.u - f.d : f.d - f.u;
  f.symmetric = s.up() == s.down();
  f.pseudo_up = columns_equal(U);
  f.pseudo_down = columns_equal(D);
  return f;
}

}  // namespace birack
