#include "birack/symmetry.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

#include "birack/error.hpp"

namespace birack {

namespace {

constexpr int kMaxCanonicalSize = 8;

class Minimizer {
 public:
  explicit Minimizer(int n) : n_(n), best_(2 * n * n), buf_(2 * n * n) {}

  void offer(std::span<const std::uint8_t> up, std::span<const std::uint8_t> down,
             const std::vector<std::uint8_t>& sigma, const std::vector<std::uint8_t>& tau) {
    const int n = n_;
    bool less = !have_;
    int idx = 0;
    for (int t = 0; t < 2; ++t) {
      const std::uint8_t* T = t ? down.data() : up.data();
      for (int i = 0; i < n; ++i) {
        const int col = tau[i] * n;
        for (int x = 0; x < n; ++x, ++idx) {
          std::uint8_t v = sigma[T[col + tau[x]]];
          if (!less) {
            if (v > best_[idx]) return;
            if (v < best_[idx]) less = true;
          }
          buf_[idx] = v;
        }
      }
    }
    if (less) {
      best_.swap(buf_);
      have_ = true;
    }
  }

  void offer_all(const Switch& s) {
    const auto& perms = all_raw_permutations(n_);
    std::vector<std::uint8_t> tau(n_);
    for (const auto& sigma : perms) {
      for (int i = 0; i < n_; ++i) tau[sigma[i]] = static_cast<std::uint8_t>(i);
      offer(s.up_flat(), s.down_flat(), sigma, tau);
    }
  }

  CanonicalKey key() const { return CanonicalKey{n_, best_}; }

 private:
  int n_;
  bool have_ = false;
  std::vector<std::uint8_t> best_;
  std::vector<std::uint8_t> buf_;
};

std::vector<std::vector<std::uint8_t>> build_permutations(int n) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::string to_string(EquivalenceMode m) {
  return m == EquivalenceMode::isomorphism ? "iso" : "iso+sym";
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const {
  std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(k.size);
  for (auto c : k.cells) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

const std::vector<std::vector<std::uint8_t>>& all_raw_permutations(int n) {
  if (n < 1 || n > kMaxCanonicalSize) {
    throw Error("relabeling search supports sizes 1.." + std::to_string(kMaxCanonicalSize));
  }
  static std::array<std::vector<std::vector<std::uint8_t>>, kMaxCanonicalSize + 1> cache;
  static std::array<std::once_flag, kMaxCanonicalSize + 1> once;
  std::call_once(once[n], [n] { cache[n] = build_permutations(n); });
  return cache[n];
}

Switch relabel(const Perm& sigma, const Switch& s) {
  const int n = s.size();
  if (sigma.size() != n) throw Error("relabeling has size " + std::to_string(sigma.size()) +
                                     ", switch has size " + std::to_string(n));
  auto sg = sigma.raw();
  std::vector<std::uint8_t> tau(n);
  for (int i = 0; i < n; ++i) tau[sg[i]] = static_cast<std::uint8_t>(i);
  auto U = s.up_flat();
  auto D = s.down_flat();
  std::vector<std::uint8_t> up(n * n), down(n * n);
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < n; ++x) {
      up[i * n + x] = sg[U[tau[i] * n + tau[x]]];
      down[i * n + x] = sg[D[tau[i] * n + tau[x]]];
    }
  }
  return switch_from_flat(n, up, down);
}

Switch symmetry_image(SymmetryElement g, const Switch& s) {
  switch (g) {
    case SymmetryElement::identity: return s;
    case SymmetryElement::mirror: return inverse(s);
    case SymmetryElement::reverse: return Switch(s.down(), s.up());
    case SymmetryElement::mirror_reverse: return inverse(Switch(s.down(), s.up()));
  }
  return s;
}

bool is_normalized(const Switch& s) {
  return !is_identity_table(s.up()) || is_identity_table(s.down());
}

Switch normalize_entry(const Switch& s) {
  if (is_normalized(s)) return s;
  return Switch(s.down(), s.up());
}

CanonicalKey canonical_key(const Switch& s, EquivalenceMode mode) {
  Minimizer m(s.size());
  if (mode == EquivalenceMode::isomorphism) {
    m.offer_all(normalize_entry(s));
    return m.key();
  }
  for (auto g : {SymmetryElement::identity, SymmetryElement::mirror, SymmetryElement::reverse,
                 SymmetryElement::mirror_reverse}) {
    Switch t = symmetry_image(g, s);
    if (is_normalized(t)) m.offer_all(t);
  }
  return m.key();
}

Switch canonical_form(const Switch& s, EquivalenceMode mode) {
  return switch_from_key(canonical_key(s, mode));
}

bool equivalent(const Switch& a, const Switch& b, EquivalenceMode mode) {
  if (a.size() != b.size()) return false;
  return canonical_key(a, mode) == canonical_key(b, mode);
}

CanonicalKey flat_key(const Switch& s) {
  CanonicalKey k{s.size(), {}};
  k.cells.assign(s.up_flat().begin(), s.up_flat().end());
  k.cells.insert(k.cells.end(), s.down_flat().begin(), s.down_flat().end());
  return k;
}

Switch switch_from_key(const CanonicalKey& k) {
  const int m = k.size * k.size;
  if (static_cast<int>(k.cells.size()) != 2 * m) throw Error("malformed canonical key");
  std::span<const std::uint8_t> cells(k.cells);
  return switch_from_flat(k.size, cells.subspan(0, m), cells.subspan(m, m));
}

std::vector<Perm> automorphisms(const Switch& s) {
  const int n = s.size();
  auto U = s.up_flat();
  auto D = s.down_flat();
  std::vector<Perm> out;
  for (const auto& sg : all_raw_permutations(n)) {
    bool fixes = true;
    for (int i = 0; i < n && fixes; ++i) {
      for (int x = 0; x < n && fixes; ++x) {
        fixes = sg[U[i * n + x]] == U[sg[i] * n + sg[x]] && sg[D[i * n + x]] == D[sg[i] * n + sg[x]];
      }
    }
    if (fixes) out.push_back(Perm::from_raw(sg));
  }
  return out;
}

}  // namespace birack
