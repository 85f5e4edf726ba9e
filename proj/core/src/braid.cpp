#include "birack/braid.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

#include "birack/error.hpp"
#include "birack/symmetry.hpp"

namespace birack {

namespace {

using Kind = BraidLetter::Kind;

void check_letter(const BraidLetter& l, int strands) {
  if (l.index < 1 || l.index >= strands)
    throw Error("braid letter index " + std::to_string(l.index) + " out of range for " + std::to_string(strands) +
                " strands");
}

// 0-based packed action of one switch on pairs: out[a*n+b] = (a', b') as a'*n+b'.
std::vector<std::uint16_t> pair_table(const Switch& s) {
  const int n = s.size();
  auto up = s.up_flat();
  auto down = s.down_flat();
  std::vector<std::uint16_t> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = static_cast<std::uint16_t>(up[a * n + b] * n + down[b * n + a]);
  return t;
}

struct Op {
  const std::vector<std::uint16_t>* table;
  int pos;
};

struct Kernel {
  int n;
  std::vector<std::uint16_t> s, si, t;
  std::vector<Op> ops;

  Kernel(const BraidWord& w, const Switch& S, const Switch& T, StrandOrder order)
      : n(S.size()), s(pair_table(S)), si(pair_table(inverse(S))), t(pair_table(T)) {
    if (T.size() != n) throw Error("switch sizes differ");
    BraidWord r = renumbered(w, order);
    for (const auto& l : r.letters()) {
      const auto* tab = l.kind == Kind::sigma ? &s : l.kind == Kind::sigma_inverse ? &si : &t;
      ops.push_back({tab, l.index - 1});
    }
  }

  void run(std::uint8_t* x) const {
    for (const auto& op : ops) {
      int v = (*op.table)[x[op.pos] * n + x[op.pos + 1]];
      x[op.pos] = static_cast<std::uint8_t>(v / n);
      x[op.pos + 1] = static_cast<std::uint8_t>(v % n);
    }
  }
};

// Applies a word on three strands, given as (switch table, position) steps, to every triple.
using Step = std::pair<const std::vector<std::uint16_t>*, int>;

bool same_on_triples(int n, std::initializer_list<Step> lhs, std::initializer_list<Step> rhs) {
  auto go = [n](std::initializer_list<Step> w, std::array<int, 3> x) {
    for (const auto& [tab, p] : w) {
      int v = (*tab)[x[p] * n + x[p + 1]];
      x[p] = v / n;
      x[p + 1] = v % n;
    }
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (go(lhs, {a, b, c}) != go(rhs, {a, b, c})) return false;
  return true;
}

BraidWord power(int i, int e) {
  std::vector<BraidLetter> ls(static_cast<std::size_t>(std::abs(e)), {e > 0 ? Kind::sigma : Kind::sigma_inverse, i});
  return BraidWord(i + 1, std::move(ls));
}

BraidWord cat(std::initializer_list<BraidWord> ws) {
  BraidWord out;
  for (const auto& w : ws) out = concat(out, w);
  return out;
}

BraidWord commutator(const BraidWord& x, const BraidWord& y) { return cat({x, y, x.inverse(), y.inverse()}); }

struct Fixture {
  const char* name;
  const char* word;
  int strands;
};

constexpr Fixture kFixtureWords[] = {
    {"w3.1", "s1 t2 s3 -s2 -s2 -s1 t2 -s3 s2", 4},
    {"w3.2", "t1 -s2 t1 -s1 -s1 t2", 3},
    {"w4.1", "s1 t1 -s1 s2 s1 t1 -s1 -s2", 3},
    {"w4.2", "-s1 -s2 s3 t2 s1 -s4 s3 t2 s3 s4 -s3 -s2", 5},
    {"w4.3", "-s1 s2 s3 t2 s1 -s4 s3 t2 s3 s4 -s3 s2", 5},
    {"w4.4", "-s1 s2 s3 t2 s1 -s4 s3 -s2 s3 s4 -s3 t2", 5},
    {"w4.5", "t1 s2 -s1 t1 s1 s2", 3},
    {"w4.6", "-s1 -s2 t3 -s2 s1 -s4 t3 -s2 -s3 s4 -s3 s2", 5},
    {"w6.1", "-s1 -s2 -s2 -s2 s1 -s3 -s2 -s2 -s2 s3 t2", 4},
    {"trefoil", "s1 s1 s1", 2},
    {"figure8", "s1 -s2 s1 -s2", 3},
    {"K1", "s1 -s2 -s1 t2 s1 s2 -s1 t2", 3},
    {"K2", "-s1 -s2 s1 t2 -s1 s2 s1 t2", 3},
};

}  // namespace

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw Error("a braid needs at least one strand");
  for (const auto& l : letters_) check_letter(l, strands_);
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) {
    if (l.kind == Kind::sigma)
      l.kind = Kind::sigma_inverse;
    else if (l.kind == Kind::sigma_inverse)
      l.kind = Kind::sigma;
  }
  return BraidWord(strands_, std::move(out));
}

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& l : letters_) w += l.kind == Kind::sigma ? 1 : l.kind == Kind::sigma_inverse ? -1 : 0;
  return w;
}

std::string BraidWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.kind == Kind::sigma ? "s" : l.kind == Kind::sigma_inverse ? "-s" : "t";
    out += std::to_string(l.index);
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  std::vector<BraidLetter> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return BraidWord(std::max(a.strands(), b.strands()), std::move(ls));
}

BraidWord widen(const BraidWord& w, int strands) {
  if (strands < w.strands()) throw Error("cannot narrow a braid");
  return BraidWord(strands, w.letters());
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<BraidLetter> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view p) { return text.substr(i, p.size()) == p; };
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t tok = i;
    bool neg = false;
    if (text[i] == '-') {
      neg = true;
      ++i;
    } else if (starts("−")) {
      neg = true;
      i += 3;
    }
    Kind kind;
    if (i < text.size() && text[i] == 's') {
      kind = Kind::sigma;
      ++i;
    } else if (i < text.size() && text[i] == 't') {
      kind = Kind::tau;
      ++i;
    } else if (starts("σ")) {
      kind = Kind::sigma;
      i += 2;
    } else if (starts("τ")) {
      kind = Kind::tau;
      i += 2;
    } else {
      throw ParseError("malformed braid token", 1, static_cast<int>(tok) + 1);
    }
    if (neg) {
      if (kind == Kind::tau) throw ParseError("tau has no inverse form", 1, static_cast<int>(tok) + 1);
      kind = Kind::sigma_inverse;
    }
    int idx = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), idx);
    if (ec != std::errc() || p == text.data() + i) throw ParseError("missing letter index", 1, static_cast<int>(i) + 1);
    i = static_cast<std::size_t>(p - text.data());
    if (i < text.size() && !(text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
      throw ParseError("malformed braid token", 1, static_cast<int>(tok) + 1);
    if (idx < 1 || idx >= strands)
      throw ParseError("letter index " + std::to_string(idx) + " out of range", 1, static_cast<int>(tok) + 1);
    out.push_back({kind, idx});
  }
  return BraidWord(strands, std::move(out));
}

BraidWord renumbered(const BraidWord& w, StrandOrder order) {
  if (order == StrandOrder::from_left) return w;
  std::vector<BraidLetter> ls = w.letters();
  for (auto& l : ls) l.index = w.strands() - l.index;
  return BraidWord(w.strands(), std::move(ls));
}

VirtualPair check_pair(const Switch& s, const Switch& t) {
  if (s.size() != t.size()) throw Error("switch sizes differ");
  const int n = s.size();
  auto S = pair_table(s);
  auto T = pair_table(t);
  VirtualPair p{s, t};
  p.v = switch_order(t) == 2 && same_on_triples(n, {{&T, 0}, {&S, 1}, {&T, 0}}, {{&T, 1}, {&S, 0}, {&T, 1}});
  p.w1 = same_on_triples(n, {{&T, 0}, {&S, 1}, {&S, 0}}, {{&S, 1}, {&S, 0}, {&T, 1}});
  p.w2 = same_on_triples(n, {{&S, 0}, {&S, 1}, {&T, 0}}, {{&T, 1}, {&S, 0}, {&S, 1}});
  return p;
}

std::vector<Label> evaluate(const BraidWord& w, const Switch& s, const Switch& t, std::span<const Label> x,
                            StrandOrder order) {
  if (static_cast<int>(x.size()) != w.strands()) throw Error("tuple length differs from strand count");
  Kernel k(w, s, t, order);
  std::vector<std::uint8_t> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1 || x[i] > k.n) throw Error("label out of range");
    v[i] = static_cast<std::uint8_t>(x[i] - 1);
  }
  k.run(v.data());
  std::vector<Label> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] + 1;
  return out;
}

std::vector<Label> evaluate(const BraidWord& w, const VirtualPair& pair, std::span<const Label> x,
                            StrandOrder order) {
  return evaluate(w, pair.s, pair.t, x, order);
}

FixedPointResult fixed_points(const BraidWord& w, const Switch& s, const Switch& t, const FixedPointOptions& opts) {
  Kernel k(w, s, t, opts.order);
  const int m = w.strands();
  std::uint64_t space = 1;
  for (int i = 0; i < m; ++i) {
    space *= static_cast<std::uint64_t>(k.n);
    if (space > opts.budget) throw BudgetExceeded("tuple space exceeds budget", opts.budget);
  }
  FixedPointResult r{0, m, space};
  std::vector<std::uint8_t> x(m, 0), y(m);
  for (std::uint64_t c = 0; c < space; ++c) {
    y = x;
    k.run(y.data());
    if (y == x) ++r.count;
    for (int i = m - 1; i >= 0; --i) {
      if (++x[i] < k.n) break;
      x[i] = 0;
    }
  }
  return r;
}

FixedPointResult fixed_points(const BraidWord& w, const VirtualPair& pair, const FixedPointOptions& opts) {
  return fixed_points(w, pair.s, pair.t, opts);
}

std::vector<std::uint8_t> pair_key(const Switch& s, const Switch& t) {
  if (s.size() != t.size()) throw Error("switch sizes differ");
  const int n = s.size();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  std::array<std::span<const std::uint8_t>, 4> src = {s.up_flat(), s.down_flat(), t.up_flat(), t.down_flat()};
  std::vector<std::uint8_t> best, cur(4 * nn);
  for (const auto& sig : all_raw_permutations(n)) {
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < n; ++i)
        for (int x = 0; x < n; ++x) cur[k * nn + sig[i] * n + sig[x]] = sig[src[k][i * n + x]];
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

EssentialPairs find_essential_pairs(const Catalog& catalog) {
  EssentialPairs out;
  std::vector<const CatalogEntry*> reps;
  for (const auto& e : catalog.entries) {
    if (e.kind != ClassKind::quandle && e.kind != ClassKind::biquandle)
      throw Error("essential pair search needs a biquandle catalog");
    reps.push_back(&e);
  }
  for (const auto* a : reps)
    for (const auto* b : reps) {
      VirtualPair p = check_pair(a->sw, b->sw);
      if (p.essential()) out.raw.push_back(std::move(p));
    }

  const int n = catalog.size;
  std::vector<std::vector<Switch>> relabelings;
  for (const auto* b : reps) {
    std::set<CanonicalKey> seen;
    std::vector<Switch> list;
    for (const auto& raw : all_raw_permutations(n)) {
      Switch r = relabel(Perm::from_raw(raw), b->sw);
      if (seen.insert(flat_key(r)).second) list.push_back(std::move(r));
    }
    relabelings.push_back(std::move(list));
  }
  std::set<std::vector<std::uint8_t>> keys;
  for (const auto* a : reps)
    for (const auto& list : relabelings)
      for (const auto& t : list) {
        VirtualPair p = check_pair(a->sw, t);
        if (p.essential() && keys.insert(pair_key(p.s, p.t)).second) out.classes.push_back(std::move(p));
      }
  return out;
}

BraidWord bigelow(Bigelow which) {
  if (which == Bigelow::b1) {
    BraidWord psi1 = cat({power(3, -1), power(2, 1), power(1, 2), power(2, 1), power(4, 3), power(3, 1), power(2, 1)});
    BraidWord psi2 = cat({power(4, -1), power(3, 1), power(2, 1), power(1, -2), power(2, 1), power(1, 2), power(2, 2),
                          power(1, 1), power(4, 5)});
    BraidWord x = cat({psi1.inverse(), power(4, 1), psi1});
    BraidWord y = cat({psi2.inverse(), power(4, 1), power(3, 1), power(2, 1), power(1, 2), power(2, 1), power(3, 1),
                       power(4, 1), psi2});
    return widen(commutator(x, y), 5);
  }
  BraidWord phi1 = cat({power(4, 1), power(5, -1), power(2, -1), power(1, 1)});
  BraidWord phi2 = cat({power(4, -1), power(5, 2), power(2, 1), power(1, -2)});
  return widen(commutator(cat({phi1.inverse(), power(3, 1), phi1}), cat({phi2.inverse(), power(3, 1), phi2})), 6);
}

int closure_components(const BraidWord& w) {
  const int m = w.strands();
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  for (const auto& l : w.letters()) std::swap(perm[l.index - 1], perm[l.index]);
  std::vector<bool> seen(m, false);
  int cycles = 0;
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

BraidWord fixture_word(std::string_view name) {
  if (name == "bbb") {
    BraidWord b = concat(bigelow(Bigelow::b2), parse_braid("t1 s2 t3 t4 t5 t6", 7));
    return cat({b, b, b});
  }
  for (const auto& f : kFixtureWords)
    if (name == f.name) return parse_braid(f.word, f.strands);
  throw Error("unknown fixture word: " + std::string(name));
}

std::vector<std::string> fixture_word_names() {
  std::vector<std::string> out;
  for (const auto& f : kFixtureWords) out.emplace_back(f.name);
  out.emplace_back("bbb");
  return out;
}

bool weld_identities(const Switch& s) {
  const int n = s.size();
  auto up = s.up_flat();
  auto down = s.down_flat();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (up[c * n + up[b * n + a]] != up[b * n + up[c * n + a]]) return false;
        if (down[up[c * n + b] * n + a] != down[b * n + a]) return false;
      }
  return true;
}

}  // namespace birack
