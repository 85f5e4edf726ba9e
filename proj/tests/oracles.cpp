#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace oracle {

using birack::ActionTable;
using birack::ClassKind;
using birack::EquivalenceMode;
using birack::Perm;

PairMap pair_map(const Switch& s) {
  const int n = s.size();
  PairMap m;
  for (Label a = 1; a <= n; ++a)
    for (Label b = 1; b <= n; ++b) m.push_back(s.apply(a, b));
  return m;
}

bool bijective(const Switch& s) {
  auto m = pair_map(s);
  std::set<std::pair<Label, Label>> img(m.begin(), m.end());
  return img.size() == m.size();
}

namespace {

using Triple = std::vector<Label>;

void apply_at(const Switch& s, Triple& x, int pos) {
  auto [p, q] = s.apply(x[pos], x[pos + 1]);
  x[pos] = p;
  x[pos + 1] = q;
}

std::vector<Triple> all_tuples(int n, int k) {
  std::vector<Triple> out;
  Triple x(k, 1);
  while (true) {
    out.push_back(x);
    int i = k - 1;
    while (i >= 0 && x[i] == n) x[i--] = 1;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

bool trivial(const ActionTable& t) {
  return std::all_of(t.begin(), t.end(), [](const Perm& p) { return p.is_identity(); });
}

ActionTable table_from(int n, const std::vector<std::vector<Label>>& cols) {
  ActionTable t;
  for (int i = 0; i < n; ++i) t.emplace_back(cols[i]);
  return t;
}

}  // namespace

bool yang_baxter(const Switch& s) {
  for (auto x : all_tuples(s.size(), 3)) {
    Triple l = x, r = x;
    apply_at(s, l, 0);
    apply_at(s, l, 1);
    apply_at(s, l, 0);
    apply_at(s, r, 1);
    apply_at(s, r, 0);
    apply_at(s, r, 1);
    if (l != r) return false;
  }
  return true;
}

bool x_half(const Switch& s) {
  const int n = s.size();
  for (Label a = 1; a <= n; ++a) {
    int hits = 0;
    for (Label x = 1; x <= n; ++x)
      if (s.apply(x, a) == std::make_pair(x, a)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

bool b1(const Switch& s) {
  const int n = s.size();
  if (!x_half(s)) return false;
  for (Label a = 1; a <= n; ++a) {
    int hits = 0;
    for (Label y = 1; y <= n; ++y)
      if (s.apply(a, y) == std::make_pair(a, y)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

std::optional<Switch> inverse(const Switch& s) {
  const int n = s.size();
  if (!bijective(s)) return std::nullopt;
  std::map<std::pair<Label, Label>, std::pair<Label, Label>> inv;
  for (Label a = 1; a <= n; ++a)
    for (Label b = 1; b <= n; ++b) inv[s.apply(a, b)] = {a, b};
  // inverse(c, d) = (d^c, c_d) in switch form
  std::vector<std::vector<Label>> up(n, std::vector<Label>(n)), down(n, std::vector<Label>(n));
  for (Label c = 1; c <= n; ++c)
    for (Label d = 1; d <= n; ++d) {
      auto [a, b] = inv[{c, d}];
      up[c - 1][d - 1] = a;
      down[d - 1][c - 1] = b;
    }
  try {
    Switch out(table_from(n, up), table_from(n, down));
    for (Label c = 1; c <= n; ++c)
      for (Label d = 1; d <= n; ++d)
        if (out.apply(c, d) != inv[{c, d}]) return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ClassKind classify(const Switch& s) {
  if (!bijective(s) || !oracle::inverse(s) || !yang_baxter(s)) return ClassKind::not_birack;
  const bool rack = trivial(s.up()) || trivial(s.down());
  const bool bq = b1(s);
  if (rack) return bq ? ClassKind::quandle : ClassKind::rack;
  return bq ? ClassKind::biquandle : ClassKind::birack;
}

std::uint64_t order(const Switch& s) {
  auto m = pair_map(s);
  const int n = s.size();
  auto step = [&](std::pair<Label, Label> p) { return m[(p.first - 1) * n + p.second - 1]; };
  std::uint64_t k = 1;
  for (Label a = 1; a <= n; ++a)
    for (Label b = 1; b <= n; ++b) {
      std::uint64_t len = 1;
      for (auto p = step({a, b}); p != std::make_pair(a, b); p = step(p)) ++len;
      k = std::lcm(k, len);
    }
  return k;
}

Switch relabel(const std::vector<Label>& sigma, const Switch& s) {
  const int n = s.size();
  std::vector<Label> inv(n);
  for (int i = 0; i < n; ++i) inv[sigma[i] - 1] = i + 1;
  // new operations: x op y = sigma(sigma^-1 x op sigma^-1 y)
  std::vector<std::vector<Label>> up(n, std::vector<Label>(n)), down(n, std::vector<Label>(n));
  for (Label a = 1; a <= n; ++a)
    for (Label x = 1; x <= n; ++x) {
      up[a - 1][x - 1] = sigma[s.up_action(inv[a - 1], inv[x - 1]) - 1];
      down[a - 1][x - 1] = sigma[s.down_action(inv[a - 1], inv[x - 1]) - 1];
    }
  return Switch(table_from(n, up), table_from(n, down));
}

Switch swap_tables(const Switch& s) { return Switch(s.down(), s.up()); }

std::vector<int> flat(const Switch& s) {
  std::vector<int> v;
  for (const auto* t : {&s.up(), &s.down()})
    for (const auto& p : *t)
      for (Label x = 1; x <= s.size(); ++x) v.push_back(p(x));
  return v;
}

std::vector<int> class_key(const Switch& s, EquivalenceMode mode) {
  const int n = s.size();
  auto listable = [](const Switch& x) { return !(trivial(x.up()) && !trivial(x.down())); };
  std::vector<Switch> forms;
  if (mode == EquivalenceMode::isomorphism) {
    forms.push_back(listable(s) ? s : swap_tables(s));
  } else {
    Switch m = *oracle::inverse(s);
    for (const Switch& f : {s, m, swap_tables(s), *oracle::inverse(swap_tables(s)), swap_tables(m)})
      if (listable(f)) forms.push_back(f);
  }
  std::vector<Label> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<int> best;
  do {
    for (const auto& f : forms) {
      auto k = flat(relabel(sigma, f));
      if (best.empty() || k < best) best = k;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

std::set<std::vector<int>> brute_force_classes(int n, EquivalenceMode mode) {
  std::vector<std::vector<Label>> perms;
  std::vector<Label> p(n);
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::set<std::vector<int>> out;
  std::vector<int> idx(2 * n, 0);
  while (true) {
    std::vector<std::vector<Label>> up, down;
    for (int i = 0; i < n; ++i) up.push_back(perms[idx[i]]);
    for (int i = 0; i < n; ++i) down.push_back(perms[idx[n + i]]);
    Switch s(table_from(n, up), table_from(n, down));
    if (bijective(s) && oracle::inverse(s) && yang_baxter(s)) out.insert(class_key(s, mode));
    int i = 2 * n - 1;
    while (i >= 0 && idx[i] == m - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return out;
}

std::vector<Label> evaluate(const birack::BraidWord& w, const Switch& s, const Switch& t, std::vector<Label> x) {
  const Switch si = *oracle::inverse(s);
  for (const auto& l : w.letters()) {
    const Switch& m = l.kind == birack::BraidLetter::Kind::sigma           ? s
                      : l.kind == birack::BraidLetter::Kind::sigma_inverse ? si
                                                                          : t;
    apply_at(m, x, l.index - 1);
  }
  return x;
}

std::uint64_t fixed_points(const birack::BraidWord& w, const Switch& s, const Switch& t) {
  std::uint64_t c = 0;
  for (const auto& x : all_tuples(s.size(), w.strands()))
    if (evaluate(w, s, t, x) == x) ++c;
  return c;
}

bool relation(const Switch& s, const Switch& t, const char* lhs, const char* rhs) {
  auto run = [&](const char* word, Triple x) {
    std::istringstream in(word);
    std::string tok;
    while (in >> tok) apply_at(tok[0] == 'S' ? s : t, x, tok[1] - '1');
    return x;
  };
  for (const auto& x : all_tuples(s.size(), 3))
    if (run(lhs, x) != run(rhs, x)) return false;
  return true;
}

}  // namespace oracle
