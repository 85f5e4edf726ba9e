#include "birack/plat.hpp"

#include <algorithm>
#include <array>

#include "birack/error.hpp"

namespace birack {

namespace {

using Kind = PlatLetter::Kind;
using Table = std::vector<std::uint16_t>;

struct PlatTables {
  int n;
  std::array<Table, 7> t;

  explicit PlatTables(const Switch& s) : n(s.size()) {
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    auto up = s.up_flat();
    auto down = s.down_flat();
    auto ui = s.up_inv_flat();
    auto di = s.down_inv_flat();
    for (auto& x : t) x.assign(nn, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = a * n + b;
        t[idx(Kind::S)][ab] = static_cast<std::uint16_t>(up[a * n + b] * n + down[b * n + a]);
        const int c = di[a * n + b];
        t[idx(Kind::P)][ab] = static_cast<std::uint16_t>(c * n + up[c * n + a]);
        const int e = ui[b * n + a];
        t[idx(Kind::Q)][ab] = static_cast<std::uint16_t>(down[e * n + b] * n + e);
        t[idx(Kind::V)][ab] = static_cast<std::uint16_t>(b * n + a);
      }
    for (Kind k : {Kind::S, Kind::P, Kind::Q}) {
      const Table& f = t[idx(k)];
      Table& g = t[idx(k) + 1];
      std::vector<bool> hit(nn, false);
      for (std::size_t p = 0; p < nn; ++p) {
        if (hit[f[p]]) throw Error("switch is not invertible");
        hit[f[p]] = true;
        g[f[p]] = static_cast<std::uint16_t>(p);
      }
    }
  }

  static int idx(Kind k) { return static_cast<int>(k); }
  const Table& of(Kind k) const { return t[idx(k)]; }

  void run(const PlatWord& w, std::uint8_t* x) const {
    for (const auto& l : w.letters) {
      const int p = l.pos - 1;
      const int v = of(l.kind)[x[p] * n + x[p + 1]];
      x[p] = static_cast<std::uint8_t>(v / n);
      x[p + 1] = static_cast<std::uint8_t>(v % n);
    }
  }
};

Kind inverse_kind(Kind k) {
  switch (k) {
    case Kind::S: return Kind::S_inv;
    case Kind::S_inv: return Kind::S;
    case Kind::P: return Kind::P_inv;
    case Kind::P_inv: return Kind::P;
    case Kind::Q: return Kind::Q_inv;
    case Kind::Q_inv: return Kind::Q;
    case Kind::V: return Kind::V;
  }
  return k;
}

int pattern_period(CurlPattern p) { return p == CurlPattern::alternating ? 2 : 4; }

// Phase of the j-th factor met walking the periodic curl sequence backwards.
int back_phase(CurlPattern p, int j) {
  const int m = pattern_period(p);
  return ((-j) % m + m) % m;
}

std::uint64_t diagonal_space(int n, int pairs, std::uint64_t budget) {
  std::uint64_t space = 1;
  for (int i = 0; i < pairs; ++i) {
    space *= static_cast<std::uint64_t>(n);
    if (space > budget) throw BudgetExceeded("diagonal exceeds budget", budget);
  }
  return space;
}

// Calls fn on the image of every element of the pair diagonal.
template <typename Fn>
void sweep_diagonal(const PlatTables& tabs, const PlatWord& w, std::uint64_t budget, Fn&& fn) {
  const int n = tabs.n;
  const int k = w.pairs;
  const std::uint64_t space = diagonal_space(n, k, budget);
  std::vector<std::uint8_t> x(k, 0), y(2 * k);
  for (std::uint64_t c = 0; c < space; ++c) {
    for (int i = 0; i < k; ++i) y[2 * i] = y[2 * i + 1] = x[i];
    tabs.run(w, y.data());
    fn(y);
    for (int i = k - 1; i >= 0; --i) {
      if (++x[i] < n) break;
      x[i] = 0;
    }
  }
}

bool on_diagonal(const std::vector<std::uint8_t>& y) {
  for (std::size_t i = 0; i + 1 < y.size(); i += 2)
    if (y[i] != y[i + 1]) return false;
  return true;
}

std::vector<std::uint64_t> minimal_block(const std::vector<std::uint64_t>& c, std::size_t period) {
  for (std::size_t d = 1; d <= period; ++d) {
    if (period % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < period && ok; ++i) ok = c[i] == c[i - d];
    if (ok) return {c.begin(), c.begin() + d};
  }
  return {c.begin(), c.begin() + period};
}

}  // namespace

std::pair<Label, Label> op_P(const Switch& s, Label a, Label b) {
  const int n = s.size();
  const int c = s.down_inv_flat()[(a - 1) * n + (b - 1)];
  return {c + 1, s.up_flat()[c * n + (a - 1)] + 1};
}

std::pair<Label, Label> op_Q(const Switch& s, Label a, Label b) {
  const int n = s.size();
  const int e = s.up_inv_flat()[(b - 1) * n + (a - 1)];
  return {s.down_flat()[e * n + (b - 1)] + 1, e + 1};
}

PlatWord PlatWord::inverse() const {
  PlatWord out{pairs, {letters.rbegin(), letters.rend()}};
  for (auto& l : out.letters) l.kind = inverse_kind(l.kind);
  return out;
}

PlatLetter::Kind curl_factor(CurlPattern pattern, int j) {
  if (pattern == CurlPattern::alternating) return j % 2 == 0 ? Kind::P : Kind::Q;
  return (j % 4 == 0 || j % 4 == 3) ? Kind::P : Kind::Q;
}

PlatWord with_curls(const PlatWord& w, int curls, CurlPattern pattern, int pair) {
  if (pair == 0) pair = w.pairs;
  if (pair < 1 || pair > w.pairs) throw Error("curl pair out of range");
  const int pos = 2 * pair - 1;
  PlatWord out = w;
  if (curls >= 0) {
    for (int j = 0; j < curls; ++j) out.letters.push_back({curl_factor(pattern, j), pos});
  } else {
    for (int j = 1; j <= -curls; ++j) out.letters.push_back({inverse_kind(curl_factor(pattern, back_phase(pattern, j))), pos});
  }
  return out;
}

std::uint64_t plat_phi(const Switch& s, const PlatWord& w, std::uint64_t budget) {
  for (const auto& l : w.letters)
    if (l.pos < 1 || l.pos >= 2 * w.pairs) throw Error("plat letter position out of range");
  PlatTables tabs(s);
  std::uint64_t count = 0;
  sweep_diagonal(tabs, w, budget, [&](const std::vector<std::uint8_t>& y) { count += on_diagonal(y); });
  return count;
}

std::uint64_t unknot_phi(const Switch& s, int w, CurlPattern pattern) {
  return plat_phi(s, with_curls(PlatWord{1, {}}, w, pattern));
}

std::uint64_t phi1_formula(const Switch& s) {
  const int n = s.size();
  std::uint64_t count = 0;
  for (Label x = 1; x <= n; ++x) {
    Label c = 0;
    for (Label y = 1; y <= n; ++y)
      if (s.down_action(x, y) == x) c = y;
    if (s.up_action(c, x) == c) ++count;
  }
  return count;
}

PlatWord braid_closure_to_plat(const BraidWord& w) {
  PlatWord out{w.strands(), {}};
  for (const auto& l : w.letters()) {
    const int i = l.index;
    Kind k = l.kind == BraidLetter::Kind::sigma           ? Kind::S
             : l.kind == BraidLetter::Kind::sigma_inverse ? Kind::S_inv
                                                          : Kind::V;
    out.letters.push_back({Kind::V, 2 * i});
    out.letters.push_back({k, 2 * i - 1});
    out.letters.push_back({Kind::V, 2 * i});
  }
  return out;
}

std::uint64_t SeriesResult::at(int w) const {
  const int i = w - (base_writhe - window);
  if (i < 0 || i >= static_cast<int>(coefficients.size())) throw Error("writhe outside the computed window");
  return coefficients[i];
}

SeriesResult series(const Switch& s, const BraidWord& word, int window, const SeriesOptions& opts) {
  if (window < 0) throw Error("negative series window");
  PlatTables tabs(s);
  const int n = tabs.n;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  const PlatWord plat = braid_closure_to_plat(word);
  const int k = plat.pairs;

  // Curls only touch the last two strands, so only the weight of each final pair matters.
  std::vector<std::uint64_t> weight(nn, 0);
  sweep_diagonal(tabs, plat, opts.budget, [&](const std::vector<std::uint8_t>& y) {
    for (int i = 0; i + 1 < k; ++i)
      if (y[2 * i] != y[2 * i + 1]) return;
    ++weight[y[2 * k - 2] * n + y[2 * k - 1]];
  });
  std::vector<std::uint16_t> support;
  for (std::size_t p = 0; p < nn; ++p)
    if (weight[p]) support.push_back(static_cast<std::uint16_t>(p));

  auto count = [&](const std::vector<std::uint16_t>& img) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < support.size(); ++i)
      if (img[i] / n == img[i] % n) c += weight[support[i]];
    return c;
  };

  SeriesResult r;
  r.base_writhe = word.writhe();
  r.window = window;

  std::vector<std::uint64_t> pos;
  std::vector<std::uint16_t> cur = support;
  const int phase = pattern_period(opts.pattern);
  for (std::uint64_t j = 0;; ++j) {
    pos.push_back(count(cur));
    const Table& f = tabs.of(curl_factor(opts.pattern, static_cast<int>(j % phase)));
    for (auto& p : cur) p = f[p];
    if ((j + 1) % phase == 0 && cur == support) {
      r.state_period = j + 1;
      break;
    }
    if (j + 1 >= opts.max_period) break;
  }
  const std::size_t computed = pos.size();
  for (std::size_t j = computed; j <= static_cast<std::size_t>(window); ++j) {
    if (r.state_period) {
      pos.push_back(pos[j % r.state_period]);
      continue;
    }
    std::vector<std::uint16_t> img = support;
    for (std::size_t i = 0; i < j; ++i)
      for (auto& p : img) p = tabs.of(curl_factor(opts.pattern, static_cast<int>(i % phase)))[p];
    pos.push_back(count(img));
  }

  std::vector<std::uint64_t> neg(window + 1, 0);
  if (r.state_period) {
    for (int j = 1; j <= window; ++j) neg[j] = pos[(r.state_period - j % r.state_period) % r.state_period];
  } else {
    std::vector<std::uint16_t> img = support;
    for (int j = 1; j <= window; ++j) {
      const Table& f = tabs.of(inverse_kind(curl_factor(opts.pattern, back_phase(opts.pattern, j))));
      for (auto& p : img) p = f[p];
      neg[j] = count(img);
    }
  }

  for (int j = window; j >= 1; --j) r.coefficients.push_back(neg[j]);
  for (int j = 0; j <= window; ++j) r.coefficients.push_back(pos[j]);

  if (r.state_period) {
    r.cycle_certified = true;
    r.cycle = minimal_block(pos, r.state_period);
  } else {
    const std::size_t m = std::min<std::size_t>(pos.size(), window + 1);
    for (std::size_t d = 1; 2 * d <= m && r.cycle.empty(); ++d) {
      bool ok = true;
      for (std::size_t i = d; i < m && ok; ++i) ok = pos[i] == pos[i - d];
      if (ok) r.cycle.assign(pos.begin(), pos.begin() + d);
    }
  }

  r.symmetric = true;
  const int lo = r.base_writhe - window, hi = r.base_writhe + window;
  for (int w = lo; w <= hi; ++w)
    if (-w >= lo && -w <= hi && r.at(w) != r.at(-w)) r.symmetric = false;
  return r;
}

}  // namespace birack
