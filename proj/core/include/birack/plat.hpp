#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "birack/braid.hpp"
#include "birack/switch.hpp"

namespace birack {

// P(a, b) = (c, a^c) with c = b under the inverse down-action of a.
std::pair<Label, Label> op_P(const Switch& s, Label a, Label b);
// Q(a, b) = (b_e, e) with e = a under the inverse up-action of b.
std::pair<Label, Label> op_Q(const Switch& s, Label a, Label b);

struct PlatLetter {
  // V is a virtual crossing, acting as the twist.
  enum class Kind { S, S_inv, P, P_inv, Q, Q_inv, V };
  Kind kind = Kind::S;
  int pos = 1;

  friend bool operator==(const PlatLetter&, const PlatLetter&) = default;
};

// Acts on 2 * pairs strands; caps and cups join strands (2i-1, 2i).
struct PlatWord {
  int pairs = 1;
  std::vector<PlatLetter> letters;

  PlatWord inverse() const;
};

// alternating: P, Q, P, Q, ...  printed: P, Q, Q, P, P, Q, Q, ...
enum class CurlPattern { alternating, printed };

PlatLetter::Kind curl_factor(CurlPattern pattern, int j);

// |curls| kinks on strands (2i-1, 2i) of cap pair i, the last pair when i is 0. Negative
// counts walk the periodic factor sequence backwards with inverse factors.
PlatWord with_curls(const PlatWord& w, int curls, CurlPattern pattern = CurlPattern::alternating, int pair = 0);

std::uint64_t plat_phi(const Switch& s, const PlatWord& w, std::uint64_t budget = 100'000'000ULL);

std::uint64_t unknot_phi(const Switch& s, int w, CurlPattern pattern = CurlPattern::alternating);

// Labels x with x^c = c, where c is x under the inverse down-action of x.
std::uint64_t phi1_formula(const Switch& s);

// Braid strand i sits at 2i-1 going down and returns up at 2i. A braid letter on strands
// (i, i+1) moves the return strand aside with virtual crossings; tau becomes V.
PlatWord braid_closure_to_plat(const BraidWord& w);

struct SeriesOptions {
  CurlPattern pattern = CurlPattern::alternating;
  std::uint64_t budget = 100'000'000ULL;
  std::uint64_t max_period = 1'000'000ULL;
};

struct SeriesResult {
  int base_writhe = 0;
  int window = 0;
  // phi_w for w = base_writhe - window ... base_writhe + window.
  std::vector<std::uint64_t> coefficients;
  // Repeating block of phi_{base}, phi_{base+1}, ...
  std::vector<std::uint64_t> cycle;
  bool cycle_certified = false;
  // Recurrence period of the curl state map; 0 if not found.
  std::uint64_t state_period = 0;
  // phi_w = phi_{-w} wherever both lie in the window.
  bool symmetric = false;

  std::uint64_t at(int w) const;
};

SeriesResult series(const Switch& s, const BraidWord& word, int window, const SeriesOptions& opts = {});

}  // namespace birack
