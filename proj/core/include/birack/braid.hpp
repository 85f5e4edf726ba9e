#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "birack/catalog.hpp"
#include "birack/switch.hpp"

namespace birack {

struct BraidLetter {
  enum class Kind { sigma, sigma_inverse, tau };
  Kind kind = Kind::sigma;
  int index = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<BraidLetter> letters);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  // Reverses the letters and flips each sign.
  BraidWord inverse() const;
  // Exponent sum of the classical letters.
  int writhe() const;
  std::string str() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<BraidLetter> letters_;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
// Same word viewed on more strands.
BraidWord widen(const BraidWord& w, int strands);

// Tokens sN, -sN, tN separated by whitespace; σN, τN, −σN also accepted.
BraidWord parse_braid(std::string_view text, int strands);

// from_right reads σ_i as acting on the i-th and (i+1)-th strands counted from the right.
enum class StrandOrder { from_left, from_right };

BraidWord renumbered(const BraidWord& w, StrandOrder order);

struct VirtualPair {
  Switch s;
  Switch t;
  bool v = false;
  bool w1 = false;
  bool w2 = false;

  bool essential() const { return v && w1 && !w2; }
};

VirtualPair check_pair(const Switch& s, const Switch& t);

// Letters act left to right: σ_i by S on positions (i, i+1), σ_i^-1 by the inverse of S, τ_i by T.
std::vector<Label> evaluate(const BraidWord& w, const Switch& s, const Switch& t, std::span<const Label> x,
                            StrandOrder order = StrandOrder::from_left);
std::vector<Label> evaluate(const BraidWord& w, const VirtualPair& pair, std::span<const Label> x,
                            StrandOrder order = StrandOrder::from_left);

struct FixedPointOptions {
  std::uint64_t budget = 100'000'000ULL;
  StrandOrder order = StrandOrder::from_left;
};

struct FixedPointResult {
  std::uint64_t count = 0;
  int strands = 0;
  std::uint64_t tuple_space_size = 0;
};

FixedPointResult fixed_points(const BraidWord& w, const Switch& s, const Switch& t, const FixedPointOptions& opts = {});
FixedPointResult fixed_points(const BraidWord& w, const VirtualPair& pair, const FixedPointOptions& opts = {});

struct EssentialPairs {
  // Ordered pairs of catalog representatives, in catalog order.
  std::vector<VirtualPair> raw;
  // Essential pairs (S, T) with S a representative and T any relabeling of one,
  // one per orbit under simultaneous relabeling.
  std::vector<VirtualPair> classes;
};

EssentialPairs find_essential_pairs(const Catalog& catalog);

// Least flattening of (S, T) under simultaneous relabeling.
std::vector<std::uint8_t> pair_key(const Switch& s, const Switch& t);

enum class Bigelow { b1, b2 };
BraidWord bigelow(Bigelow which);

// Cycles of the strand permutation; every letter transposes its two strands.
int closure_components(const BraidWord& w);

// w3.1 ... w6.1, bbb, trefoil, figure8, K1, K2.
BraidWord fixture_word(std::string_view name);
std::vector<std::string> fixture_word_names();

// (a^b)^c = (a^c)^b and a_{b^c} = a_b for all a, b, c. With the twist at virtual
// crossings, these are exactly the biquandles passing the first forbidden move.
bool weld_identities(const Switch& s);

}  // namespace birack
