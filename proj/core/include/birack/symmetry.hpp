#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "birack/perm.hpp"
#include "birack/switch.hpp"

namespace birack {

enum class SymmetryElement { identity, mirror, reverse, mirror_reverse };

// isomorphism: relabelings only, with rack orientation normalized first.
// isomorphism_and_symmetry: relabelings combined with the four symmetry images.
enum class EquivalenceMode { isomorphism, isomorphism_and_symmetry };

std::string to_string(EquivalenceMode m);

// Up table followed by down table, 0-based, row-major by column.
struct CanonicalKey {
  int size = 0;
  std::vector<std::uint8_t> cells;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const;
};

// New column sigma(b) is sigma o column(b) o sigma^-1.
Switch relabel(const Perm& sigma, const Switch& s);

// mirror is the inverse switch, reverse exchanges up and down.
Switch symmetry_image(SymmetryElement g, const Switch& s);

// A rack with trivial up table is rewritten with trivial down table; anything else is unchanged.
Switch normalize_entry(const Switch& s);
bool is_normalized(const Switch& s);

// The least flattened table over the class members that are normalized.
CanonicalKey canonical_key(const Switch& s, EquivalenceMode mode);
// The member realizing canonical_key.
Switch canonical_form(const Switch& s, EquivalenceMode mode);

bool equivalent(const Switch& a, const Switch& b, EquivalenceMode mode);

CanonicalKey flat_key(const Switch& s);
Switch switch_from_key(const CanonicalKey& k);

// Relabelings fixing s.
std::vector<Perm> automorphisms(const Switch& s);

// All permutations of 0..n-1 in lexicographic order, 0-based.
const std::vector<std::vector<std::uint8_t>>& all_raw_permutations(int n);

}  // namespace birack
