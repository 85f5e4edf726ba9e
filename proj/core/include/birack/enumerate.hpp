#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "birack/catalog.hpp"
#include "birack/switch.hpp"
#include "birack/symmetry.hpp"

namespace birack {

struct SearchOptions {
  int size = 0;
  EquivalenceMode mode = EquivalenceMode::isomorphism_and_symmetry;
  std::optional<ClassKind> kind_filter;
  // Search quandle-related biracks instead; fixed_down is then ignored.
  bool quandle_related = false;
  std::optional<ActionTable> fixed_down;
  std::uint64_t node_limit = 1'000'000'000ULL;
  int jobs = 1;
};

// One representative per class, sorted by key, named by position within each kind.
Catalog enumerate_biracks(const SearchOptions& opts);

// For every quandle of size n taken as the down table, every up table giving a birack.
Catalog enumerate_quandle_related(int n, EquivalenceMode mode, std::uint64_t node_limit = 1'000'000'000ULL,
                                  int jobs = 1);

// Reorders and renames a catalog as a lexicographic search over S, viewed as a permutation of
// the pairs, would list it: each class keeps the first member met, except that a rack keeps the
// last member met, stored with trivial down table.
Catalog search_order(const Catalog& c);

// Raw solutions of B2 and B3, as 0-based flat up and down tables. The callback may run on
// several threads when jobs > 1. Returns the number of search nodes visited.
using RawSolutionFn = std::function<void(std::span<const std::uint8_t>, std::span<const std::uint8_t>)>;
std::uint64_t search_raw_biracks(int n, std::optional<ActionTable> fixed_down, std::uint64_t node_limit, int jobs,
                                 const RawSolutionFn& on_solution);

}  // namespace birack
