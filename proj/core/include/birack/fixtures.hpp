#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "birack/braid.hpp"
#include "birack/catalog.hpp"
#include "birack/switch.hpp"

namespace birack {

// The published lists for n = 2 and n = 3, in catalog format with annotations.
std::string_view appendix_text(int n);
std::vector<CatalogEntry> appendix(int n);

struct PairFixture {
  std::string name;  // P1 ... P13
  std::string s_name;
  std::string t_name;
  Switch s;
  Switch t;
};

const std::vector<PairFixture>& pair_fixtures();
const PairFixture& pair_fixture(std::string_view name);

struct WeldedRow {
  std::string knot;
  std::vector<std::string> pairs;
  // Printed values; nullopt where the table cell is blank.
  std::vector<std::optional<std::uint64_t>> printed;
  // Our values for the blank cells, frozen on first computation.
  std::vector<std::optional<std::uint64_t>> frozen;
};

// The table words count strands from the right.
inline constexpr StrandOrder kWeldedStrandOrder = StrandOrder::from_right;

const std::vector<WeldedRow>& welded_table();

struct NamedPair {
  std::string s_name;
  std::string t_name;
};
inline const NamedPair kBigelowPair{"BQ_3^4", "BQ_9^4"};
inline const NamedPair kKishinoPair{"BQ_53^4", "BQ_26^4"};

// Every switch printed with a published name, plus I_n and twist_n for the twist.
std::optional<Switch> named_switch(std::string_view name);
std::vector<std::string> named_switch_names();

// Catalog files (*.txt) in dir, for lists published elsewhere; empty if dir is absent.
std::vector<CatalogEntry> load_fixture_dir(const std::filesystem::path& dir);

}  // namespace birack
