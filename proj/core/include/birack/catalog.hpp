#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "birack/constructions.hpp"
#include "birack/switch.hpp"
#include "birack/symmetry.hpp"

namespace birack {

enum class NameKind { Q, R, BQ, BR };

struct Name {
  NameKind kind = NameKind::Q;
  int index = 0;
  int size = 0;

  std::string str() const;
  static std::optional<Name> parse(std::string_view text);

  friend bool operator==(const Name&, const Name&) = default;
};

// Throws for not_birack.
NameKind name_kind(ClassKind k);

struct Annotation {
  std::uint64_t order = 0;
  std::vector<std::string> flags;
  int c1 = 0;
  int c2 = 0;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct CatalogEntry {
  Name name;
  Switch sw;
  ClassKind kind;
  Fingerprint fp;
  CanonicalKey key;
  std::optional<Annotation> declared;  // trailers as read, if any

  friend bool operator==(const CatalogEntry& a, const CatalogEntry& b) {
    return a.name == b.name && a.sw == b.sw && a.kind == b.kind && a.fp == b.fp && a.key == b.key;
  }
};

CatalogEntry make_entry(Name name, Switch sw, EquivalenceMode mode = EquivalenceMode::isomorphism_and_symmetry);

struct KindCounts {
  int quandles = 0;
  int racks = 0;
  int biquandles = 0;
  int biracks = 0;

  friend bool operator==(const KindCounts&, const KindCounts&) = default;
};

struct Catalog {
  int size = 0;
  EquivalenceMode mode = EquivalenceMode::isomorphism_and_symmetry;
  std::vector<CatalogEntry> entries;

  KindCounts counts() const;
  const CatalogEntry* find(const Name& name) const;
};

// The printed flags: S when up equals down; PQ or DPQ for biquandles with one or both tables pseudo.
std::vector<std::string> flags(ClassKind kind, const Fingerprint& fp);
Annotation annotation(const CatalogEntry& e);

std::string cycles_str(const Perm& p);
Perm parse_cycles(std::string_view text, int n);
std::string table_str(const ActionTable& t);
// Either "I" (needs n) or a parenthesized list of n permutations.
ActionTable parse_table(std::string_view text, std::optional<int> n = std::nullopt);

// "U=... D=..." with no name; n is needed when both tables are I.
Switch parse_switch_spec(std::string_view text, std::optional<int> n = std::nullopt);

std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::string emit_entry(const CatalogEntry& e);
std::string emit_catalog(const std::vector<CatalogEntry>& entries);

// Blocks "group NAME m", m rows of m labels, "end".
std::vector<std::pair<std::string, GroupTable>> parse_group_tables(std::string_view text);

struct Alignment {
  std::map<std::string, CanonicalKey> by_name;  // fixture name -> matched catalog key
  std::vector<std::string> unmatched_catalog;   // catalog names with no fixture
};

// Matches under iso-plus-symmetry; throws Error naming any orphaned or ambiguous fixture.
Alignment align_with_fixtures(const Catalog& catalog, const std::vector<CatalogEntry>& fixtures);

}  // namespace birack
