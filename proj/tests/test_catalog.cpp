#include <doctest.h>

#include <birack/catalog.hpp>
#include <birack/enumerate.hpp>
#include <birack/error.hpp>
#include <birack/fixtures.hpp>

using namespace birack;

TEST_CASE("cycle notation") {
  CHECK(cycles_str(Perm({1, 3, 2})) == "(23)");
  CHECK(cycles_str(Perm::identity(3)) == "i");
  CHECK(cycles_str(Perm({2, 1, 4, 3})) == "(12)(34)");
  CHECK(parse_cycles("(132)", 3) == Perm({3, 1, 2}));
  CHECK(parse_cycles("ι", 3).is_identity());
  CHECK(parse_cycles("()", 2).is_identity());
  CHECK_THROWS_AS(parse_cycles("(14)", 3), Error);
  CHECK_THROWS_AS(parse_cycles("(122)", 3), Error);
  CHECK(parse_table("I", 3) == identity_table(3));
  CHECK(parse_table("ι", 3) == identity_table(3));
  CHECK(parse_table("( (12), i )").size() == 2);
}

TEST_CASE("catalog lines") {
  auto e = parse_catalog("BQ_3^3 U=(i,(132),(123)) D=((23),(23),(23))");
  REQUIRE(e.size() == 1);
  CHECK(e[0].name.str() == "BQ_3^3");
  CHECK(e[0].sw == *named_switch("BQ_3^3"));
  CHECK(e[0].kind == ClassKind::biquandle);

  auto r = parse_catalog("R_1^2 U=((12),(12)) D=I");
  REQUIRE(r.size() == 1);
  CHECK(r[0].sw.down() == identity_table(2));
  CHECK(r[0].kind == ClassKind::rack);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_catalog("# header\nBQ_1^2 U=((12),(12)) D=((12),(1x))\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_catalog("Q_1^2 U=((12),(12)) D=I"), ParseError);  // a rack, not a quandle
  CHECK_THROWS_AS(parse_catalog("Q_1^3 U=((12),(12)) D=I"), ParseError);  // size 2 tables
  CHECK_THROWS_AS(parse_catalog("X_1^2 U=I D=I"), ParseError);
}

TEST_CASE("size 2 and 3 lists round trip with annotations") {
  for (int n : {2, 3}) {
    auto entries = appendix(n);
    CHECK(entries.size() == (n == 2 ? 3u : 16u));
    std::string text = emit_catalog(entries);
    auto again = parse_catalog(text);
    CHECK(again == entries);
    CHECK(emit_catalog(again) == text);
    for (const auto& e : entries) {
      INFO(e.name.str());
      REQUIRE(e.declared);
      CHECK(*e.declared == annotation(e));
      CHECK(verify_axioms(e.sw).birack());
    }
  }
}

TEST_CASE("alignment with enumerated classes") {
  for (int n : {2, 3}) {
    SearchOptions o;
    o.size = n;
    Catalog c = enumerate_biracks(o);
    Alignment a = align_with_fixtures(c, appendix(n));
    CHECK(a.by_name.size() == c.entries.size());
    CHECK(a.unmatched_catalog.empty());
  }
  SearchOptions o;
  o.size = 3;
  Catalog c = enumerate_biracks(o);
  const auto key = canonical_key(*named_switch("BQ_6^3"), EquivalenceMode::isomorphism_and_symmetry);
  std::erase_if(c.entries, [&](const CatalogEntry& e) { return e.key == key; });
  try {
    align_with_fixtures(c, appendix(3));
    FAIL("expected an alignment error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("BQ_6^3") != std::string::npos);
  }
}

TEST_CASE("group blocks are skipped by the catalog parser") {
  const char* text = "group Z2 2\n1 2\n2 1\nend\nQ_1^2 U=I D=I\n";
  CHECK(parse_catalog(text).size() == 1);
  auto g = parse_group_tables(text);
  REQUIRE(g.size() == 1);
  CHECK(g[0].first == "Z2");
  CHECK(g[0].second.mul(2, 2) == 1);
}

TEST_CASE("pair fixtures are essential") {
  CHECK(pair_fixtures().size() == 13);
  for (const auto& p : pair_fixtures()) {
    INFO(p.name);
    auto v = check_pair(p.s, p.t);
    CHECK(v.essential());
    auto ks = classify(p.s), kt = classify(p.t);
    CHECK((ks == ClassKind::quandle || ks == ClassKind::biquandle));
    CHECK((kt == ClassKind::quandle || kt == ClassKind::biquandle));
  }
}

TEST_CASE("named switches have their declared class") {
  for (const auto& name : named_switch_names()) {
    INFO(name);
    auto nm = Name::parse(name);
    REQUIRE(nm);
    CHECK(name_kind(classify(*named_switch(name))) == nm->kind);
    CHECK(named_switch(name)->size() == nm->size);
  }
  CHECK_FALSE(named_switch("BQ_99^9"));
  CHECK(named_switch("twist_5") == twist(5));
}

TEST_CASE("optional fixture directory") {
  CHECK(load_fixture_dir("/nonexistent/fixture/dir").empty());
}
