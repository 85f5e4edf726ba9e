#include <doctest.h>

#include <set>

#include <birack/constructions.hpp>
#include <birack/enumerate.hpp>
#include <birack/error.hpp>
#include <birack/fixtures.hpp>
#include <birack/plat.hpp>

using namespace birack;

namespace {

using PK = PlatLetter::Kind;

std::vector<CatalogEntry> catalog(int n) {
  SearchOptions o;
  o.size = n;
  return enumerate_biracks(o).entries;
}

BraidWord stabilized(const BraidWord& w, int j) {
  BraidWord out = w;
  for (int i = 0; i < std::abs(j); ++i) {
    const int k = out.strands();
    out = concat(widen(out, k + 1),
                 BraidWord(k + 1, {{j > 0 ? BraidLetter::Kind::sigma : BraidLetter::Kind::sigma_inverse, k}}));
  }
  return out;
}

}  // namespace

TEST_CASE("P and Q of the twist are swaps") {
  Switch t = twist(4);
  for (Label a = 1; a <= 4; ++a)
    for (Label b = 1; b <= 4; ++b) {
      CHECK(op_P(t, a, b) == std::pair<Label, Label>{b, a});
      CHECK(op_Q(t, a, b) == std::pair<Label, Label>{b, a});
    }
}

TEST_CASE("P and Q are bijections") {
  for (const auto& e : catalog(3)) {
    std::set<std::pair<Label, Label>> p, q;
    for (Label a = 1; a <= 3; ++a)
      for (Label b = 1; b <= 3; ++b) {
        p.insert(op_P(e.sw, a, b));
        q.insert(op_Q(e.sw, a, b));
      }
    CHECK(p.size() == 9);
    CHECK(q.size() == 9);
  }
}

TEST_CASE("P solves the sideways crossing") {
  for (const auto& e : catalog(3)) {
    const Switch& s = e.sw;
    for (Label a = 1; a <= 3; ++a)
      for (Label b = 1; b <= 3; ++b) {
        auto [c, d] = op_P(s, a, b);
        CHECK(s.down_action(a, c) == b);
        CHECK(s.up_action(c, a) == d);
        auto [f, g] = op_Q(s, a, b);
        CHECK(s.up_action(b, g) == a);
        CHECK(s.down_action(g, b) == f);
      }
  }
}

TEST_CASE("unknot coefficients") {
  for (int n : {2, 3}) {
    for (const auto& e : catalog(n)) {
      INFO(e.name.str());
      CHECK(unknot_phi(e.sw, 0) == static_cast<std::uint64_t>(n));
      CHECK(unknot_phi(e.sw, 1) == phi1_formula(e.sw));
      for (int w = 1; w <= 6; ++w) CHECK(unknot_phi(e.sw, w) == unknot_phi(e.sw, -w));
    }
  }
  for (int w = -5; w <= 5; ++w) CHECK(unknot_phi(twist(5), w) == 5);
}

TEST_CASE("plat_phi") {
  Switch s = *named_switch("BQ_3^3");
  CHECK(plat_phi(s, PlatWord{2, {}}) == 9);
  PlatWord w{1, {{PK::P, 1}}};
  CHECK(plat_phi(s, w) == phi1_formula(s));
  PlatWord r{2, {{PK::P, 1}, {PK::S, 2}, {PK::Q_inv, 3}, {PK::V, 2}, {PK::P, 3}}};
  for (const auto& e : catalog(3)) CHECK(plat_phi(e.sw, r) == plat_phi(e.sw, r.inverse()));
  CHECK_THROWS_AS(plat_phi(s, PlatWord{1, {{PK::S, 2}}}), Error);
  CHECK_THROWS_AS(plat_phi(s, PlatWord{3, {}}, 10), BudgetExceeded);
}

TEST_CASE("braid closures as plats") {
  for (const auto& e : catalog(3)) {
    const Switch& s = e.sw;
    CHECK(plat_phi(s, braid_closure_to_plat(parse_braid("", 1))) == 3);
    CHECK(plat_phi(s, braid_closure_to_plat(parse_braid("s1 -s1", 2))) == 9);
    CHECK(plat_phi(s, braid_closure_to_plat(parse_braid("s1", 2))) == unknot_phi(s, 1));
    CHECK(plat_phi(s, braid_closure_to_plat(parse_braid("-s1", 2))) == unknot_phi(s, -1));
    for (const char* w : {"s1 s1 s1", "s1 -s2 s1 -s2", "s1 t1 s1"}) {
      BraidWord b = parse_braid(w, 3);
      CHECK(plat_phi(s, braid_closure_to_plat(b)) == fixed_points(b, s, twist(3)).count);
    }
  }
}

TEST_CASE("series agrees with braid stabilization") {
  for (int n : {2, 3}) {
    for (const auto& e : catalog(n)) {
      for (const char* text : {"s1 s1 s1", "s1 -s2 s1 -s2", "s1 -s2 -s1 t2 s1 s2 -s1 t2"}) {
        BraidWord w = parse_braid(text, 3);
        SeriesResult r = series(e.sw, w, 3);
        CHECK(r.base_writhe == w.writhe());
        for (int j = -2; j <= 2; ++j) CHECK(r.at(w.writhe() + j) == fixed_points(stabilized(w, j), e.sw, twist(n)).count);
      }
    }
  }
}

TEST_CASE("curl position does not matter") {
  PlatWord base = braid_closure_to_plat(parse_braid("s1 -s2 s1 -s2", 3));
  for (const auto& e : catalog(3))
    for (int c : {-3, -1, 2, 5}) {
      const auto v = plat_phi(e.sw, with_curls(base, c));
      for (int pair = 1; pair <= 3; ++pair) CHECK(plat_phi(e.sw, with_curls(base, c, CurlPattern::alternating, pair)) == v);
    }
}

TEST_CASE("unknot series") {
  for (int n : {2, 3}) {
    for (const auto& e : catalog(n)) {
      SeriesResult r = series(e.sw, parse_braid("", 1), 6);
      CHECK(r.at(0) == static_cast<std::uint64_t>(n));
      CHECK(r.symmetric);
      CHECK(r.cycle_certified);
      CHECK(r.cycle.size() <= static_cast<std::size_t>(n));
      CHECK(r.state_period % 2 == 0);
      for (int w = 0; w <= 6; ++w) CHECK(r.at(w) == r.cycle[w % r.cycle.size()]);
    }
  }
}

TEST_CASE("the printed factor pattern overruns the cycle bound") {
  int over = 0;
  for (int n : {2, 3})
    for (const auto& e : catalog(n)) {
      SeriesOptions o;
      o.pattern = CurlPattern::printed;
      SeriesResult r = series(e.sw, parse_braid("", 1), 8, o);
      if (r.cycle.size() > static_cast<std::size_t>(n)) ++over;
    }
  CHECK(over > 0);
}

TEST_CASE("series separate knots") {
  bool trefoil_differs = false;
  for (int n : {2, 3, 4}) {
    for (const auto& e : catalog(n)) {
      SeriesResult u = series(e.sw, parse_braid("", 1), 4);
      SeriesResult t = series(e.sw, parse_braid("s1 s1 s1", 2), 4);
      if (u.cycle != t.cycle || u.at(0) != t.at(3)) trefoil_differs = true;
    }
  }
  CHECK(trefoil_differs);

  // R_3^3 separates the trefoil from the unknot already at n = 3
  Switch r3 = *named_switch("R_3^3");
  CHECK(series(r3, parse_braid("s1 s1 s1", 2), 2).at(3) != series(r3, parse_braid("", 1), 2).at(0));

  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& e : catalog(3)) seen.insert(series(e.sw, parse_braid("", 1), 6).cycle);
  CHECK(seen.size() > 1);
}
