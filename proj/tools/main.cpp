#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <birack/braid.hpp>
#include <birack/catalog.hpp>
#include <birack/enumerate.hpp>
#include <birack/error.hpp>
#include <birack/fixtures.hpp>
#include <birack/plat.hpp>

using namespace birack;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// NAME from the built-in fixtures, or FILE#NAME from a catalog file.
Switch resolve(const std::string& ref) {
  if (const auto hash = ref.rfind('#'); hash != std::string::npos) {
    const std::string name = ref.substr(hash + 1);
    for (const auto& e : parse_catalog(read_file(ref.substr(0, hash))))
      if (e.name.str() == name) return e.sw;
    throw Error("no entry " + name + " in " + ref.substr(0, hash));
  }
  if (auto s = named_switch(ref)) return *s;
  throw Error("unknown switch: " + ref);
}

std::string counts_line(const KindCounts& c) {
  return "quandles " + std::to_string(c.quandles) + " racks " + std::to_string(c.racks) + " biquandles " +
         std::to_string(c.biquandles) + " biracks " + std::to_string(c.biracks);
}

const char* yes(bool b) { return b ? "yes" : "no"; }

EquivalenceMode parse_mode(const std::string& s) {
  return s == "iso" ? EquivalenceMode::isomorphism : EquivalenceMode::isomorphism_and_symmetry;
}

StrandOrder parse_order(const std::string& s) {
  return s == "left" ? StrandOrder::from_left : StrandOrder::from_right;
}

struct EnumerateArgs {
  int size = 0;
  bool quandle_related = false;
  std::string equiv = "iso+sym";
  std::string out;
  std::string order = "search";
};

void run_enumerate(const EnumerateArgs& a, int jobs) {
  const EquivalenceMode mode = parse_mode(a.equiv);
  Catalog c;
  if (a.quandle_related) {
    c = enumerate_quandle_related(a.size, mode, 1'000'000'000ULL, jobs);
  } else {
    SearchOptions o;
    o.size = a.size;
    o.mode = mode;
    o.jobs = jobs;
    c = enumerate_biracks(o);
  }
  if (a.order == "search") c = search_order(c);
  const std::string text = emit_catalog(c.entries);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out);
    if (!f) throw Error("cannot write " + a.out);
    f << text;
  }
  std::cout << counts_line(c.counts()) << "\n";
}

void run_classify(const std::string& entry) {
  std::optional<Name> name;
  std::string spec = entry;
  if (const auto sp = entry.find(' '); sp != std::string::npos && (name = Name::parse(entry.substr(0, sp))))
    spec = entry.substr(sp + 1);
  const Switch s = parse_switch_spec(spec, name ? std::optional<int>(name->size) : std::nullopt);
  const ClassKind k = classify(s);
  std::cout << to_string(k) << "\n";
  if (k == ClassKind::not_birack) {
    const AxiomReport r = verify_axioms(s);
    std::cout << "B1 " << yes(r.b1) << " B2 " << yes(r.b2) << " B3 " << yes(r.b3) << "\n";
    return;
  }
  const CatalogEntry e = make_entry(Name{name_kind(k), 1, s.size()}, s);
  const Annotation an = annotation(e);
  std::string fl;
  for (const auto& f : an.flags) fl += (fl.empty() ? "" : ",") + f;
  std::cout << "order " << an.order << " flags " << (fl.empty() ? "-" : fl) << " c1 " << an.c1 << " c2 " << an.c2
            << "\n";
}

void run_check_pair(const std::string& s, const std::string& t) {
  const VirtualPair p = check_pair(resolve(s), resolve(t));
  std::cout << "V " << yes(p.v) << "\nW1 " << yes(p.w1) << "\nW2 " << yes(p.w2) << "\nessential "
            << yes(p.essential()) << "\n";
}

void run_find_pairs(const std::string& file) {
  Catalog c;
  c.entries = parse_catalog(read_file(file));
  if (!c.entries.empty()) c.size = c.entries.front().name.size;
  std::erase_if(c.entries, [](const CatalogEntry& e) {
    return e.kind != ClassKind::quandle && e.kind != ClassKind::biquandle;
  });
  const EssentialPairs r = find_essential_pairs(c);
  auto name_of = [&](const Switch& s) {
    for (const auto& e : c.entries)
      if (e.sw == s) return e.name.str();
    return std::string("?");
  };
  for (const auto& p : r.raw) std::cout << name_of(p.s) << " " << name_of(p.t) << "\n";
  std::cout << "pairs " << r.raw.size() << " relabeling classes " << r.classes.size() << "\n";
}

struct FixedArgs {
  std::string braid;
  int strands = 0;
  std::string s, t, pair;
  std::string order = "right";
};

void run_fixed_points(const FixedArgs& a) {
  Switch s = twist(1), t = twist(1);
  if (!a.pair.empty()) {
    const auto& p = pair_fixture(a.pair);
    s = p.s;
    t = p.t;
  } else {
    if (a.s.empty() || a.t.empty()) throw Error("give --pair or both --s and --t");
    s = resolve(a.s);
    t = resolve(a.t);
  }
  FixedPointOptions o;
  o.order = parse_order(a.order);
  std::cout << fixed_points(parse_braid(a.braid, a.strands), s, t, o).count << "\n";
}

struct SeriesArgs {
  std::string braid;
  int strands = 1;
  std::string sw;
  int window = 6;
  std::string pattern = "alternating";
};

void run_series(const SeriesArgs& a) {
  SeriesOptions o;
  o.pattern = a.pattern == "printed" ? CurlPattern::printed : CurlPattern::alternating;
  const SeriesResult r = series(resolve(a.sw), parse_braid(a.braid, a.strands), a.window, o);
  for (int w = r.base_writhe - r.window; w <= r.base_writhe + r.window; ++w)
    std::cout << w << " " << r.at(w) << "\n";
  std::cout << "cycle";
  for (auto c : r.cycle) std::cout << " " << c;
  std::cout << (r.cycle_certified ? " certified" : " uncertified") << "\n";
  std::cout << "symmetric " << yes(r.symmetric) << "\n";
}

void run_fixtures(const std::string& table, const std::vector<std::string>& names) {
  if (table == "appendix") {
    std::cout << appendix_text(2) << appendix_text(3);
  } else if (table == "pairs") {
    for (const auto& p : pair_fixtures()) std::cout << p.name << " " << p.s_name << " " << p.t_name << "\n";
  } else if (table == "welded") {
    for (const auto& row : welded_table()) {
      std::cout << row.knot << " \"" << fixture_word(row.knot).str() << "\"";
      for (std::size_t i = 0; i < row.pairs.size(); ++i) {
        std::cout << " " << row.pairs[i] << "=";
        if (row.printed[i])
          std::cout << *row.printed[i];
        else
          std::cout << "-";
      }
      std::cout << "\n";
    }
  } else if (table == "bigelow") {
    std::cout << "b1 \"" << bigelow(Bigelow::b1).str() << "\" strands " << bigelow(Bigelow::b1).strands() << "\n";
    std::cout << "b2 \"" << bigelow(Bigelow::b2).str() << "\" strands " << bigelow(Bigelow::b2).strands() << "\n";
    std::cout << "pair " << kBigelowPair.s_name << " " << kBigelowPair.t_name << "\n";
  } else if (!table.empty()) {
    throw Error("unknown table: " + table);
  }
  for (const auto& n : names) {
    if (n == "bigelow-b1")
      std::cout << bigelow(Bigelow::b1).str() << "\n";
    else if (n == "bigelow-b2")
      std::cout << bigelow(Bigelow::b2).str() << "\n";
    else
      std::cout << fixture_word(n).str() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite biracks, biquandles and virtual knot invariants"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List biracks of a size up to equivalence");
  enumerate->add_option("--size", en.size)->required()->check(CLI::Range(1, 9));
  enumerate->add_flag("--quandle-related", en.quandle_related, "Down table ranges over the quandles");
  enumerate->add_option("--equiv", en.equiv)->check(CLI::IsMember({"iso", "iso+sym"}));
  enumerate->add_option("--out", en.out, "Catalog file to write");
  enumerate->add_option("--order", en.order, "Entry order and naming")->check(CLI::IsMember({"search", "canonical"}));

  std::string entry;
  auto* cls = app.add_subcommand("classify", "Verify the axioms for one switch");
  cls->add_option("--entry", entry, "'U=... D=...', optionally preceded by a name")->required();

  std::string ps, pt;
  auto* cp = app.add_subcommand("check-pair", "Test a pair against the virtual and forbidden moves");
  cp->add_option("--s", ps, "NAME or FILE#NAME")->required();
  cp->add_option("--t", pt, "NAME or FILE#NAME")->required();

  std::string catalog_file;
  auto* fep = app.add_subcommand("find-essential-pairs", "Search a catalog for essential pairs");
  fep->add_option("--catalog", catalog_file)->required();

  FixedArgs fa;
  auto* fp = app.add_subcommand("fixed-points", "Count fixed points of a braid word");
  fp->add_option("--braid", fa.braid)->required();
  fp->add_option("--strands", fa.strands)->required()->check(CLI::PositiveNumber);
  fp->add_option("--s", fa.s);
  fp->add_option("--t", fa.t);
  fp->add_option("--pair", fa.pair, "P1 ... P13");
  fp->add_option("--strand-order", fa.order, "Which end strand 1 is counted from")
      ->check(CLI::IsMember({"left", "right"}));

  SeriesArgs sa;
  auto* se = app.add_subcommand("series", "Writhe-indexed coefficients of a braid closure");
  se->add_option("--braid", sa.braid)->required();
  se->add_option("--strands", sa.strands)->required()->check(CLI::PositiveNumber);
  se->add_option("--switch", sa.sw)->required();
  se->add_option("--window", sa.window)->check(CLI::NonNegativeNumber);
  se->add_option("--pattern", sa.pattern)->check(CLI::IsMember({"alternating", "printed"}));

  std::string table;
  std::vector<std::string> names;
  auto* fx = app.add_subcommand("fixtures", "Print built-in tables and words");
  fx->add_option("--table", table)->check(CLI::IsMember({"appendix", "pairs", "welded", "bigelow"}));
  fx->add_option("names", names, "Words to print, such as bigelow-b1 or w4.5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) run_enumerate(en, jobs);
    if (*cls) run_classify(entry);
    if (*cp) run_check_pair(ps, pt);
    if (*fep) run_find_pairs(catalog_file);
    if (*fp) run_fixed_points(fa);
    if (*se) run_series(sa);
    if (*fx) run_fixtures(table, names);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
