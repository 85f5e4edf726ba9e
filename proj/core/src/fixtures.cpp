#include "birack/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "birack/constructions.hpp"
#include "birack/error.hpp"

namespace birack {

namespace {

constexpr std::string_view kAppendix2 = R"(# n = 2
Q_1^2 U=I D=I order=2 flags=S c1=4 c2=0
BQ_1^2 U=((12),(12)) D=((12),(12)) order=2 flags=S,DPQ c1=4 c2=0
R_1^2 U=((12),(12)) D=I order=4 flags=- c1=4 c2=0
)";

constexpr std::string_view kAppendix3 = R"(# n = 3
Q_1^3 U=I D=I order=2 flags=S c1=6 c2=0
Q_2^3 U=((23),i,i) D=I order=4 flags=- c1=4 c2=2
Q_3^3 U=((23),(13),(12)) D=I order=3 flags=- c1=3 c2=3
R_1^3 U=((132),(132),(132)) D=I order=6 flags=- c1=6 c2=0
R_2^3 U=((13),i,(13)) D=I order=4 flags=- c1=4 c2=2
R_3^3 U=((13),(13),(13)) D=I order=4 flags=- c1=6 c2=0
BQ_1^3 U=(i,(23),(23)) D=(i,(23),(23)) order=2 flags=S c1=2 c2=0
BQ_2^3 U=(i,(23),(23)) D=((23),(23),(23)) order=4 flags=PQ c1=4 c2=2
BQ_3^3 U=(i,(132),(123)) D=((23),(23),(23)) order=3 flags=PQ c1=3 c2=3
BQ_4^3 U=(i,i,(12)) D=(i,i,(12)) order=2 flags=S c1=2 c2=0
BQ_5^3 U=((23),(23),(23)) D=((23),(23),(23)) order=2 flags=S,DPQ c1=6 c2=0
BQ_6^3 U=((12),(23),(13)) D=((123),(123),(123)) order=3 flags=PQ c1=3 c2=3
BQ_7^3 U=((123),(123),(123)) D=((132),(132),(132)) order=2 flags=DPQ c1=6 c2=0
BR_1^3 U=(i,(23),(23)) D=((23),i,i) order=4 flags=- c1=2 c2=0
BR_2^3 U=((23),i,i) D=((23),(23),(23)) order=4 flags=- c1=4 c2=2
BR_3^3 U=((123),(123),(123)) D=((123),(123),(123)) order=6 flags=S c1=6 c2=0
)";

// Named switches of sizes 4 and 6 used by the pair and knot fixtures.
constexpr std::string_view kNamedTables = R"(
Q_1^4 U=I D=I
BQ_3^4 U=(i,i,(243),(234)) D=(i,(34),(34),(34))
BQ_9^4 U=(i,(34),(34),(34)) D=(i,(34),(34),(34))
BQ_19^4 U=(i,(13)(24),(14)(23),(12)(34)) D=((243),(243),(243),(243))
BQ_23^4 U=(i,i,i,(132)) D=(i,i,i,(123))
BQ_26^4 U=(i,i,(12)(34),(12)(34)) D=(i,i,(12)(34),(12)(34))
BQ_34^4 U=(i,i,i,(132)) D=((23),(13),(12),(123))
BQ_38^4 U=((234),(234),(234),(234)) D=((243),(23),(34),(24))
BQ_39^4 U=((234),(234),(234),(234)) D=((243),(243),(243),(243))
BQ_41^4 U=((234),(132),(143),(124)) D=((234),(234),(234),(234))
BQ_50^4 U=((12)(34),(12)(34),(12)(34),(12)(34)) D=((12)(34),(12)(34),(12)(34),(12)(34))
BQ_51^4 U=((12)(34),(13)(24),(13)(24),(12)(34)) D=((1243),(1243),(1243),(1243))
BQ_53^4 U=((1234),(1432),(1234),(1432)) D=((1234),(1432),(1234),(1432))
BQ_56^4 U=((12)(34),(12)(34),(12)(34),(12)(34)) D=((132),(124),(143),(234))
Q_6^4 U=((24),(13),(24),(13)) D=I
BQ_10^6 U=(i,(13456),i,i,i,i) D=((3465),(16543),(1645),(1563),(1436),(1354))
BQ_22^6 U=(i,(13456),i,i,i,i) D=((36)(45),(16543),(14)(56),(16)(35),(13)(46),(15)(34))
BQ_49^6 U=((3456),i,i,i,i,i) D=((3654),(3456),(2465),(2536),(2643),(2354))
BQ_230^6 U=((3456),i,i,i,i,i) D=((3654),i,i,i,i,i)
BQ_1494^6 U=(i,(13456),i,i,i,i) D=(i,(16543),i,i,i,i)
)";

struct PairNames {
  const char* name;
  const char* s;
  const char* t;
};

constexpr PairNames kPairs[] = {
    {"P1", "BQ_3^3", "Q_1^3"},    {"P2", "Q_3^3", "BQ_5^3"},    {"P3", "BQ_3^4", "Q_1^4"},
    {"P4", "BQ_19^4", "Q_1^4"},   {"P5", "BQ_34^4", "BQ_23^4"}, {"P6", "BQ_38^4", "BQ_39^4"},
    {"P7", "BQ_41^4", "BQ_39^4"}, {"P8", "BQ_56^4", "BQ_50^4"}, {"P9", "Q_6^4", "BQ_50^4"},
    {"P10", "BQ_51^4", "Q_1^4"},  {"P11", "BQ_10^6", "BQ_1494^6"}, {"P12", "BQ_22^6", "BQ_1494^6"},
    {"P13", "BQ_49^6", "BQ_230^6"},
};

const std::map<std::string, Switch, std::less<>>& registry() {
  static const auto reg = [] {
    std::map<std::string, Switch, std::less<>> m;
    for (std::string_view text : {kAppendix2, kAppendix3, kNamedTables}) {
      std::istringstream in{std::string(text)};
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto sp = line.find(' ');
        const auto trailer = line.find(" order=");
        const std::string name = line.substr(0, sp);
        const std::string spec =
            line.substr(sp + 1, trailer == std::string::npos ? std::string::npos : trailer - sp - 1);
        m.emplace(name, parse_switch_spec(spec, Name::parse(name)->size));
      }
    }
    return m;
  }();
  return reg;
}

}  // namespace

std::string_view appendix_text(int n) {
  if (n == 2) return kAppendix2;
  if (n == 3) return kAppendix3;
  throw Error("no published list for size " + std::to_string(n));
}

std::vector<CatalogEntry> appendix(int n) { return parse_catalog(appendix_text(n)); }

const std::vector<PairFixture>& pair_fixtures() {
  static const auto pairs = [] {
    std::vector<PairFixture> out;
    for (const auto& p : kPairs) out.push_back({p.name, p.s, p.t, *named_switch(p.s), *named_switch(p.t)});
    return out;
  }();
  return pairs;
}

const PairFixture& pair_fixture(std::string_view name) {
  for (const auto& p : pair_fixtures())
    if (p.name == name) return p;
  throw Error("unknown pair: " + std::string(name));
}

const std::vector<WeldedRow>& welded_table() {
  using O = std::optional<std::uint64_t>;
  static const std::vector<std::string> cols = {"P3", "P4", "P11", "P12", "P13"};
  static const std::vector<WeldedRow> rows = {
      {"w3.1", cols, {10, 4, 6, 6, 6}, {}},
      {"w3.2", cols, {10, 16, 6, 6, 6}, {}},
      {"w4.1", cols, {10, 4, 26, 6, 6}, {}},
      {"w4.2", cols, {10, 4, 6, 6, 26}, {}},
      {"w4.3", cols, {4, 4, 26, 26, 6}, {}},
      {"w4.4", cols, {4, 4, 6, 26, 6}, {}},
      {"w4.5", cols, {4, 16, 6, 6, 6}, {}},
      {"w4.6", cols, {4, 4, 6, 26, 26}, {}},
      {"w6.1", cols, {28, 28, O{}, O{}, O{}}, {O{}, O{}, 6, 6, 6}},
  };
  return rows;
}

std::optional<Switch> named_switch(std::string_view name) {
  const auto& reg = registry();
  if (auto it = reg.find(name); it != reg.end()) return it->second;
  for (std::string_view prefix : {"I_", "twist_"}) {
    if (name.substr(0, prefix.size()) != prefix) continue;
    const std::string digits(name.substr(prefix.size()));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) return std::nullopt;
    const int n = std::stoi(digits);
    if (n < 1 || n > kMaxLabels) return std::nullopt;
    return twist(n);
  }
  return std::nullopt;
}

std::vector<std::string> named_switch_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

std::vector<CatalogEntry> load_fixture_dir(const std::filesystem::path& dir) {
  std::vector<CatalogEntry> out;
  if (!std::filesystem::is_directory(dir)) return out;
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".txt") files.push_back(f.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    auto entries = parse_catalog(ss.str());
    out.insert(out.end(), entries.begin(), entries.end());
  }
  return out;
}

}  // namespace birack
