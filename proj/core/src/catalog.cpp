#include "birack/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "birack/error.hpp"

namespace birack {

namespace {

constexpr std::string_view kIota = "\xCE\xB9";  // UTF-8 iota

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  int line = 1;
  int col0 = 0;  // column of s[0] minus one

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool starts(std::string_view t) const { return s.substr(pos).starts_with(t); }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line, col0 + static_cast<int>(pos) + 1);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  void skip_space() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
  }
};

// A permutation as its parsed cycles, resolved once the size is known.
struct RawPerm {
  std::vector<std::vector<int>> cycles;
  int col = 0;
};

RawPerm read_perm(Cursor& c) {
  RawPerm p;
  p.col = c.col0 + static_cast<int>(c.pos) + 1;
  if (c.peek() == 'i') {
    ++c.pos;
    return p;
  }
  if (c.starts(kIota)) {
    c.pos += kIota.size();
    return p;
  }
  if (c.peek() != '(') c.fail("expected a cycle or 'i'");
  while (c.peek() == '(') {
    ++c.pos;
    std::vector<int> cyc;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      int d = c.peek() - '0';
      if (d == 0) c.fail("labels are 1..9");
      cyc.push_back(d);
      ++c.pos;
    }
    c.expect(')');
    if (!cyc.empty()) p.cycles.push_back(std::move(cyc));
  }
  return p;
}

Perm resolve(const RawPerm& raw, int n, int line) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::vector<bool> used(n + 1);
  for (const auto& cyc : raw.cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int x = cyc[k];
      if (x > n) throw ParseError("label " + std::to_string(x) + " exceeds size " + std::to_string(n), line, raw.col);
      if (used[x]) throw ParseError("label " + std::to_string(x) + " repeated in cycles", line, raw.col);
      used[x] = true;
      img[x - 1] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Perm(img);
}

// Returns the parsed columns, or nullopt for a whole identity row.
std::optional<std::vector<RawPerm>> read_table(Cursor& c) {
  if (c.peek() == 'I' || c.peek() == 'i') {
    ++c.pos;
    return std::nullopt;
  }
  if (c.starts(kIota)) {
    c.pos += kIota.size();
    return std::nullopt;
  }
  c.expect('(');
  std::vector<RawPerm> cols;
  while (true) {
    c.skip_space();
    cols.push_back(read_perm(c));
    c.skip_space();
    if (c.peek() == ',') {
      ++c.pos;
      continue;
    }
    c.expect(')');
    break;
  }
  return cols;
}

ActionTable resolve_table(const std::optional<std::vector<RawPerm>>& raw, int n, int line) {
  if (!raw) return identity_table(n);
  ActionTable t;
  for (const auto& p : *raw) t.push_back(resolve(p, n, line));
  return t;
}

std::string read_word(Cursor& c) {
  std::size_t b = c.pos;
  while (!c.done() && c.s[c.pos] != ' ' && c.s[c.pos] != '\t' && c.s[c.pos] != '=' && c.s[c.pos] != '\r') ++c.pos;
  return std::string(c.s.substr(b, c.pos - b));
}

int read_int(Cursor& c) {
  std::size_t b = c.pos;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (b == c.pos) c.fail("expected a number");
  long v = 0;
  std::from_chars(c.s.data() + b, c.s.data() + c.pos, v);
  return static_cast<int>(v);
}

struct Fields {
  std::optional<std::vector<RawPerm>> up, down;
  bool has_up = false, has_down = false;
  std::optional<Annotation> ann;
};

Fields read_fields(Cursor& c) {
  Fields f;
  Annotation a;
  bool any_trailer = false;
  while (true) {
    c.skip_space();
    if (c.done()) break;
    std::size_t key_pos = c.pos;
    std::string key = read_word(c);
    c.expect('=');
    if (key == "U" || key == "D") {
      auto t = read_table(c);
      if (key == "U") {
        f.up = std::move(t);
        f.has_up = true;
      } else {
        f.down = std::move(t);
        f.has_down = true;
      }
    } else if (key == "order") {
      a.order = static_cast<std::uint64_t>(read_int(c));
      any_trailer = true;
    } else if (key == "c1") {
      a.c1 = read_int(c);
      any_trailer = true;
    } else if (key == "c2") {
      a.c2 = read_int(c);
      any_trailer = true;
    } else if (key == "flags") {
      std::string v = read_word(c);
      if (v != "-") {
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) a.flags.push_back(item);
      }
      any_trailer = true;
    } else {
      c.pos = key_pos;
      c.fail("unknown field '" + key + "'");
    }
  }
  if (!f.has_up) c.fail("missing U=");
  if (!f.has_down) c.fail("missing D=");
  if (any_trailer) f.ann = a;
  return f;
}

Switch build_switch(const Fields& f, std::optional<int> n, const Cursor& c) {
  if (!n) {
    if (f.up) n = static_cast<int>(f.up->size());
    else if (f.down) n = static_cast<int>(f.down->size());
    else c.fail("size unknown: both tables are I");
  }
  ActionTable up = resolve_table(f.up, *n, c.line);
  ActionTable down = resolve_table(f.down, *n, c.line);
  try {
    return Switch(std::move(up), std::move(down));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), c.line, c.col0 + 1);
  }
}

std::string_view strip_comment(std::string_view line) {
  auto h = line.find('#');
  return h == std::string_view::npos ? line : line.substr(0, h);
}

}  // namespace

std::string Name::str() const {
  static const char* prefixes[] = {"Q", "R", "BQ", "BR"};
  return std::string(prefixes[static_cast<int>(kind)]) + "_" + std::to_string(index) + "^" + std::to_string(size);
}

std::optional<Name> Name::parse(std::string_view t) {
  Name nm;
  if (t.starts_with("BQ")) {
    nm.kind = NameKind::BQ;
    t.remove_prefix(2);
  } else if (t.starts_with("BR")) {
    nm.kind = NameKind::BR;
    t.remove_prefix(2);
  } else if (t.starts_with("Q")) {
    nm.kind = NameKind::Q;
    t.remove_prefix(1);
  } else if (t.starts_with("R")) {
    nm.kind = NameKind::R;
    t.remove_prefix(1);
  } else {
    return std::nullopt;
  }
  if (!t.starts_with("_")) return std::nullopt;
  t.remove_prefix(1);
  auto caret = t.find('^');
  if (caret == std::string_view::npos) return std::nullopt;
  auto num = [](std::string_view s, int& out) {
    if (s.empty()) return false;
    auto r = std::from_chars(s.data(), s.data() + s.size(), out);
    return r.ec == std::errc() && r.ptr == s.data() + s.size() && out > 0;
  };
  if (!num(t.substr(0, caret), nm.index) || !num(t.substr(caret + 1), nm.size)) return std::nullopt;
  return nm;
}

NameKind name_kind(ClassKind k) {
  switch (k) {
    case ClassKind::quandle: return NameKind::Q;
    case ClassKind::rack: return NameKind::R;
    case ClassKind::biquandle: return NameKind::BQ;
    case ClassKind::birack: return NameKind::BR;
    case ClassKind::not_birack: break;
  }
  throw Error("not a birack");
}

CatalogEntry make_entry(Name name, Switch sw, EquivalenceMode mode) {
  ClassKind kind = classify(sw);
  if (kind == ClassKind::not_birack) throw Error(name.str() + " is not a birack");
  Fingerprint fp = fingerprint(sw);
  CanonicalKey key = canonical_key(sw, mode);
  return CatalogEntry{name, std::move(sw), kind, fp, std::move(key), std::nullopt};
}

KindCounts Catalog::counts() const {
  KindCounts k;
  for (const auto& e : entries) {
    switch (e.kind) {
      case ClassKind::quandle: ++k.quandles; break;
      case ClassKind::rack: ++k.racks; break;
      case ClassKind::biquandle: ++k.biquandles; break;
      case ClassKind::birack: ++k.biracks; break;
      case ClassKind::not_birack: break;
    }
  }
  return k;
}

const CatalogEntry* Catalog::find(const Name& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<std::string> flags(ClassKind kind, const Fingerprint& fp) {
  std::vector<std::string> out;
  if (fp.symmetric) out.push_back("S");
  if (kind == ClassKind::biquandle) {
    if (fp.pseudo_up && fp.pseudo_down) out.push_back("DPQ");
    else if (fp.pseudo_up || fp.pseudo_down) out.push_back("PQ");
  }
  return out;
}

Annotation annotation(const CatalogEntry& e) {
  return Annotation{e.fp.order, flags(e.kind, e.fp), e.fp.c1, e.fp.c2};
}

std::string cycles_str(const Perm& p) {
  auto img = p.raw();
  std::string out;
  std::vector<bool> seen(img.size());
  for (std::size_t s = 0; s < img.size(); ++s) {
    if (seen[s] || img[s] == s) continue;
    out += '(';
    for (std::size_t x = s; !seen[x]; x = img[x]) {
      seen[x] = true;
      if (x + 1 > 9) throw Error("cycle notation supports labels 1..9");
      out += static_cast<char>('1' + x);
    }
    out += ')';
  }
  return out.empty() ? "i" : out;
}

Perm parse_cycles(std::string_view text, int n) {
  Cursor c{text};
  RawPerm raw = read_perm(c);
  if (!c.done()) c.fail("trailing characters after permutation");
  return resolve(raw, n, 1);
}

std::string table_str(const ActionTable& t) {
  if (is_identity_table(t)) return "I";
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += cycles_str(t[i]);
  }
  return out + ")";
}

ActionTable parse_table(std::string_view text, std::optional<int> n) {
  Cursor c{text};
  auto raw = read_table(c);
  c.skip_space();
  if (!c.done()) c.fail("trailing characters after table");
  if (!raw && !n) c.fail("size needed to expand I");
  int size = raw ? static_cast<int>(raw->size()) : *n;
  if (n && size != *n) c.fail("table has " + std::to_string(size) + " columns, expected " + std::to_string(*n));
  return resolve_table(raw, size, 1);
}

Switch parse_switch_spec(std::string_view text, std::optional<int> n) {
  Cursor c{text};
  Fields f = read_fields(c);
  return build_switch(f, n, c);
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  int lineno = 0;
  bool in_group = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(start, end - start));
    start = end + 1;
    ++lineno;
    Cursor c{line, 0, lineno, 0};
    c.skip_space();
    if (c.done()) continue;
    if (in_group) {
      if (line.substr(c.pos).starts_with("end")) in_group = false;
      continue;
    }
    if (line.substr(c.pos).starts_with("group")) {
      in_group = true;
      continue;
    }
    std::size_t name_pos = c.pos;
    std::string name_text = read_word(c);
    auto name = Name::parse(name_text);
    if (!name) {
      c.pos = name_pos;
      c.fail("bad entry name '" + name_text + "'");
    }
    Fields f = read_fields(c);
    Switch sw = build_switch(f, name->size, c);
    if (sw.size() != name->size) {
      c.pos = name_pos;
      c.fail("tables have size " + std::to_string(sw.size()) + " but the name says " + std::to_string(name->size));
    }
    ClassKind kind = classify(sw);
    if (kind == ClassKind::not_birack || name_kind(kind) != name->kind) {
      c.pos = name_pos;
      c.fail("class mismatch: " + name->str() + " verifies as " + to_string(kind));
    }
    CatalogEntry e = make_entry(*name, std::move(sw));
    e.declared = f.ann;
    out.push_back(std::move(e));
  }
  return out;
}

std::string emit_entry(const CatalogEntry& e) {
  Annotation a = annotation(e);
  std::string fl;
  for (const auto& f : a.flags) fl += (fl.empty() ? "" : ",") + f;
  if (fl.empty()) fl = "-";
  return e.name.str() + " U=" + table_str(e.sw.up()) + " D=" + table_str(e.sw.down()) +
         " order=" + std::to_string(a.order) + " flags=" + fl + " c1=" + std::to_string(a.c1) +
         " c2=" + std::to_string(a.c2);
}

std::string emit_catalog(const std::vector<CatalogEntry>& entries) {
  std::string out;
  for (const auto& e : entries) out += emit_entry(e) + "\n";
  return out;
}

std::vector<std::pair<std::string, GroupTable>> parse_group_tables(std::string_view text) {
  std::vector<std::pair<std::string, GroupTable>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls{std::string(strip_comment(line))};
    std::string word, name;
    int m = 0;
    if (!(ls >> word) || word != "group") continue;
    if (!(ls >> name >> m) || m < 1) throw ParseError("expected 'group NAME ORDER'", lineno, 1);
    std::vector<Label> mult;
    for (int r = 0; r < m; ++r) {
      if (!std::getline(in, line)) throw ParseError("group table ends early", lineno, 1);
      ++lineno;
      std::istringstream rs{std::string(strip_comment(line))};
      for (int k = 0; k < m; ++k) {
        Label v = 0;
        if (!(rs >> v)) throw ParseError("expected " + std::to_string(m) + " labels", lineno, 1);
        mult.push_back(v);
      }
    }
    if (!std::getline(in, line) || line.find("end") == std::string::npos) {
      throw ParseError("expected 'end' after group table", lineno + 1, 1);
    }
    ++lineno;
    out.emplace_back(name, GroupTable(m, std::move(mult)));
  }
  return out;
}

Alignment align_with_fixtures(const Catalog& catalog, const std::vector<CatalogEntry>& fixtures) {
  const auto mode = EquivalenceMode::isomorphism_and_symmetry;
  std::vector<CanonicalKey> keys;
  keys.reserve(catalog.entries.size());
  for (const auto& e : catalog.entries) {
    keys.push_back(catalog.mode == mode ? e.key : canonical_key(e.sw, mode));
  }
  Alignment out;
  std::vector<bool> used(catalog.entries.size());
  std::string problems;
  for (const auto& f : fixtures) {
    if (f.sw.size() != catalog.size) throw Error("fixture " + f.name.str() + " has a different size than the catalog");
    CanonicalKey fk = canonical_key(f.sw, mode);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == fk) hits.push_back(i);
    }
    if (hits.empty()) {
      problems += " no catalog match for " + f.name.str() + ";";
    } else if (hits.size() > 1) {
      problems += " ambiguous match for " + f.name.str() + ";";
    } else if (used[hits[0]]) {
      problems += " " + f.name.str() + " matches an entry already claimed;";
    } else {
      used[hits[0]] = true;
      out.by_name[f.name.str()] = catalog.entries[hits[0]].key;
    }
  }
  if (!problems.empty()) throw Error("fixture alignment failed:" + problems);
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) out.unmatched_catalog.push_back(catalog.entries[i].name.str());
  }
  return out;
}

}  // namespace birack
