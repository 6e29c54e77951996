#include "capitula/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "capitula/error.hpp"
#include "capitula/tower.hpp"

namespace capitula {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  auto out = split(text, '\n');
  for (auto& l : out) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> files_with(const std::filesystem::path& dir, std::string_view prefix,
                                              std::string_view ext) {
  if (!std::filesystem::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (e.is_regular_file() && name.starts_with(prefix) && e.path().extension() == ext) {
      out.push_back(e.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::map<std::string, std::uint64_t> parse_checksums(std::string_view text) {
  std::map<std::string, std::uint64_t> out;
  for (auto line : lines_of(text)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::size_t gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) throw Error("malformed checksum line '" + std::string(line) + "'");
    std::uint64_t v = 0;
    std::string_view hex = line.substr(0, gap);
    auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
    if (ec != std::errc{} || ptr != hex.data() + hex.size()) {
      throw Error("malformed checksum '" + std::string(hex) + "'");
    }
    out[std::string(trim(line.substr(gap)))] = v;
  }
  return out;
}

// Tables ---------------------------------------------------------------------------

std::string FixtureRow::coordinates() const {
  return "Table " + std::to_string(table) + ", f=" + std::to_string(f) + ", n=" + std::to_string(n);
}

std::vector<FixtureRow> parse_table_tsv(std::string_view text, const std::string& source) {
  static const auto columns = split(kTableHeader, '\t');
  std::vector<FixtureRow> rows;
  bool header_seen = false;
  int line_no = 0;
  for (auto line : lines_of(text)) {
    ++line_no;
    if (trim(line).empty() || line.front() == '#') continue;
    auto where = [&](std::size_t col) {
      return source + ":" + std::to_string(line_no) + ": column " + std::string(columns[col]) + ": ";
    };
    if (!header_seen) {
      if (line != kTableHeader) throw Error(source + ":" + std::to_string(line_no) + ": bad header");
      header_seen = true;
      continue;
    }
    auto cells = split(line, '\t');
    if (cells.size() != columns.size()) {
      throw Error(source + ":" + std::to_string(line_no) + ": expected " + std::to_string(columns.size()) +
                  " columns, got " + std::to_string(cells.size()));
    }
    FixtureRow r;
    r.source = source;
    r.line = line_no;
    std::size_t col = 0;
    try {
      r.table = static_cast<int>(parse_u64(cells[col = 0]));
      r.p = parse_u64(cells[col = 1]);
      r.q1 = parse_u64(cells[col = 2]);
      col = 3;
      if (cells[3] != "-") r.q2 = parse_u64(cells[3]);
      r.f = parse_u64(cells[col = 4]);
      r.n = parse_u64(cells[col = 5]);
      col = 6;
      r.factorization = std::string(cells[6]);
      evaluate_factorization(r.factorization);
      r.ct = parse_tkt_name(cells[col = 7]);
      r.kappa = CapitulationType::parse(cells[col = 8]);
      r.alpha = parse_ttt(cells[col = 9]);
      r.dpf = parse_u64(cells[col = 10]);
      r.aux = parse_aux_type(cells[col = 11]);
    } catch (const Error& e) {
      throw Error(where(col) + e.what());
    }
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw Error(source + ": empty table file");
  return rows;
}

std::vector<FixtureRow> load_embedded_tables() {
  std::vector<FixtureRow> rows;
  for (const auto& f : embedded_tables()) {
    auto part = parse_table_tsv(f.content, std::string(f.name));
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::vector<FixtureRow> load_tables_dir(const std::filesystem::path& dir) {
  std::vector<FixtureRow> rows;
  auto files = files_with(dir, "table", ".tsv");
  if (files.empty()) throw Error("no table*.tsv files in " + dir.string());
  for (const auto& path : files) {
    auto part = parse_table_tsv(read_file(path), path.filename().string());
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::vector<FixtureRow> load_tables(const std::optional<std::filesystem::path>& dir) {
  if (dir) return load_tables_dir(*dir);
  if (const char* env = std::getenv("CAPITULA_TABLES"); env != nullptr && *env != '\0') {
    return load_tables_dir(env);
  }
  return load_embedded_tables();
}

const std::map<int, int>& expected_table_row_counts() {
  static const std::map<int, int> counts{{1, 16}, {2, 2}, {3, 34}, {4, 18}, {5, 6}, {6, 26}, {7, 8}};
  return counts;
}

const std::map<std::uint64_t, int>& incomplete_multiplets() {
  static const std::map<std::uint64_t, int> m{{3582, 2}};
  return m;
}

// Reports --------------------------------------------------------------------------

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "skipped";
  }
  return "FAIL";
}

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

void Report::add(std::string check, bool passed, std::string detail) {
  checks.push_back({std::move(check), passed ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

void Report::skip(std::string check, std::string detail) {
  checks.push_back({std::move(check), CheckStatus::skipped, std::move(detail)});
}

namespace {

Species section_species(int table) {
  if (table <= 3) return Species::II;
  if (table <= 5) return Species::IB;
  return Species::IA;
}

ConductorShapeKind section_shape(int table) {
  if (table <= 3) return ConductorShapeKind::pq1q2;
  if (table <= 5) return ConductorShapeKind::three_pq;
  return ConductorShapeKind::nine_pq;
}

// Residues mod 9 of (q1, q2) per table caption; q2 unused for single-q tables.
std::pair<int, int> section_q_classes(int table) {
  switch (table) {
    case 1: return {2, 2};
    case 2: return {5, 5};
    case 3: return {2, 5};
    case 4: return {2, 0};
    case 5: return {5, 0};
    case 6: return {2, 0};
    case 7: return {5, 0};
  }
  return {0, 0};
}

std::multiset<std::string> ttt_multiset(const TransferTargetType& t) {
  std::multiset<std::string> out;
  for (const auto& a : t) out.insert(a.log_string());
  return out;
}

template <typename F>
void guarded(Report& report, const std::string& check, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.add(check, false, e.what());
  }
}

}  // namespace

Report validate_row(const FixtureRow& row, std::span<const Prototype> prototypes) {
  Report r;
  r.subject = row.coordinates();

  guarded(r, "factorization", [&] {
    std::uint64_t v = evaluate_factorization(row.factorization);
    r.add("factorization", v == row.n, row.factorization + " = " + std::to_string(v));
  });
  guarded(r, "normalized", [&] {
    auto prof = normalize_radicand(row.n);
    r.add("normalized", prof.n == row.n,
          "a=" + std::to_string(prof.a) + " b=" + std::to_string(prof.b) + " -> " + std::to_string(prof.n));
  });
  guarded(r, "conductor", [&] {
    auto prof = conductor_and_species(row.n);
    r.add("conductor", prof.conductor == row.f, "computed f=" + std::to_string(prof.conductor));
    r.add("species", prof.species == section_species(row.table),
          "computed " + to_string(prof.species) + ", section " + to_string(section_species(row.table)));
  });
  guarded(r, "shape", [&] {
    auto shape = classify_conductor(row.f);
    std::multiset<std::uint64_t> qs(shape.qs.begin(), shape.qs.end());
    std::multiset<std::uint64_t> printed{row.q1};
    if (row.q2) printed.insert(*row.q2);
    auto [c1, c2] = section_q_classes(row.table);
    bool classes = static_cast<int>(row.q1 % 9) == c1 && (!row.q2 || static_cast<int>(*row.q2 % 9) == c2);
    r.add("shape", shape.shape == section_shape(row.table) && shape.p == row.p && qs == printed && classes,
          "computed " + to_string(shape.shape) + " p=" + std::to_string(shape.p));
  });
  guarded(r, "multiplet", [&] {
    auto m = multiplicity(row.f);
    bool member = std::find(m.radicands.begin(), m.radicands.end(), row.n) != m.radicands.end();
    r.add("multiplet", member, "m=" + std::to_string(m.m));
  });

  const auto canon = canonicalize_tkt(row.kappa);
  r.add("ct_name", canon.name == row.ct,
        row.kappa.to_string() + " is " + to_string(canon.name) + ", printed " + to_string(row.ct));

  const auto features = tkt_features(row.kappa);
  const std::size_t fixed = features.fixed_points.size();
  const std::size_t trans = features.transpositions.size();
  if (row.ct == TktName::b10) {
    r.add("features", trans == 1 && fixed == 0, "b.10 needs a transposition and no fixed point");
  } else if (row.ct == TktName::d23) {
    r.add("features", trans == 1 && fixed == 1, "d.23 needs a transposition and a fixed point");
  } else {
    r.skip("features", "no feature rule for " + to_string(row.ct));
  }

  const ArtinPattern pattern{row.alpha, row.kappa};
  const StablePart stable = stable_part_check(pattern);
  r.add("stable_part", stable == StablePart::holds, to_string(stable));

  if (row.dpf % row.p == 0) {
    r.skip("cubic_residue", "p | DPF");
  } else {
    guarded(r, "cubic_residue", [&] {
      auto s = cubic_residue_symbol(static_cast<std::int64_t>(row.dpf), row.p);
      r.add("cubic_residue", s == CubicResidue::residue, std::to_string(row.dpf) + " mod " +
                                                             std::to_string(row.p) + ": " + to_string(s));
    });
  }

  r.add("aux_type", dpf_type_of_prime(row.p) == row.aux,
        "p=" + std::to_string(row.p) + " has type " + to_string(dpf_type_of_prime(row.p)));
  guarded(r, "admissible", [&] {
    auto allowed = admissible_capitulation_types(row.aux, 1);
    bool ok = std::find(allowed.begin(), allowed.end(), row.ct) != allowed.end();
    r.add("admissible", ok, to_string(row.ct) + " under " + to_string(row.aux));
  });

  if (!prototypes.empty()) {
    const Prototype* match = nullptr;
    for (const auto& proto : prototypes) {
      if (tkt_equivalent(proto.pattern.tkt, row.kappa) &&
          ttt_multiset(proto.pattern.ttt) == ttt_multiset(row.alpha)) {
        match = &proto;
        break;
      }
    }
    if (match == nullptr) {
      r.skip("prototype_multiset", "no catalog prototype with this TKT class and TTT multiset");
      r.skip("prototype_positional", "no catalog prototype");
    } else {
      r.add("prototype_multiset", true, match->name);
      r.add("prototype_positional", artin_patterns_equivalent(pattern, match->pattern), match->name);
    }
  }
  return r;
}

std::vector<Report> validate_multiplets(const std::vector<FixtureRow>& rows) {
  std::vector<Report> out;
  Report counts;
  counts.subject = "row counts";
  std::map<int, int> seen;
  for (const auto& row : rows) ++seen[row.table];
  for (auto [table, expected] : expected_table_row_counts()) {
    counts.add("table " + std::to_string(table), seen[table] == expected,
               std::to_string(seen[table]) + " rows, expected " + std::to_string(expected));
  }
  out.push_back(std::move(counts));

  std::map<std::pair<int, std::uint64_t>, std::vector<std::uint64_t>> by_conductor;
  for (const auto& row : rows) by_conductor[{row.table, row.f}].push_back(row.n);
  for (auto& [key, ns] : by_conductor) {
    Report r;
    r.subject = "Table " + std::to_string(key.first) + ", f=" + std::to_string(key.second);
    std::sort(ns.begin(), ns.end());
    guarded(r, "multiplicity", [&] {
      auto m = multiplicity(key.second);
      const int expected_m = key.first <= 5 ? 2 : 4;
      r.add("multiplicity", m.m == expected_m, "m=" + std::to_string(m.m));
      auto incomplete = incomplete_multiplets().find(key.second);
      if (incomplete != incomplete_multiplets().end()) {
        bool subset = std::includes(m.radicands.begin(), m.radicands.end(), ns.begin(), ns.end());
        r.add("radicands", subset && static_cast<int>(ns.size()) == incomplete->second,
              "documented exception: " + std::to_string(ns.size()) + " of " + std::to_string(m.m) + " printed");
      } else {
        r.add("radicands", m.radicands == ns, std::to_string(ns.size()) + " rows printed");
      }
    });
    out.push_back(std::move(r));
  }
  return out;
}

// Catalog --------------------------------------------------------------------------

PermGroup CatalogEntry::group() const { return PermGroup::from_cycles(degree, generators); }

std::optional<std::string> CatalogEntry::expected(std::string_view key) const {
  for (const auto& [k, v] : expect) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::vector<CatalogEntry> parse_catalog(std::string_view text, const std::string& source) {
  std::vector<CatalogEntry> out;
  std::optional<CatalogEntry> cur;
  std::unordered_set<std::string> names;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(source + ":" + std::to_string(line_no) + ": " + msg);
  };
  for (auto line : lines_of(text)) {
    ++line_no;
    // '#' opens a comment only at the start of a token
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line = line.substr(0, i);
        break;
      }
    }
    std::vector<std::string> tokens;
    std::istringstream ss{std::string(line)};
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0];
    if (kw == "group") {
      if (cur) fail("'group' inside group " + cur->name);
      if (tokens.size() != 2) fail("'group' takes one name");
      if (!names.insert(tokens[1]).second) fail("duplicate group " + tokens[1]);
      cur.emplace();
      cur->name = tokens[1];
      cur->source = source;
      cur->line = line_no;
      continue;
    }
    if (!cur) fail("'" + kw + "' outside a group block");
    if (kw == "degree") {
      if (tokens.size() != 2 || cur->degree != 0) fail("'degree' takes one value, once");
      try {
        cur->degree = parse_u64(tokens[1]);
      } catch (const Error& e) {
        fail(e.what());
      }
      if (cur->degree == 0 || cur->degree > kMaxDegree) fail("degree out of range");
    } else if (kw == "gen") {
      if (cur->degree == 0) fail("'gen' before 'degree'");
      if (tokens.size() < 2) fail("'gen' needs cycles");
      std::string cycles;
      for (std::size_t i = 1; i < tokens.size(); ++i) cycles += tokens[i];
      try {
        Permutation::parse(cur->degree, cycles);
      } catch (const Error& e) {
        fail(e.what());
      }
      cur->generators.push_back(std::move(cycles));
    } else if (kw == "expect") {
      if (tokens.size() < 2) fail("'expect' needs key=value");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tokens[i].size()) fail("malformed expectation");
        cur->expect.emplace_back(tokens[i].substr(0, eq), tokens[i].substr(eq + 1));
      }
    } else if (kw == "end") {
      if (cur->degree == 0) fail("group " + cur->name + " has no degree");
      if (cur->generators.empty()) fail("group " + cur->name + " has an empty generator list");
      out.push_back(std::move(*cur));
      cur.reset();
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (cur) throw Error(source + ": group " + cur->name + " lacks 'end'");
  return out;
}

std::vector<CatalogEntry> load_embedded_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& f : embedded_catalogs()) {
    auto part = parse_catalog(f.content, std::string(f.name));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_dir(const std::filesystem::path& dir) {
  std::vector<CatalogEntry> out;
  for (const auto& path : files_with(dir, "", ".grp")) {
    auto part = parse_catalog(read_file(path), path.filename().string());
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view name) {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw Error("no catalog group named '" + std::string(name) + "'");
}

std::string order18_census(const PermGroup& group) {
  const auto elements = group.elements();
  std::vector<Permutation> involutions;
  for (const auto& g : elements) {
    if (g.order() == 2) involutions.push_back(g);
  }
  // every order-18 subgroup is S x| <t>, S of order 9 inside the 3-part
  std::vector<Permutation> threes;
  for (const auto& g : elements) {
    if (g.order() % 2 != 0) threes.push_back(g);
  }
  using ElementSet = std::set<Permutation>;
  auto element_set = [](const PermGroup& h) {
    auto e = h.elements();
    return ElementSet(e.begin(), e.end());
  };
  std::set<ElementSet> nines;
  for (std::size_t i = 0; i < threes.size(); ++i) {
    for (std::size_t j = i; j < threes.size(); ++j) {
      PermGroup s(group.degree(), {threes[i], threes[j]});
      if (s.order() == 9) nines.insert(element_set(s));
    }
  }
  std::set<ElementSet> eighteens;
  for (const auto& s : nines) {
    std::vector<Permutation> gens(s.begin(), s.end());
    for (const auto& t : involutions) {
      gens.push_back(t);
      PermGroup h(group.degree(), gens);
      gens.pop_back();
      if (h.order() == 18) eighteens.insert(element_set(h));
    }
  }
  std::vector<std::string> classes;
  std::set<ElementSet> done;
  for (const auto& h : eighteens) {
    if (done.contains(h)) continue;
    std::set<ElementSet> orbit;
    for (const auto& g : elements) {
      ElementSet conj;
      for (const auto& x : h) conj.insert(x.conjugate_by(g));
      orbit.insert(std::move(conj));
    }
    done.insert(orbit.begin(), orbit.end());
    auto inv = std::count_if(h.begin(), h.end(), [](const Permutation& x) { return x.order() == 2; });
    classes.push_back(std::to_string(orbit.size()) + ":" + std::to_string(inv));
  }
  std::sort(classes.begin(), classes.end());
  std::string out;
  for (const auto& c : classes) out += (out.empty() ? "" : ",") + c;
  return out;
}

namespace {

bool parse_flag(const std::string& v) {
  if (v == "yes" || v == "true") return true;
  if (v == "no" || v == "false") return false;
  throw Error("flag value must be yes or no, got '" + v + "'");
}

std::multiset<std::string> multiset_of(std::string_view ati) {
  std::multiset<std::string> out;
  for (auto part : split(ati, ';')) out.insert(AbelianInvariants::from_log_string(part).log_string());
  return out;
}

}  // namespace

Report verify_entry(const CatalogEntry& entry) {
  Report r;
  r.subject = entry.name;
  std::optional<PermGroup> group;
  try {
    group.emplace(entry.group());
  } catch (const std::exception& e) {
    r.add("representation", false, e.what());
    return r;
  }
  const PermGroup& g = *group;

  std::optional<ArtinPattern> pattern;
  auto get_pattern = [&]() -> const ArtinPattern& {
    if (!pattern) pattern = artin_pattern(g);
    return *pattern;
  };
  std::optional<StructureReport> structure;
  auto get_structure = [&]() -> const StructureReport& {
    if (!structure) structure = structure_report(g);
    return *structure;
  };
  std::optional<HuppertResult> huppert;
  auto get_huppert = [&]() -> const HuppertResult& {
    if (!huppert) huppert = huppert_check(g);
    return *huppert;
  };

  for (const auto& [key, value] : entry.expect) {
    guarded(r, key, [&] {
      if (key == "order") {
        r.add(key, g.order() == parse_u64(value), std::to_string(g.order()));
      } else if (key == "class") {
        r.add(key, get_structure().nilpotency_class == static_cast<int>(parse_u64(value)),
              std::to_string(get_structure().nilpotency_class));
      } else if (key == "coclass") {
        r.add(key, get_structure().coclass == static_cast<int>(parse_u64(value)),
              std::to_string(get_structure().coclass));
      } else if (key == "tkt") {
        const auto& ap = get_pattern();
        const auto canon = canonicalize_tkt(ap.tkt);
        const bool tuple = value.size() == 4 && std::all_of(value.begin(), value.end(), ::isdigit);
        const auto want = tuple ? CapitulationType::parse(value) : named_representative(parse_tkt_name(value));
        r.add(key, tkt_equivalent(ap.tkt, want),
              ap.tkt.to_string() + " (" + to_string(canon.name) + ", canonical " + canon.canonical.to_string() + ")");
        if (auto ati = entry.expected("ati"); tuple && ati) {
          r.add("artin_pattern", artin_patterns_equivalent(ap, ArtinPattern{parse_ttt(*ati), want}),
                "computed [" + format_ttt(ap.ttt) + "], " + ap.tkt.to_string());
        }
      } else if (key == "ati") {
        const auto& ap = get_pattern();
        r.add(key, ttt_multiset(ap.ttt) == multiset_of(value), format_ttt(ap.ttt));
      } else if (key == "d2") {
        const int d2 = static_cast<int>(parse_u64(value));
        const int rho = static_cast<int>(abelianization(g).primary.size());
        auto interval = shafarevich_interval({rho, 0, 3, 1, d2});
        r.add(key, *interval.claimed_ok && d2 >= rho,
              "metadata; interval [" + std::to_string(interval.lo) + "," + std::to_string(interval.hi) + "]");
      } else if (key == "maxclass") {
        r.add(key, get_structure().maximal_class == parse_flag(value), "");
      } else if (key == "metabelian") {
        r.add(key, get_structure().metabelian == parse_flag(value), "");
      } else if (key == "metacyclic") {
        r.add(key, is_metacyclic(g) == parse_flag(value), "");
      } else if (key == "huppert") {
        r.add(key, to_string(get_huppert().verdict) == value, to_string(get_huppert().verdict));
      } else if (key == "huppert_conclusion") {
        const auto& h = get_huppert();
        r.add(key, (h.conclusion ? "holds" : "fails") == value,
              std::string("metabelian=") + (h.metabelian ? "yes" : "no") +
                  " gamma1_metacyclic=" + (h.centralizer_metacyclic ? "yes" : "no") +
                  " cl(gamma1)=" + std::to_string(h.centralizer_class));
      } else if (key == "two_step_ati") {
        auto c = two_step_centralizer(g);
        const bool abelian = c.is_abelian();
        const std::string got = abelian ? abelian_invariants(c).log_string() : "nonabelian";
        r.add(key, got == value, got);
      } else if (key == "little_towers") {
        if (value != "syl3a9") throw Error("little_towers only supports syl3a9");
        const PermGroup syl = sylow3_a9();
        auto towers = little_tower_groups(g, &syl);
        bool orders = true;
        int elementary = 0;
        for (const auto& t : towers) {
          orders = orders && abelianization(t.quotient) == AbelianInvariants::from_log_string("11");
          if (t.distinguished == AbelianInvariants::from_log_string("111")) ++elementary;
        }
        r.add(key, orders && elementary > 0, std::to_string(elementary) + " elementary targets, all Syl3(A9)");
      } else if (key == "unique_order27") {
        // subgroups of order 27 in a group of order 54 are its Sylow 3-subgroups
        std::vector<Permutation> threes;
        for (const auto& x : g.elements()) {
          if (x.order() % 2 != 0) threes.push_back(x);
        }
        PermGroup p(g.degree(), threes);
        const bool unique = g.order() == 54 && p.order() == 27;
        const std::string ati = unique && p.is_abelian() ? abelian_invariants(p).log_string() : "-";
        r.add(key, unique && ati == value, "Sylow 3-subgroup generated by 3-elements has order " +
                                               std::to_string(p.order()) + ", type " + ati);
      } else if (key == "order18_census") {
        const std::string got = order18_census(g);
        r.add(key, got == value, got);
      } else if (key == "prototype") {
        parse_flag(value);
      } else {
        r.add(key, false, "unknown expectation key");
      }
    });
  }
  return r;
}

std::vector<Prototype> catalog_prototypes(const std::vector<CatalogEntry>& entries) {
  std::vector<Prototype> out;
  for (const auto& e : entries) {
    auto flag = e.expected("prototype");
    if (flag && parse_flag(*flag)) out.push_back({e.name, artin_pattern(e.group())});
  }
  return out;
}

}  // namespace capitula
