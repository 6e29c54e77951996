// capitula: command-line front end. Results go to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 domain error or failed check, 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "capitula/artin.hpp"
#include "capitula/cubic.hpp"
#include "capitula/error.hpp"
#include "capitula/fixtures.hpp"
#include "capitula/kernels.hpp"
#include "capitula/tower.hpp"

using nlohmann::json;
using namespace capitula;

namespace {

struct Outcome {
  json result = json::object();
  std::ostringstream text;
  std::vector<std::string> warnings;
  bool ok = true;
};

// "<file>#<name>" reads a catalog file; a bare name uses the embedded catalog.
// Catalog names contain '#', so the file is the shortest prefix naming a regular file.
CatalogEntry resolve_group(const std::string& spec) {
  for (auto hash = spec.find('#'); hash != std::string::npos; hash = spec.find('#', hash + 1)) {
    const std::filesystem::path path(spec.substr(0, hash));
    if (!std::filesystem::is_regular_file(path)) continue;
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return find_entry(parse_catalog(ss.str(), path.filename().string()), spec.substr(hash + 1));
  }
  return find_entry(load_embedded_catalog(), spec);
}

json ati_json(const AbelianInvariants& a) {
  return json{{"log", a.log_string()}, {"primary", a.primary}};
}

void group_info(const std::string& spec, Outcome& out) {
  const auto entry = resolve_group(spec);
  const PermGroup g = entry.group();
  out.result["name"] = entry.name;
  out.result["degree"] = g.degree();
  out.result["order"] = g.order();
  out.text << entry.name << ": degree " << g.degree() << ", order " << g.order() << "\n";
  std::vector<std::uint64_t> lcs, derived;
  for (const auto& s : lower_central_series(g)) lcs.push_back(s.order());
  for (const auto& s : derived_series(g)) derived.push_back(s.order());
  out.result["lower_central_orders"] = lcs;
  out.result["derived_orders"] = derived;
  const auto ab = abelianization(g);
  out.result["abelianization"] = ab.primary;
  out.text << "lower central series orders:";
  for (auto o : lcs) out.text << " " << o;
  out.text << "\nderived series orders:";
  for (auto o : derived) out.text << " " << o;
  out.text << "\nabelianization:";
  for (auto o : ab.primary) out.text << " " << o;
  out.text << "\n";
  if (is_three_group(g)) {
    const auto s = structure_report(g);
    out.result["class"] = s.nilpotency_class;
    out.result["coclass"] = s.coclass;
    out.result["metabelian"] = s.metabelian;
    out.result["maximal_class"] = s.maximal_class;
    out.result["metacyclic"] = s.metacyclic ? json(*s.metacyclic) : json(nullptr);
    out.text << "class " << s.nilpotency_class << ", coclass " << s.coclass << ", metabelian "
             << (s.metabelian ? "yes" : "no") << ", maximal class " << (s.maximal_class ? "yes" : "no")
             << ", metacyclic "
             << (s.metacyclic ? (*s.metacyclic ? "yes" : "no") : "unknown (above search cap)") << "\n";
  }
}

void group_artin(const std::string& spec, Outcome& out) {
  const auto entry = resolve_group(spec);
  const auto ap = artin_pattern(entry.group());
  const auto canon = canonicalize_tkt(ap.tkt);
  const auto stable = stable_part_check(ap);
  out.result = json{{"name", entry.name},
                    {"tkt", ap.tkt.to_string()},
                    {"tkt_name", to_string(canon.name)},
                    {"tkt_canonical", canon.canonical.to_string()},
                    {"ttt", format_ttt(ap.ttt)},
                    {"stable_part", to_string(stable)}};
  out.text << entry.name << ": tkt " << ap.tkt.to_string() << " (" << to_string(canon.name) << "), ttt "
           << format_ttt(ap.ttt) << ", stable part " << to_string(stable) << "\n";
}

void group_huppert(const std::string& spec, Outcome& out) {
  const auto entry = resolve_group(spec);
  const auto h = huppert_check(entry.group());
  out.result = json{{"name", entry.name},
                    {"verdict", to_string(h.verdict)},
                    {"hypothesis", h.hypothesis},
                    {"conclusion", h.conclusion},
                    {"metabelian", h.metabelian},
                    {"gamma1_metacyclic", h.centralizer_metacyclic},
                    {"gamma1_class", h.centralizer_class},
                    {"gamma1_abelianization", ati_json(h.centralizer_abelianization)}};
  out.text << entry.name << ": " << to_string(h.verdict) << "\n"
           << "hypothesis (maximal class, order >= 3^5): " << (h.hypothesis ? "met" : "not met") << "\n"
           << "conclusion: " << (h.conclusion ? "holds" : "fails") << " (metabelian "
           << (h.metabelian ? "yes" : "no") << ", gamma1 metacyclic " << (h.centralizer_metacyclic ? "yes" : "no")
           << ", cl(gamma1) " << h.centralizer_class << ", gamma1/gamma1' "
           << h.centralizer_abelianization.log_string() << ")\n";
}

void group_tower(const std::string& spec, Outcome& out) {
  const auto entry = resolve_group(spec);
  const PermGroup g = entry.group();
  const PermGroup syl = sylow3_a9();
  const auto towers = little_tower_groups(g, &syl);
  json list = json::array();
  out.text << entry.name << ": little two-stage towers\n";
  for (std::size_t i = 0; i < towers.size(); ++i) {
    const bool elementary = towers[i].distinguished == AbelianInvariants::from_log_string("111");
    list.push_back(json{{"position", i + 1},
                        {"order", towers[i].quotient.order()},
                        {"target", towers[i].distinguished.log_string()},
                        {"syl3_a9", elementary}});
    out.text << "  " << i + 1 << ": |G/M'| = " << towers[i].quotient.order() << ", M/M' = "
             << towers[i].distinguished.log_string() << (elementary ? ", isomorphic to Syl3(A9)" : "") << "\n";
  }
  out.result["name"] = entry.name;
  out.result["little_towers"] = list;
  const auto c = two_step_centralizer(g);
  out.result["two_step_centralizer_order"] = c.order();
  out.text << "two-step centralizer: order " << c.order();
  if (c.is_abelian()) {
    out.result["two_step_centralizer_ati"] = abelian_invariants(c).log_string();
    out.text << ", abelian " << abelian_invariants(c).log_string();
  }
  out.text << "\n";
}

void tkt_canon(const std::string& tuple, Outcome& out) {
  const auto k = CapitulationType::parse(tuple);
  const auto c = canonicalize_tkt(k);
  const std::string rep =
      c.name == TktName::unnamed ? c.canonical.to_string() : named_representative(c.name).to_string();
  out.result = json{{"input", tuple},
                    {"name", to_string(c.name)},
                    {"representative", rep},
                    {"canonical", c.canonical.to_string()}};
  out.text << to_string(c.name) << " (" << rep << ")\n";
}

void tkt_leq(const std::string& a, const std::string& b, Outcome& out) {
  const bool v = capitula::tkt_leq(CapitulationType::parse(a), CapitulationType::parse(b));
  out.result = json{{"a", a}, {"b", b}, {"leq", v}};
  out.text << (v ? "true" : "false") << "\n";
}

void tkt_features(const std::string& tuple, Outcome& out) {
  const auto f = capitula::tkt_features(CapitulationType::parse(tuple));
  json trans = json::array();
  out.text << "fixed points:";
  for (int i : f.fixed_points) out.text << " " << i;
  out.text << "\ntranspositions:";
  for (auto [i, j] : f.transpositions) {
    trans.push_back({i, j});
    out.text << " {" << i << "," << j << "}";
  }
  out.text << "\n";
  out.result = json{{"input", tuple}, {"fixed_points", f.fixed_points}, {"transpositions", trans}};
}

void radicand(std::uint64_t n, Outcome& out) {
  const auto p = normalize_radicand(n);
  const std::string fact = format_factorization(factorize(p.n));
  out.result = json{{"input", n},       {"n", p.n},
                    {"a", p.a},         {"b", p.b},
                    {"conductor", p.conductor}, {"species", to_string(p.species)},
                    {"factorization", fact}};
  out.text << "n=" << p.n << " = " << fact << " (a=" << p.a << ", b=" << p.b << "), f=" << p.conductor
           << ", species " << to_string(p.species) << "\n";
}

void conductor(std::uint64_t f, bool with_multiplicity, Outcome& out) {
  const auto shape = classify_conductor(f);
  out.result = json{{"f", f}, {"shape", to_string(shape.shape)}};
  if (shape.shape != ConductorShapeKind::other) {
    out.result["p"] = shape.p;
    out.result["q"] = shape.qs;
  }
  if (!with_multiplicity) {
    out.text << "f=" << f << " shape " << to_string(shape.shape);
    if (shape.shape != ConductorShapeKind::other) {
      out.text << " p=" << shape.p << " q=";
      for (std::size_t i = 0; i < shape.qs.size(); ++i) out.text << (i ? "," : "") << shape.qs[i];
    }
    out.text << "\n";
    return;
  }
  const auto m = multiplicity(f);
  out.result["m"] = m.m;
  out.result["radicands"] = m.radicands;
  out.text << "m=" << m.m << ";";
  for (auto n : m.radicands) out.text << " " << n;
  out.text << "\n";
}

void residue(std::int64_t x, std::uint64_t p, Outcome& out) {
  const auto r = cubic_residue_symbol(x, p);
  out.result = json{{"x", x}, {"p", p}, {"symbol", to_string(r)}};
  out.text << to_string(r) << "\n";
}

void admissible(const std::string& aux, int index, Outcome& out) {
  const auto types = admissible_capitulation_types(parse_aux_type(aux), index);
  json list = json::array();
  for (std::size_t i = 0; i < types.size(); ++i) {
    list.push_back(json{{"name", to_string(types[i])}, {"tkt", named_representative(types[i]).to_string()}});
    out.text << (i ? ", " : "") << to_string(types[i]) << " (" << named_representative(types[i]).to_string() << ")";
  }
  const int kernel = herbrand_kernel_size(index);
  out.text << "; transfer kernel order " << kernel << "\n";
  out.result = json{{"aux", aux}, {"unit_norm_index", index}, {"types", list}, {"kernel_order", kernel}};
}

void shafarevich(int rho, int r1, int r2, int theta, std::optional<int> d2, Outcome& out) {
  const auto s = shafarevich_interval({rho, r1, r2, theta, d2});
  out.result = json{{"lo", s.lo}, {"hi", s.hi}};
  out.text << "[" << s.lo << "," << s.hi << "]\n";
  if (s.claimed_ok) {
    out.result["d2"] = *d2;
    out.result["claimed_ok"] = *s.claimed_ok;
    out.text << "d2=" << *d2 << (*s.claimed_ok ? " inside" : " OUTSIDE") << "\n";
    out.ok = *s.claimed_ok;
  }
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"check", c.check}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return json{{"subject", r.subject}, {"ok", r.ok()}, {"checks", checks}};
}

void summarize(const std::string& label, const std::vector<Report>& reports, bool verbose, Outcome& out) {
  std::size_t failed = 0, checks = 0, skipped = 0;
  json list = json::array();
  for (const auto& r : reports) {
    list.push_back(report_json(r));
    if (!r.ok()) ++failed;
    for (const auto& c : r.checks) {
      ++checks;
      if (c.status == CheckStatus::skipped) ++skipped;
      if (c.status == CheckStatus::fail || verbose) {
        out.text << "  " << r.subject << " | " << c.check << " | " << to_string(c.status)
                 << (c.detail.empty() ? "" : " | " + c.detail) << "\n";
      }
    }
  }
  out.text << label << ": " << reports.size() << " subjects, " << checks << " checks, " << skipped
           << " skipped, " << failed << " failing subjects\n";
  out.result[label] = json{{"subjects", reports.size()}, {"checks", checks}, {"skipped", skipped},
                           {"failed", failed}, {"reports", list}};
  if (failed) out.ok = false;
}

void validate(bool tables, bool catalog, int jobs, const std::optional<std::string>& tables_dir,
              bool verbose, Outcome& out) {
  if (!tables && !catalog) tables = catalog = true;
  std::vector<CatalogEntry> entries;
  std::vector<Prototype> protos;
  if (catalog || tables) entries = load_embedded_catalog();
  if (catalog) summarize("catalog", kernels::verify_catalog_parallel(entries, jobs), verbose, out);
  if (tables) {
    std::optional<std::filesystem::path> dir;
    if (tables_dir) dir = *tables_dir;
    if (!dir && std::getenv("CAPITULA_TABLES") == nullptr) {
      // embedded copy must match the recorded transcription checksums
      const auto recorded = parse_checksums(embedded_checksums());
      Report sums;
      sums.subject = "transcription checksums";
      for (const auto& f : embedded_tables()) {
        auto it = recorded.find(std::string(f.name));
        sums.add(std::string(f.name), it != recorded.end() && it->second == fnv1a64(f.content));
      }
      summarize("checksums", {sums}, verbose, out);
    }
    const auto rows = load_tables(dir);
    protos = catalog_prototypes(entries);
    summarize("tables", kernels::validate_rows_parallel(rows, protos, jobs), verbose, out);
    summarize("multiplets", validate_multiplets(rows), verbose, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capitula: Artin transfers of 3-groups and pure cubic conductor arithmetic"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON document");
  std::optional<std::string> tables_dir;
  app.add_option("--tables-dir", tables_dir, "Read table*.tsv from this directory");

  Outcome out;
  std::function<void()> action;

  auto* group = app.add_subcommand("group", "Catalog group computations")->require_subcommand(1);
  std::string group_spec;
  for (auto [name, fn] : {std::pair{"info", &group_info}, std::pair{"artin", &group_artin},
                          std::pair{"huppert", &group_huppert}, std::pair{"tower", &group_tower}}) {
    auto* sub = group->add_subcommand(name, std::string("group ") + name);
    sub->add_option("group", group_spec, "<name> or <file.grp>#<name>")->required();
    sub->callback([&, fn = fn] { action = [&, fn] { fn(group_spec, out); }; });
  }

  auto* tkt = app.add_subcommand("tkt", "Capitulation type algebra")->require_subcommand(1);
  std::string ta, tb;
  auto* canon = tkt->add_subcommand("canon", "Canonical form and name");
  canon->add_option("tuple", ta)->required();
  canon->callback([&] { action = [&] { tkt_canon(ta, out); }; });
  auto* leq = tkt->add_subcommand("leq", "Partial order a <= b");
  leq->add_option("a", ta)->required();
  leq->add_option("b", tb)->required();
  leq->callback([&] { action = [&] { tkt_leq(ta, tb, out); }; });
  auto* feat = tkt->add_subcommand("features", "Fixed points and transpositions");
  feat->add_option("tuple", ta)->required();
  feat->callback([&] { action = [&] { tkt_features(ta, out); }; });

  std::uint64_t number = 0;
  auto* rad = app.add_subcommand("radicand", "Normalize a radicand");
  rad->add_option("n", number)->required();
  rad->callback([&] { action = [&] { radicand(number, out); }; });

  bool with_m = false;
  auto* cond = app.add_subcommand("conductor", "Conductor shape and multiplicity");
  cond->add_option("f", number)->required();
  cond->add_flag("--multiplicity", with_m);
  cond->callback([&] { action = [&] { conductor(number, with_m, out); }; });

  std::int64_t x = 0;
  auto* res = app.add_subcommand("residue", "Cubic residue symbol");
  res->add_option("x", x)->required();
  res->add_option("p", number)->required();
  res->callback([&] { action = [&] { residue(x, number, out); }; });

  std::string aux;
  int index = 0;
  auto* adm = app.add_subcommand("admissible", "Admissible capitulation types");
  adm->add_option("aux", aux)->required()->check(CLI::IsMember({"alpha", "beta", "gamma"}));
  adm->add_option("index", index)->required();
  adm->callback([&] { action = [&] { admissible(aux, index, out); }; });

  int rho = 0, r1 = 0, r2 = 0, theta = 0;
  std::optional<int> d2;
  auto* sha = app.add_subcommand("shafarevich", "Relation rank bounds");
  sha->add_option("rho", rho)->required();
  sha->add_option("r1", r1)->required();
  sha->add_option("r2", r2)->required();
  sha->add_option("theta", theta)->required();
  sha->add_option("--d2", d2);
  sha->callback([&] { action = [&] { shafarevich(rho, r1, r2, theta, d2, out); }; });

  bool v_tables = false, v_catalog = false, verbose = false;
  int jobs = 0;
  auto* val = app.add_subcommand("validate", "Run the fixture harness");
  val->add_flag("--tables", v_tables);
  val->add_flag("--catalog", v_catalog);
  val->add_option("--jobs", jobs, "Worker threads (default: all)");
  val->add_flag("--verbose", verbose, "List every check");
  val->callback([&] { action = [&] { validate(v_tables, v_catalog, jobs, tables_dir, verbose, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  int code = 0;
  std::string error;
  try {
    action();
    code = out.ok ? 0 : 1;
  } catch (const std::exception& e) {
    error = e.what();
    code = 1;
  }

  if (as_json) {
    std::vector<std::string> command(argv + 1, argv + argc);
    json doc{{"command", command}, {"result", out.result}, {"warnings", out.warnings}, {"exit_code", code}};
    if (!error.empty()) doc["error"] = error;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
  }
  if (!error.empty()) std::cerr << "error: " << error << "\n";
  return code;
}
