#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "capitula/error.hpp"
#include "capitula/fixtures.hpp"
#include "capitula/tower.hpp"
#include "support.hpp"

using namespace capitula;

namespace {

const std::vector<FixtureRow>& rows() {
  static const auto all = load_embedded_tables();
  return all;
}

const FixtureRow& row(int table, std::uint64_t f, std::uint64_t n) {
  for (const auto& r : rows()) {
    if (r.table == table && r.f == f && r.n == n) return r;
  }
  throw Error("no such row");
}

const CheckResult* find_check(const Report& r, std::string_view name) {
  for (const auto& c : r.checks) {
    if (c.check == name) return &c;
  }
  return nullptr;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("embedded tables match the source files and checksums") {
  const auto recorded = parse_checksums(embedded_checksums());
  CHECK(recorded.size() == 7);
  for (const auto& f : embedded_tables()) {
    CAPTURE(f.name);
    auto it = recorded.find(std::string(f.name));
    REQUIRE(it != recorded.end());
    CHECK(fnv1a64(f.content) == it->second);
    CHECK(read_file(std::filesystem::path(CAPITULA_SOURCE_DIR) / "tables" / std::string(f.name)) == f.content);
  }
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("table row counts and examples") {
  std::map<int, int> counts;
  for (const auto& r : rows()) ++counts[r.table];
  CHECK(counts == expected_table_row_counts());
  CHECK(rows().size() == 110);

  const auto& t5 = row(5, 13785, 4595);
  CHECK(t5.p == 919);
  CHECK(t5.q1 == 5);
  CHECK_FALSE(t5.q2.has_value());
  CHECK(t5.ct == TktName::d23);
  CHECK(t5.kappa.to_string() == "3210");
  CHECK(format_ttt(t5.alpha) == "111;33;111;22");

  const auto& t3 = row(3, 5410, 5410);
  CHECK(t3.ct == TktName::d23);
  CHECK(t3.kappa.to_string() == "0243");
  CHECK(t3.aux == AuxType::gamma);
}

TEST_CASE("table parse errors carry locations") {
  CHECK_THROWS_AS(parse_table_tsv("", "empty.tsv"), Error);
  const std::string header(kTableHeader);
  const std::string good = header + "\n1\t19\t2\t11\t418\t836\t2^2*11*19\tb.10\t4001\t111;21;21;111\t38\talpha\n";
  CHECK(parse_table_tsv(good, "t.tsv").size() == 1);
  try {
    parse_table_tsv(header + "\n1\t19\t2\t11\t418\t836\t2^2*11*19\tb.10\t4001\t111;21;21\t38\talpha\n", "t.tsv");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("t.tsv:2: column alpha") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_table_tsv("1\t2\n", "noheader.tsv"), Error);
  CHECK_THROWS_AS(parse_table_tsv(header + "\n1\t19\t2\n", "short.tsv"), Error);
}

TEST_CASE("row validation") {
  const auto protos = catalog_prototypes(testsupport::catalog());
  REQUIRE_FALSE(protos.empty());
  for (const auto& r : rows()) {
    const auto report = validate_row(r, protos);
    CAPTURE(report.subject);
    for (const auto& c : report.checks) {
      CAPTURE(c.check);
      CAPTURE(c.detail);
      CHECK(c.status != CheckStatus::fail);
    }
  }

  const auto skipped = validate_row(row(1, 3154, 6308));
  const auto* residue = find_check(skipped, "cubic_residue");
  REQUIRE(residue != nullptr);
  CHECK(residue->status == CheckStatus::skipped);

  const auto d23 = validate_row(row(3, 5410, 5410));
  CHECK(find_check(d23, "admissible")->status == CheckStatus::pass);
  CHECK(find_check(d23, "aux_type")->status == CheckStatus::pass);

  FixtureRow synthetic = row(1, 418, 836);
  synthetic.kappa = CapitulationType::parse("0320");
  synthetic.alpha = parse_ttt("21;21;111;21");
  const auto bad = validate_row(synthetic);
  CHECK_FALSE(bad.ok());
  CHECK(find_check(bad, "stable_part")->status == CheckStatus::fail);

  FixtureRow wrong_name = row(1, 418, 836);
  wrong_name.ct = TktName::d23;
  CHECK_FALSE(validate_row(wrong_name).ok());
}

TEST_CASE("multiplets") {
  for (const auto& r : validate_multiplets(rows())) {
    CAPTURE(r.subject);
    CHECK(r.ok());
  }
  CHECK(incomplete_multiplets().at(3582) == 2);
  CHECK(multiplicity(3582).m == 4);

  auto missing = rows();
  missing.erase(std::find_if(missing.begin(), missing.end(), [](const FixtureRow& r) { return r.table == 2; }));
  const auto reports = validate_multiplets(missing);
  CHECK(std::any_of(reports.begin(), reports.end(), [](const Report& r) { return !r.ok(); }));
}

TEST_CASE("coclass rule on bold components") {
  for (const auto& r : rows()) {
    if (r.table == 1 && r.f == 418) {
      CHECK(r.alpha[2].log_string() == "21");
      CHECK(coclass_from_ati(r.alpha[2]) == 2);
    }
    if (r.table == 4 && r.f == 1626) {
      CHECK(r.alpha[2].log_string() == "22");
      CHECK(coclass_from_ati(r.alpha[2]) == 3);
    }
  }
}

TEST_CASE("catalog parsing") {
  const std::string ok = "# comment\ngroup 3#1\ndegree 3\ngen (1,2,3) # trailing\nexpect order=3\nend\n";
  const auto entries = parse_catalog(ok, "x.grp");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].group().order() == 3);
  CHECK(entries[0].expected("order") == "3");

  CHECK_THROWS_AS(parse_catalog("group a\ndegree 3\ngen (1,2,3)\n", "x.grp"), Error);
  CHECK_THROWS_AS(parse_catalog("group a\ngen (1,2,3)\nend\n", "x.grp"), Error);
  CHECK_THROWS_AS(parse_catalog("group a\ndegree 3\nend\n", "x.grp"), Error);
  CHECK_THROWS_AS(parse_catalog(ok + ok, "x.grp"), Error);
  CHECK_THROWS_AS(parse_catalog("group a\ngroup b\n", "x.grp"), Error);
  CHECK_THROWS_AS(parse_catalog("bogus\n", "x.grp"), Error);
  CHECK_THROWS_AS(find_entry(entries, "9#9"), Error);
  CHECK_THROWS_AS(parse_catalog("group a\ndegree 3\ngen (1,4)\nend\n", "x.grp")[0].group(), Error);
}

TEST_CASE("catalog verification") {
  for (const auto& e : testsupport::catalog()) {
    const auto report = verify_entry(e);
    CAPTURE(report.subject);
    for (const auto& c : report.checks) {
      CAPTURE(c.check);
      CAPTURE(c.detail);
      CHECK(c.status == CheckStatus::pass);
    }
  }
  CatalogEntry wrong = find_entry(testsupport::catalog(), "243#3");
  wrong.expect.emplace_back("class", "4");
  CHECK_FALSE(verify_entry(wrong).ok());
  wrong = find_entry(testsupport::catalog(), "243#3");
  wrong.expect.emplace_back("colour", "blue");
  CHECK_FALSE(verify_entry(wrong).ok());
}

TEST_CASE("order 54 census") {
  const PermGroup g = testsupport::catalog_group("54#13");
  CHECK(order18_census(g) == "1:9,3:3,3:3,3:3,3:3");
}
