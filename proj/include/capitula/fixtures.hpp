#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capitula/artin.hpp"
#include "capitula/cubic.hpp"

namespace capitula {

// Embedded data ------------------------------------------------------------------

struct EmbeddedFile {
  std::string_view name;
  std::string_view content;
};

std::span<const EmbeddedFile> embedded_tables();
std::span<const EmbeddedFile> embedded_catalogs();

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view data);

/// Per-file checksums recorded in tables/checksums.txt ("<hex>  <name>").
std::map<std::string, std::uint64_t> parse_checksums(std::string_view text);
std::string_view embedded_checksums();

// Tables -------------------------------------------------------------------------

inline constexpr std::string_view kTableHeader =
    "table\tp\tq1\tq2\tf\tn\tfactorization\tct\tkappa\talpha\tdpf\taux";

struct FixtureRow {
  int table = 0;
  std::uint64_t p = 0;
  std::uint64_t q1 = 0;
  std::optional<std::uint64_t> q2;
  std::uint64_t f = 0;
  std::uint64_t n = 0;
  std::string factorization;
  TktName ct = TktName::unnamed;
  CapitulationType kappa;
  TransferTargetType alpha;
  std::uint64_t dpf = 0;
  AuxType aux = AuxType::alpha;
  std::string source;
  int line = 0;

  /// "Table 3, f=5410, n=5410"
  std::string coordinates() const;
};

/// Throws with "<source>:<line>: column <name>: ..." on malformed input. Empty input is an error.
std::vector<FixtureRow> parse_table_tsv(std::string_view text, const std::string& source);
std::vector<FixtureRow> load_embedded_tables();
/// All table*.tsv files of a directory, in name order.
std::vector<FixtureRow> load_tables_dir(const std::filesystem::path& dir);
/// `dir` if given, else $CAPITULA_TABLES if set, else the embedded copy.
std::vector<FixtureRow> load_tables(const std::optional<std::filesystem::path>& dir);

/// Printed row count per table.
const std::map<int, int>& expected_table_row_counts();

/// Conductors whose printed multiplet is knowingly incomplete: f -> rows printed.
const std::map<std::uint64_t, int>& incomplete_multiplets();

// Reports ------------------------------------------------------------------------

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<CheckResult> checks;

  bool ok() const;
  void add(std::string check, bool passed, std::string detail = {});
  void skip(std::string check, std::string detail);
};

/// Known group-side Artin patterns that table rows are aligned against.
struct Prototype {
  std::string name;
  ArtinPattern pattern;
};

/**
 * Row checks: factorization, normalization, conductor and species, conductor
 * shape, multiplet membership, CT name, TKT features, stable part, cubic
 * residue of the DPF (skipped when p | DPF), DPF type of p and admissible CT.
 * With prototypes: alignment of the row's Artin pattern with a prototype of the
 * same TKT class and TTT multiset, positional and multiset reported apart.
 */
Report validate_row(const FixtureRow& row, std::span<const Prototype> prototypes = {});

/// Row counts per table, and each conductor's rows against multiplicity(f).
std::vector<Report> validate_multiplets(const std::vector<FixtureRow>& rows);

// Catalog ------------------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::vector<std::pair<std::string, std::string>> expect;
  std::string source;
  int line = 0;

  PermGroup group() const;
  std::optional<std::string> expected(std::string_view key) const;
};

std::vector<CatalogEntry> parse_catalog(std::string_view text, const std::string& source);
std::vector<CatalogEntry> load_embedded_catalog();
/// All *.grp files of a directory, in name order.
std::vector<CatalogEntry> load_catalog_dir(const std::filesystem::path& dir);
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view name);

/**
 * Recomputes every expectation of an entry. Keys: order, class, coclass, tkt
 * (name or tuple; a tuple is also checked jointly with ati up to relabeling),
 * ati (multiset), d2 (inside the Shafarevich interval for rho = rank G/G',
 * signature (0,3), theta = 1), maxclass, metabelian, metacyclic, huppert,
 * huppert_conclusion, two_step_ati, little_towers=syl3a9, unique_order27,
 * order18_census.
 */
Report verify_entry(const CatalogEntry& entry);

/// Artin patterns of catalog entries that carry `prototype=yes`.
std::vector<Prototype> catalog_prototypes(const std::vector<CatalogEntry>& entries);

/// Sorted "size:involutions" per conjugacy class of order-18 subgroups.
std::string order18_census(const PermGroup& group);

}  // namespace capitula
