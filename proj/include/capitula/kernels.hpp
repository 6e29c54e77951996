#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "capitula/fixtures.hpp"

// Bulk kernels. Each *_parallel function is an OpenMP version of the matching
// *_serial reference and returns identical results in identical order.
namespace capitula::kernels {

struct ConjugationScan {
  std::uint64_t checked = 0;                // cube-free n in [2, limit]
  std::vector<std::uint64_t> mismatches;   // n whose partner has another conductor
};

/// conductor(n) == conductor(partner) for every cube-free 2 <= n <= limit.
ConjugationScan conjugation_invariance_serial(std::uint64_t limit);
ConjugationScan conjugation_invariance_parallel(std::uint64_t limit, int jobs);

/// m -> number of conductors in [lo, hi] accepted by multiplicity().
using MultiplicityHistogram = std::map<int, std::uint64_t>;

MultiplicityHistogram multiplicity_scan_serial(std::uint64_t lo, std::uint64_t hi);
MultiplicityHistogram multiplicity_scan_parallel(std::uint64_t lo, std::uint64_t hi, int jobs);

std::vector<Report> validate_rows_serial(std::span<const FixtureRow> rows, std::span<const Prototype> protos);
std::vector<Report> validate_rows_parallel(std::span<const FixtureRow> rows, std::span<const Prototype> protos,
                                           int jobs);

std::vector<Report> verify_catalog_serial(std::span<const CatalogEntry> entries);
std::vector<Report> verify_catalog_parallel(std::span<const CatalogEntry> entries, int jobs);

/// jobs <= 0 means the OpenMP default.
int resolve_jobs(int jobs);

}  // namespace capitula::kernels
