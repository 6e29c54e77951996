#include "capitula/kernels.hpp"

#include <omp.h>

#include <algorithm>

#include "capitula/error.hpp"

namespace capitula::kernels {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

namespace {

// 0 when n is not cube-free; otherwise 1 if the partner a^2 b agrees, 2 if not.
int conjugation_status(std::uint64_t n) {
  PrimePowers factors = factorize(n);
  for (auto& [p, e] : factors) {
    if (e >= 3) return 0;
  }
  auto prof = conductor_and_species(factors);
  for (auto& [p, e] : factors) e = 3 - e;
  auto partner = conductor_and_species(factors);
  return prof.conductor == partner.conductor ? 1 : 2;
}

int multiplicity_or_zero(std::uint64_t f) {
  try {
    return multiplicity(f).m;
  } catch (const Error&) {
    return 0;
  }
}

Report row_report(const FixtureRow& row, std::span<const Prototype> protos) {
  try {
    return validate_row(row, protos);
  } catch (const std::exception& e) {
    Report r;
    r.subject = row.coordinates();
    r.add("validate_row", false, e.what());
    return r;
  }
}

Report entry_report(const CatalogEntry& entry) {
  try {
    return verify_entry(entry);
  } catch (const std::exception& e) {
    Report r;
    r.subject = entry.name;
    r.add("verify_entry", false, e.what());
    return r;
  }
}

}  // namespace

ConjugationScan conjugation_invariance_serial(std::uint64_t limit) {
  ConjugationScan out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    int s = conjugation_status(n);
    if (s > 0) ++out.checked;
    if (s == 2) out.mismatches.push_back(n);
  }
  return out;
}

ConjugationScan conjugation_invariance_parallel(std::uint64_t limit, int jobs) {
  ConjugationScan out;
  if (limit < 2) return out;
  std::vector<unsigned char> status(limit + 1, 0);
  const auto last = static_cast<std::int64_t>(limit);
#pragma omp parallel for schedule(dynamic, 4096) num_threads(resolve_jobs(jobs))
  for (std::int64_t n = 2; n <= last; ++n) status[static_cast<std::size_t>(n)] =
      static_cast<unsigned char>(conjugation_status(static_cast<std::uint64_t>(n)));
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (status[n] > 0) ++out.checked;
    if (status[n] == 2) out.mismatches.push_back(n);
  }
  return out;
}

MultiplicityHistogram multiplicity_scan_serial(std::uint64_t lo, std::uint64_t hi) {
  MultiplicityHistogram h;
  for (std::uint64_t f = std::max<std::uint64_t>(lo, 2); f <= hi; ++f) {
    if (int m = multiplicity_or_zero(f); m > 0) ++h[m];
  }
  return h;
}

MultiplicityHistogram multiplicity_scan_parallel(std::uint64_t lo, std::uint64_t hi, int jobs) {
  MultiplicityHistogram h;
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi < lo) return h;
  std::vector<int> ms(hi - lo + 1, 0);
  const auto count = static_cast<std::int64_t>(ms.size());
#pragma omp parallel for schedule(dynamic, 1024) num_threads(resolve_jobs(jobs))
  for (std::int64_t i = 0; i < count; ++i) {
    ms[static_cast<std::size_t>(i)] = multiplicity_or_zero(lo + static_cast<std::uint64_t>(i));
  }
  for (int m : ms) {
    if (m > 0) ++h[m];
  }
  return h;
}

std::vector<Report> validate_rows_serial(std::span<const FixtureRow> rows, std::span<const Prototype> protos) {
  std::vector<Report> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row_report(row, protos));
  return out;
}

std::vector<Report> validate_rows_parallel(std::span<const FixtureRow> rows, std::span<const Prototype> protos,
                                           int jobs) {
  std::vector<Report> out(rows.size());
  const auto count = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_jobs(jobs))
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = row_report(rows[static_cast<std::size_t>(i)], protos);
  }
  return out;
}

std::vector<Report> verify_catalog_serial(std::span<const CatalogEntry> entries) {
  std::vector<Report> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(entry_report(e));
  return out;
}

std::vector<Report> verify_catalog_parallel(std::span<const CatalogEntry> entries, int jobs) {
  std::vector<Report> out(entries.size());
  const auto count = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_jobs(jobs))
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = entry_report(entries[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace capitula::kernels
