#pragma once

#include <deque>
#include <random>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "capitula/fixtures.hpp"
#include "capitula/group_ops.hpp"

namespace testsupport {

inline const std::vector<capitula::CatalogEntry>& catalog() {
  static const auto entries = capitula::load_embedded_catalog();
  return entries;
}

inline capitula::PermGroup catalog_group(std::string_view name) {
  return capitula::find_entry(catalog(), name).group();
}

using ElementSet = std::unordered_set<capitula::Permutation, capitula::PermutationHash>;

// Closure of the generators under right multiplication, without stabilizer chains.
inline ElementSet brute_closure(std::size_t degree, const std::vector<capitula::Permutation>& gens) {
  ElementSet seen{capitula::Permutation(degree)};
  std::deque<capitula::Permutation> queue{capitula::Permutation(degree)};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto y = x * g;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

inline capitula::PermGroup abelian_three_group(const std::vector<int>& log_orders) {
  std::size_t degree = 0;
  for (int e : log_orders) {
    std::size_t n = 1;
    for (int k = 0; k < e; ++k) n *= 3;
    degree += n;
  }
  std::vector<capitula::Permutation> gens;
  std::size_t offset = 0;
  for (int e : log_orders) {
    std::size_t n = 1;
    for (int k = 0; k < e; ++k) n *= 3;
    std::vector<capitula::Point> images(degree);
    for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<capitula::Point>(x);
    for (std::size_t x = 0; x < n; ++x) images[offset + x] = static_cast<capitula::Point>(offset + (x + 1) % n);
    gens.push_back(capitula::Permutation::from_images(images));
    offset += n;
  }
  return capitula::PermGroup(degree, gens);
}

}  // namespace testsupport
