#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "capitula/permutation.hpp"

namespace capitula {

/// Element enumeration refuses groups larger than this (3^9).
inline constexpr std::uint64_t kEnumerationCap = 19683;

/**
 * Finite group generated by permutations on {0..degree-1}.
 *
 * The stabilizer chain (base, strong generators, orbits and explicit
 * transversals) is built eagerly by deterministic Schreier-Sims; the object
 * is immutable afterwards and safe to share between threads.
 *
 * Subgroups are PermGroups on the same domain; a subgroup relation is a
 * property checked with is_subgroup_of(), not a stored reference.
 */
class PermGroup {
 public:
  /// Identity generators are dropped. An empty list gives the trivial group.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);
  /// Parses cycle strings; an empty list is an error.
  static PermGroup from_cycles(std::size_t degree, const std::vector<std::string>& cycles);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Product of the fundamental orbit lengths.
  std::uint64_t order() const noexcept { return order_; }
  /// Strips x through the chain. Throws on degree mismatch.
  bool contains(const Permutation& x) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;

  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_abelian() const;
  bool is_subgroup_of(const PermGroup& parent) const;
  /// True when this group is normalized by every generator of `parent`.
  bool is_normal_in(const PermGroup& parent) const;
  bool same_elements(const PermGroup& other) const;

  /// Uniformly random element via the transversals.
  Permutation random_element(std::mt19937_64& rng) const;
  /// All elements, ordered by the chain; throws CapExceeded above `cap`.
  std::vector<Permutation> elements(std::uint64_t cap = kEnumerationCap) const;

  /// Group generated by this group's generators plus `extra`.
  PermGroup with_generators(const std::vector<Permutation>& extra) const;

  Permutation identity() const { return Permutation(degree_); }

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // point -> index into orbit, -1 if absent
    std::vector<Permutation> transversal;  // base_point^transversal[k] == orbit[k]
    std::vector<Permutation> inverse_transversal;
  };

  void build();
  void rebuild_orbit(Level& level);
  /// Sifts g from `from_level`; returns the residue and the level where it stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from_level) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

}  // namespace capitula
