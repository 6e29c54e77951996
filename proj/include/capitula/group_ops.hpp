#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "capitula/perm_group.hpp"

namespace capitula {

/// Abelian invariants are counted element by element up to this order (3^8).
inline constexpr std::uint64_t kAbelianInvariantsCap = 6561;
/// Centralizers in quotients enumerate the quotient up to this order (3^6).
inline constexpr std::uint64_t kCentralizerQuotientCap = 729;
/// Explicit isomorphism search runs only up to this order.
inline constexpr std::uint64_t kIsomorphismCap = 243;

using Subgroup = PermGroup;

// Series and subgroups -------------------------------------------------------

/// Smallest normal subgroup of `group` containing `generators`.
PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& generators);
/// [A, B] for A, B normal in `group`.
PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b, const PermGroup& group);
Subgroup derived_subgroup(const PermGroup& group);

/**
 * Lower central series G = gamma_1 >= gamma_2 = [G,G] >= gamma_{i+1} = [gamma_i, G].
 * Index 0 holds gamma_1. The series stops at the first repeated term, so a
 * nilpotent group ends with the trivial subgroup.
 */
std::vector<Subgroup> lower_central_series(const PermGroup& group);
/// Nilpotency class, or nullopt when the series stalls above the trivial group.
std::optional<int> nilpotency_class(const PermGroup& group);
std::vector<Subgroup> derived_series(const PermGroup& group);

bool is_p_group(std::uint64_t order, std::uint64_t p);
bool is_three_group(const PermGroup& group);
/// log_3 of a power of 3; throws otherwise.
int log3_exact(std::uint64_t n);

// Quotients --------------------------------------------------------------------

/**
 * Natural map G -> G/N realised as the action of G on the right cosets of N.
 * The image acts regularly on [G:N] points; coset 0 is N itself.
 */
class QuotientMap {
 public:
  /// Throws when N is not a normal subgroup of G or |G| exceeds kEnumerationCap.
  QuotientMap(const PermGroup& group, const PermGroup& normal);

  const PermGroup& group() const noexcept { return image_; }
  std::uint64_t index() const noexcept { return reps_.size(); }
  Permutation project(const Permutation& g) const;
  /// Some preimage of an element of group().
  Permutation lift(const Permutation& q) const;
  /// Coset number of g (0 for elements of N).
  std::uint32_t coset_of(const Permutation& g) const;

 private:
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> coset_;
  PermGroup image_;
};

PermGroup quotient(const PermGroup& group, const PermGroup& normal);

// Abelian invariants -----------------------------------------------------------

/**
 * Primary decomposition of a finite abelian group (prime powers, descending).
 * For 3-groups, `logarithmic` holds the 3-exponents, e.g. {2,1} for 9x3.
 */
struct AbelianInvariants {
  std::vector<std::uint64_t> primary;
  std::optional<std::vector<int>> logarithmic;

  std::uint64_t order() const;
  /// "21", "111", "1"; "0" for the trivial group. Throws without a logarithmic form.
  std::string log_string() const;
  static AbelianInvariants from_log_string(std::string_view text);

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelian_invariants(const PermGroup& group);
AbelianInvariants abelianization(const PermGroup& group);

// Maximal subgroups ------------------------------------------------------------

/**
 * Frattini quotient data of a 3-group: Phi = G'G^3 and a basis of G/Phi taken
 * greedily from the generators in order.
 */
struct FrattiniData {
  PermGroup frattini;
  std::vector<Permutation> basis;
  int rank() const noexcept { return static_cast<int>(basis.size()); }
};

FrattiniData frattini_data(const PermGroup& group);

/**
 * The (3^r - 1)/2 maximal subgroups of a 3-group, as preimages of hyperplanes
 * of G/Phi. Hyperplane {c : v.c = 0} is labelled by its normal vector v with
 * leading nonzero entry 1; subgroups are returned in lexicographic order of v
 * (coordinates relative to FrattiniData::basis). For r = 2 the order is
 * v = (0,1), (1,0), (1,1), (1,2).
 */
std::vector<Subgroup> maximal_subgroups(const PermGroup& group);

// Isomorphism ------------------------------------------------------------------

enum class IsoVerdict { isomorphic, not_isomorphic, fingerprint_equal };

struct GroupFingerprint {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> lower_central_orders;
  std::vector<std::uint64_t> derived_orders;
  std::vector<std::uint64_t> abelianization;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> element_orders;  // (order, count)
  std::vector<std::string> maximal_ati;  // sorted, 3-groups only

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const PermGroup& group);

/**
 * Fingerprint filter, then a generator-image backtrack for orders up to
 * kIsomorphismCap. Larger orders require `allow_fingerprint_only` and report
 * fingerprint_equal instead of isomorphic.
 */
IsoVerdict is_isomorphic_small(const PermGroup& g, const PermGroup& h,
                               bool allow_fingerprint_only = false);

// Centralizers -----------------------------------------------------------------

/// Full preimage in G of C_{G/N}(S/N). Requires N normal, N <= S <= G, |G/N| <= 3^6.
Subgroup centralizer_in_quotient(const PermGroup& group, const PermGroup& normal,
                                 const PermGroup& sub);

}  // namespace capitula
