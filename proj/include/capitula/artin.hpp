#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "capitula/group_ops.hpp"

namespace capitula {

/**
 * Transfer kernel type: entry i is j in 1..4 when the i-th kernel equals the
 * norm subgroup attached to position j, and 0 when the kernel is everything.
 * Text form is four digits, e.g. "0320".
 */
struct CapitulationType {
  std::array<int, 4> entries{};

  static CapitulationType parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const CapitulationType&, const CapitulationType&) = default;
  friend auto operator<=>(const CapitulationType&, const CapitulationType&) = default;
};

enum class TktName { a1, a2, b10, d19, d23, d25, unnamed };

std::string to_string(TktName name);
/// Throws for anything but the six named types.
TktName parse_tkt_name(std::string_view text);
/// Representative for a named type: a.1=0000, a.2=1000, b.10=0320, d.19=2320, d.23=1320, d.25=4320.
CapitulationType named_representative(TktName name);

/// A relabeling of positions 1..4; pi[i-1] is the image of i.
using Relabeling = std::array<int, 4>;

/// kappa'_i = pi~(kappa_{pi^-1(i)}), with pi~ extending pi by 0 -> 0.
CapitulationType relabel(const CapitulationType& kappa, const Relabeling& pi);
/// All 24 relabelings, identity first.
const std::vector<Relabeling>& all_relabelings();

struct CanonicalTkt {
  CapitulationType canonical;  // lexicographic minimum of the orbit
  TktName name = TktName::unnamed;
};

CanonicalTkt canonicalize_tkt(const CapitulationType& kappa);
bool tkt_equivalent(const CapitulationType& a, const CapitulationType& b);

/// kappa <= lambda iff every entry agrees or lambda's entry is 0.
bool tkt_leq(const CapitulationType& kappa, const CapitulationType& lambda);

struct TktFeatures {
  std::vector<int> fixed_points;                  // positions i with kappa_i = i
  std::vector<std::pair<int, int>> transpositions;  // {i, j}, i < j
};

TktFeatures tkt_features(const CapitulationType& kappa);

/// Transfer target type: logarithmic abelian invariants of the four targets.
using TransferTargetType = std::array<AbelianInvariants, 4>;

/// "21;111;111;21"
std::string format_ttt(const TransferTargetType& ttt);
TransferTargetType parse_ttt(std::string_view text);

struct ArtinPattern {
  TransferTargetType ttt;
  CapitulationType tkt;
};

/// Same pattern after one common relabeling of positions.
bool artin_patterns_equivalent(const ArtinPattern& a, const ArtinPattern& b);

enum class StablePart { holds, fails, inapplicable };
std::string to_string(StablePart s);

/**
 * For TKTs named b.10, d.19, d.23 or d.25: both targets at the transposition
 * positions must be elementary of rank 3. Anything else is inapplicable.
 */
StablePart stable_part_check(const ArtinPattern& pattern);

// Group side ---------------------------------------------------------------------

/// One representative per right coset of M in G, identity first.
std::vector<Permutation> right_transversal(const PermGroup& group, const PermGroup& sub);

/**
 * Artin transfer V: G -> M/M', V(g) = prod_i t_i g t_{sigma(i)}^-1 mod M',
 * where M t_i g = M t_{sigma(i)}.
 */
class ArtinTransfer {
 public:
  ArtinTransfer(const PermGroup& group, const PermGroup& sub);
  /// Uses the given right transversal; throws unless it has one element per coset.
  ArtinTransfer(const PermGroup& group, const PermGroup& sub, std::vector<Permutation> transversal);

  /// V(g) as an element of target().group().
  Permutation value(const Permutation& g) const;
  const QuotientMap& target() const noexcept { return target_; }
  const std::vector<Permutation>& transversal() const noexcept { return transversal_; }

  /// Elements of source.group() (a quotient of G) whose lifts map to the identity.
  std::vector<Permutation> kernel(const QuotientMap& source) const;
  /// Order of V(G) in M/M'.
  std::uint64_t image_order(const QuotientMap& source) const;

 private:
  const PermGroup* group_;
  const PermGroup* sub_;
  std::vector<Permutation> transversal_;
  QuotientMap target_;
};

/**
 * TKT and TTT of a 3-group with G/G' of type (3,3). Positions follow the
 * frozen order of maximal_subgroups(); the total kernel is tested before the
 * four norm subgroups M_j/G'.
 */
ArtinPattern artin_pattern(const PermGroup& group);

}  // namespace capitula
