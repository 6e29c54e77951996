#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "capitula/artin.hpp"

namespace capitula {

/// Cyclic-normal-subgroup search for metacyclicity enumerates groups up to 3^6.
inline constexpr std::uint64_t kMetacyclicCap = 729;

struct StructureReport {
  std::uint64_t order = 1;
  int log3_order = 0;
  int nilpotency_class = 0;
  int coclass = 0;  // log3_order - class
  bool metabelian = false;
  std::optional<bool> metacyclic;  // empty above kMetacyclicCap
  bool maximal_class = false;      // coclass 1 and order >= 27
};

/// Throws for non-3-groups.
StructureReport structure_report(const PermGroup& group);

/// G'' = 1.
bool is_metabelian(const PermGroup& group);

/**
 * A 3-group is metacyclic iff some cyclic normal <x> has G/<x> cyclic, i.e.
 * [G : <x>Phi(G)] <= 3. Throws CapExceeded above kMetacyclicCap.
 */
bool is_metacyclic(const PermGroup& group);

/// Preimage of C_{G/gamma_4}(gamma_2/gamma_4).
Subgroup two_step_centralizer(const PermGroup& group);

enum class HuppertVerdict { hypothesis_not_met, conclusion_holds, counterexample };
std::string to_string(HuppertVerdict v);

struct HuppertResult {
  HuppertVerdict verdict = HuppertVerdict::hypothesis_not_met;
  bool hypothesis = false;  // maximal class and order >= 3^5
  // Conclusion parts, evaluated whether or not the hypothesis holds.
  bool metabelian = false;
  bool centralizer_metacyclic = false;
  int centralizer_class = 0;
  AbelianInvariants centralizer_abelianization;
  bool conclusion = false;
};

HuppertResult huppert_check(const PermGroup& group);

struct LittleTower {
  PermGroup quotient;              // G / M_i'
  AbelianInvariants distinguished;  // M_i / M_i'
};

/**
 * One entry per maximal subgroup, in maximal_subgroups() order. When M_i/M_i'
 * is elementary of rank 3 the quotient is checked against `syl3_a9` if given.
 */
std::vector<LittleTower> little_tower_groups(const PermGroup& group,
                                             const PermGroup* syl3_a9 = nullptr);

/// The Sylow 3-subgroup of A_9 on 9 points.
PermGroup sylow3_a9();

struct ShafarevichInput {
  int rho = 0;
  int r1 = 0;
  int r2 = 0;
  int theta = 0;
  std::optional<int> claimed_d2;
};

struct ShafarevichInterval {
  int lo = 0;
  int hi = 0;
  std::optional<bool> claimed_ok;
};

/// [rho, rho + (r1 + r2 - 1) + theta].
ShafarevichInterval shafarevich_interval(const ShafarevichInput& input);

/// Sum of logarithmic exponents minus one.
int coclass_from_ati(const AbelianInvariants& component);

}  // namespace capitula
