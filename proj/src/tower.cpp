#include "capitula/tower.hpp"

#include <numeric>
#include <unordered_set>

#include "capitula/error.hpp"

namespace capitula {

bool is_metabelian(const PermGroup& group) {
  return derived_subgroup(derived_subgroup(group)).is_trivial();
}

bool is_metacyclic(const PermGroup& group) {
  if (!is_three_group(group)) throw Error("is_metacyclic: group is not a 3-group");
  if (group.order() > kMetacyclicCap) {
    throw CapExceeded("metacyclic search on a group of order " + std::to_string(group.order()) +
                      " exceeds cap " + std::to_string(kMetacyclicCap));
  }
  if (group.is_trivial()) return true;
  const FrattiniData frattini = frattini_data(group);
  if (frattini.rank() > 2) return false;
  const std::uint64_t needed = group.order() / 3;

  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& x : group.elements(kMetacyclicCap)) {
    if (seen.contains(x)) continue;
    // powers of x; generators x^k with 3 | k excluded from the seen set
    std::vector<Permutation> powers{x.pow(0)};
    for (Permutation y = x; !y.is_identity(); y *= x) powers.push_back(y);
    for (std::size_t k = 1; k < powers.size(); ++k) {
      if (k % 3 != 0) seen.insert(powers[k]);
    }
    if (static_cast<std::uint64_t>(powers.size()) * frattini.frattini.order() < needed) continue;
    std::unordered_set<Permutation, PermutationHash> cyclic(powers.begin(), powers.end());
    bool normal = true;
    for (const auto& h : group.generators()) {
      if (!cyclic.contains(x.conjugate_by(h))) {
        normal = false;
        break;
      }
    }
    if (!normal) continue;
    PermGroup product = frattini.frattini.with_generators({x});
    if (product.order() >= needed) return true;
  }
  return false;
}

StructureReport structure_report(const PermGroup& group) {
  if (!is_three_group(group)) throw Error("structure_report: group is not a 3-group");
  StructureReport r;
  r.order = group.order();
  r.log3_order = log3_exact(r.order);
  r.nilpotency_class = *nilpotency_class(group);
  r.coclass = r.log3_order - r.nilpotency_class;
  r.metabelian = is_metabelian(group);
  if (r.order <= kMetacyclicCap) r.metacyclic = is_metacyclic(group);
  r.maximal_class = r.log3_order >= 2 && r.nilpotency_class == r.log3_order - 1;
  return r;
}

Subgroup two_step_centralizer(const PermGroup& group) {
  if (!is_three_group(group)) throw Error("two_step_centralizer: group is not a 3-group");
  auto series = lower_central_series(group);
  const PermGroup trivial = PermGroup::trivial(group.degree());
  const PermGroup& gamma2 = series.size() > 1 ? series[1] : trivial;
  const PermGroup& gamma4 = series.size() > 3 ? series[3] : trivial;
  return centralizer_in_quotient(group, gamma4, gamma2);
}

std::string to_string(HuppertVerdict v) {
  switch (v) {
    case HuppertVerdict::hypothesis_not_met: return "hypothesis_not_met";
    case HuppertVerdict::conclusion_holds: return "conclusion_holds";
    case HuppertVerdict::counterexample: return "counterexample";
  }
  return "hypothesis_not_met";
}

HuppertResult huppert_check(const PermGroup& group) {
  StructureReport s = structure_report(group);
  HuppertResult r;
  r.hypothesis = s.maximal_class && s.log3_order >= 5;
  r.metabelian = s.metabelian;
  Subgroup gamma1 = two_step_centralizer(group);
  r.centralizer_metacyclic = is_metacyclic(gamma1);
  r.centralizer_class = *nilpotency_class(gamma1);
  r.centralizer_abelianization = abelianization(gamma1);
  r.conclusion = r.metabelian && r.centralizer_metacyclic && r.centralizer_class <= 2;
  if (!r.hypothesis) {
    r.verdict = HuppertVerdict::hypothesis_not_met;
  } else {
    r.verdict = r.conclusion ? HuppertVerdict::conclusion_holds : HuppertVerdict::counterexample;
  }
  return r;
}

PermGroup sylow3_a9() {
  return PermGroup::from_cycles(9, {"(1,2,3)", "(4,5,6)", "(7,8,9)", "(1,4,7)(2,5,8)(3,6,9)"});
}

std::vector<LittleTower> little_tower_groups(const PermGroup& group, const PermGroup* syl3_a9) {
  if (abelianization(group) != AbelianInvariants::from_log_string("11")) {
    throw Error("little_tower_groups: G/G' is not of type (3,3)");
  }
  const auto elementary = AbelianInvariants::from_log_string("111");
  std::vector<LittleTower> out;
  for (const auto& m : maximal_subgroups(group)) {
    PermGroup m_prime = derived_subgroup(m);
    LittleTower t{quotient(group, m_prime), abelianization(m)};
    if (syl3_a9 != nullptr && t.distinguished == elementary &&
        is_isomorphic_small(t.quotient, *syl3_a9) != IsoVerdict::isomorphic) {
      throw Error("little_tower_groups: G/M' with M/M' = (111) is not Syl3(A9)");
    }
    out.push_back(std::move(t));
  }
  return out;
}

ShafarevichInterval shafarevich_interval(const ShafarevichInput& input) {
  if (input.rho < 0 || input.r1 < 0 || input.r2 < 0) throw Error("shafarevich: negative input");
  if (input.theta != 0 && input.theta != 1) throw Error("shafarevich: theta must be 0 or 1");
  if (input.r1 + input.r2 == 0) throw Error("shafarevich: r1 + r2 = 0 leaves the unit rank undefined");
  ShafarevichInterval out;
  out.lo = input.rho;
  out.hi = input.rho + (input.r1 + input.r2 - 1) + input.theta;
  if (input.claimed_d2) out.claimed_ok = out.lo <= *input.claimed_d2 && *input.claimed_d2 <= out.hi;
  return out;
}

int coclass_from_ati(const AbelianInvariants& component) {
  if (!component.logarithmic || component.logarithmic->empty()) {
    throw Error("coclass_from_ati: empty or non-logarithmic component");
  }
  const auto& exps = *component.logarithmic;
  return std::accumulate(exps.begin(), exps.end(), 0) - 1;
}

}  // namespace capitula
