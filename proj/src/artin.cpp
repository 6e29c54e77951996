#include "capitula/artin.hpp"

#include <algorithm>

#include "capitula/error.hpp"

namespace capitula {

CapitulationType CapitulationType::parse(std::string_view text) {
  if (text.size() != 4) throw Error("capitulation type must have 4 digits: '" + std::string(text) + "'");
  CapitulationType k;
  for (std::size_t i = 0; i < 4; ++i) {
    if (text[i] < '0' || text[i] > '4') {
      throw Error("capitulation type digits must lie in 0..4: '" + std::string(text) + "'");
    }
    k.entries[i] = text[i] - '0';
  }
  return k;
}

std::string CapitulationType::to_string() const {
  std::string out;
  for (int e : entries) out += static_cast<char>('0' + e);
  return out;
}

std::string to_string(TktName name) {
  switch (name) {
    case TktName::a1: return "a.1";
    case TktName::a2: return "a.2";
    case TktName::b10: return "b.10";
    case TktName::d19: return "d.19";
    case TktName::d23: return "d.23";
    case TktName::d25: return "d.25";
    case TktName::unnamed: return "unnamed";
  }
  return "unnamed";
}

TktName parse_tkt_name(std::string_view text) {
  for (TktName n : {TktName::a1, TktName::a2, TktName::b10, TktName::d19, TktName::d23, TktName::d25}) {
    if (to_string(n) == text) return n;
  }
  throw Error("unknown capitulation type name '" + std::string(text) + "'");
}

CapitulationType named_representative(TktName name) {
  switch (name) {
    case TktName::a1: return CapitulationType::parse("0000");
    case TktName::a2: return CapitulationType::parse("1000");
    case TktName::b10: return CapitulationType::parse("0320");
    case TktName::d19: return CapitulationType::parse("2320");
    case TktName::d23: return CapitulationType::parse("1320");
    case TktName::d25: return CapitulationType::parse("4320");
    case TktName::unnamed: break;
  }
  throw Error("unnamed type has no representative");
}

CapitulationType relabel(const CapitulationType& kappa, const Relabeling& pi) {
  Relabeling inverse{};
  for (int i = 0; i < 4; ++i) inverse[static_cast<std::size_t>(pi[i] - 1)] = i + 1;
  CapitulationType out;
  for (int i = 0; i < 4; ++i) {
    int source = kappa.entries[static_cast<std::size_t>(inverse[static_cast<std::size_t>(i)] - 1)];
    out.entries[static_cast<std::size_t>(i)] = source == 0 ? 0 : pi[static_cast<std::size_t>(source - 1)];
  }
  return out;
}

const std::vector<Relabeling>& all_relabelings() {
  static const std::vector<Relabeling> perms = [] {
    std::vector<Relabeling> out;
    Relabeling p{1, 2, 3, 4};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

namespace {

CapitulationType orbit_minimum(const CapitulationType& kappa) {
  CapitulationType best = kappa;
  for (const auto& pi : all_relabelings()) best = std::min(best, relabel(kappa, pi));
  return best;
}

}  // namespace

CanonicalTkt canonicalize_tkt(const CapitulationType& kappa) {
  CanonicalTkt out{orbit_minimum(kappa), TktName::unnamed};
  for (TktName n : {TktName::a1, TktName::a2, TktName::b10, TktName::d19, TktName::d23, TktName::d25}) {
    if (orbit_minimum(named_representative(n)) == out.canonical) {
      out.name = n;
      break;
    }
  }
  return out;
}

bool tkt_equivalent(const CapitulationType& a, const CapitulationType& b) {
  return orbit_minimum(a) == orbit_minimum(b);
}

bool tkt_leq(const CapitulationType& kappa, const CapitulationType& lambda) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (kappa.entries[i] != lambda.entries[i] && lambda.entries[i] != 0) return false;
  }
  return true;
}

TktFeatures tkt_features(const CapitulationType& kappa) {
  TktFeatures f;
  for (int i = 1; i <= 4; ++i) {
    int ki = kappa.entries[static_cast<std::size_t>(i - 1)];
    if (ki == i) f.fixed_points.push_back(i);
    if (ki > i && kappa.entries[static_cast<std::size_t>(ki - 1)] == i) f.transpositions.emplace_back(i, ki);
  }
  return f;
}

std::string format_ttt(const TransferTargetType& ttt) {
  std::string out;
  for (std::size_t i = 0; i < ttt.size(); ++i) {
    if (i) out += ';';
    out += ttt[i].log_string();
  }
  return out;
}

TransferTargetType parse_ttt(std::string_view text) {
  TransferTargetType out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t end = text.find(';', start);
    if ((i < 3) == (end == std::string_view::npos)) {
      throw Error("transfer target type needs 4 ';'-separated components: '" + std::string(text) + "'");
    }
    out[i] = AbelianInvariants::from_log_string(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

bool artin_patterns_equivalent(const ArtinPattern& a, const ArtinPattern& b) {
  for (const auto& pi : all_relabelings()) {
    if (relabel(a.tkt, pi) != b.tkt) continue;
    bool same = true;
    for (std::size_t i = 0; i < 4 && same; ++i) {
      // position i of a moves to pi(i)
      same = a.ttt[i] == b.ttt[static_cast<std::size_t>(pi[i] - 1)];
    }
    if (same) return true;
  }
  return false;
}

std::string to_string(StablePart s) {
  switch (s) {
    case StablePart::holds: return "holds";
    case StablePart::fails: return "fails";
    case StablePart::inapplicable: return "inapplicable";
  }
  return "inapplicable";
}

StablePart stable_part_check(const ArtinPattern& pattern) {
  TktName name = canonicalize_tkt(pattern.tkt).name;
  if (name != TktName::b10 && name != TktName::d19 && name != TktName::d23 && name != TktName::d25) {
    return StablePart::inapplicable;
  }
  auto features = tkt_features(pattern.tkt);
  if (features.transpositions.size() != 1) return StablePart::inapplicable;
  auto [i, j] = features.transpositions.front();
  const auto elementary = AbelianInvariants::from_log_string("111");
  bool ok = pattern.ttt[static_cast<std::size_t>(i - 1)] == elementary &&
            pattern.ttt[static_cast<std::size_t>(j - 1)] == elementary;
  return ok ? StablePart::holds : StablePart::fails;
}

// Group side -------------------------------------------------------------------------

namespace {

std::size_t coset_index(const PermGroup& sub, const std::vector<Permutation>& transversal,
                        const Permutation& x) {
  for (std::size_t j = 0; j < transversal.size(); ++j) {
    if (sub.contains(x * transversal[j].inverse())) return j;
  }
  throw Error("transversal does not cover every right coset");
}

}  // namespace

std::vector<Permutation> right_transversal(const PermGroup& group, const PermGroup& sub) {
  if (!sub.is_subgroup_of(group)) throw Error("right_transversal: M is not a subgroup of G");
  const std::uint64_t index = group.order() / sub.order();
  std::vector<Permutation> reps{group.identity()};
  for (std::size_t k = 0; k < reps.size() && reps.size() < index; ++k) {
    for (const auto& s : group.generators()) {
      Permutation x = reps[k] * s;
      bool fresh = std::none_of(reps.begin(), reps.end(), [&](const Permutation& t) {
        return sub.contains(x * t.inverse());
      });
      if (fresh) reps.push_back(std::move(x));
    }
  }
  return reps;
}

ArtinTransfer::ArtinTransfer(const PermGroup& group, const PermGroup& sub)
    : ArtinTransfer(group, sub, right_transversal(group, sub)) {}

ArtinTransfer::ArtinTransfer(const PermGroup& group, const PermGroup& sub,
                             std::vector<Permutation> transversal)
    : group_(&group),
      sub_(&sub),
      transversal_(std::move(transversal)),
      target_(sub, derived_subgroup(sub)) {
  if (!sub.is_subgroup_of(group)) throw Error("artin_transfer: M is not a subgroup of G");
  if (transversal_.size() != group.order() / sub.order()) {
    throw Error("artin_transfer: transversal has the wrong length");
  }
  for (std::size_t i = 0; i < transversal_.size(); ++i) {
    if (!group.contains(transversal_[i]) || coset_index(sub, transversal_, transversal_[i]) != i) {
      throw Error("artin_transfer: transversal elements are not in distinct cosets");
    }
  }
}

Permutation ArtinTransfer::value(const Permutation& g) const {
  Permutation product = sub_->identity();
  for (const auto& t : transversal_) {
    Permutation x = t * g;
    std::size_t j = coset_index(*sub_, transversal_, x);
    product *= x * transversal_[j].inverse();
  }
  return target_.project(product);
}

std::vector<Permutation> ArtinTransfer::kernel(const QuotientMap& source) const {
  std::vector<Permutation> out;
  for (const auto& q : source.group().elements()) {
    if (value(source.lift(q)).is_identity()) out.push_back(q);
  }
  return out;
}

std::uint64_t ArtinTransfer::image_order(const QuotientMap& source) const {
  std::vector<Permutation> gens;
  for (const auto& q : source.group().generators()) gens.push_back(value(source.lift(q)));
  return PermGroup(target_.group().degree(), gens).order();
}

ArtinPattern artin_pattern(const PermGroup& group) {
  if (!is_three_group(group)) throw Error("artin_pattern: group is not a 3-group");
  const PermGroup derived = derived_subgroup(group);
  QuotientMap source(group, derived);
  if (abelian_invariants(source.group()) != AbelianInvariants::from_log_string("11")) {
    throw Error("artin_pattern: G/G' is not of type (3,3)");
  }
  auto maxes = maximal_subgroups(group);
  if (maxes.size() != 4) throw Error("artin_pattern: expected 4 maximal subgroups");

  const auto quotient_elements = source.group().elements();
  std::vector<std::vector<bool>> norm_sets;  // membership of each G/G' element in M_j/G'
  for (const auto& m : maxes) {
    std::vector<bool> member;
    for (const auto& q : quotient_elements) member.push_back(m.contains(source.lift(q)));
    norm_sets.push_back(std::move(member));
  }

  ArtinPattern pattern;
  for (std::size_t i = 0; i < 4; ++i) {
    ArtinTransfer transfer(group, maxes[i]);
    std::vector<bool> in_kernel;
    std::size_t kernel_size = 0;
    for (const auto& q : quotient_elements) {
      bool k = transfer.value(source.lift(q)).is_identity();
      in_kernel.push_back(k);
      kernel_size += k ? 1 : 0;
    }
    if (kernel_size == 1) throw Error("artin_pattern: injective transfer (trivial kernel)");
    int entry = -1;
    if (kernel_size == quotient_elements.size()) {
      entry = 0;
    } else {
      for (std::size_t j = 0; j < 4; ++j) {
        if (norm_sets[j] == in_kernel) {
          entry = static_cast<int>(j) + 1;
          break;
        }
      }
    }
    if (entry < 0) throw Error("artin_pattern: kernel matches no norm subgroup");
    pattern.tkt.entries[i] = entry;
    pattern.ttt[i] = abelian_invariants(transfer.target().group());
  }
  return pattern;
}

}  // namespace capitula
