#include "capitula/group_ops.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "capitula/error.hpp"

namespace capitula {

// Series -----------------------------------------------------------------------

PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& generators) {
  PermGroup closure(group.degree(), generators);
  std::deque<Permutation> pending(closure.generators().begin(), closure.generators().end());
  while (!pending.empty()) {
    Permutation h = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : group.generators()) {
      Permutation c = h.conjugate_by(g);
      if (!closure.contains(c)) {
        closure = closure.with_generators({c});
        pending.push_back(std::move(c));
      }
    }
  }
  return closure;
}

PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b, const PermGroup& group) {
  std::vector<Permutation> comms;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(group, comms);
}

Subgroup derived_subgroup(const PermGroup& group) {
  return commutator_subgroup(group, group, group);
}

std::vector<Subgroup> lower_central_series(const PermGroup& group) {
  std::vector<Subgroup> series{group};
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back(), group, group);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotency_class(const PermGroup& group) {
  auto series = lower_central_series(group);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

std::vector<Subgroup> derived_series(const PermGroup& group) {
  std::vector<Subgroup> series{group};
  while (!series.back().is_trivial()) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_p_group(std::uint64_t order, std::uint64_t p) {
  if (order == 0) return false;
  while (order % p == 0) order /= p;
  return order == 1;
}

bool is_three_group(const PermGroup& group) { return is_p_group(group.order(), 3); }

int log3_exact(std::uint64_t n) {
  int e = 0;
  while (n > 1 && n % 3 == 0) {
    n /= 3;
    ++e;
  }
  if (n != 1) throw Error("not a power of 3");
  return e;
}

// Quotients ------------------------------------------------------------------

QuotientMap::QuotientMap(const PermGroup& group, const PermGroup& normal)
    : image_(PermGroup::trivial(1)) {
  if (!normal.is_subgroup_of(group)) throw Error("quotient: N is not a subgroup of G");
  if (!normal.is_normal_in(group)) throw Error("quotient: N is not normal in G");
  auto elements = group.elements();
  auto kernel = normal.elements();
  coset_.reserve(elements.size());
  for (const auto& g : elements) {
    if (coset_.count(g) != 0) continue;
    auto id = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(g);
    for (const auto& n : kernel) coset_.emplace(n * g, id);
  }
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) gens.push_back(project(g));
  image_ = PermGroup(reps_.size(), std::move(gens));
}

std::uint32_t QuotientMap::coset_of(const Permutation& g) const {
  auto it = coset_.find(g);
  if (it == coset_.end()) throw Error("quotient: element is not in the source group");
  return it->second;
}

Permutation QuotientMap::project(const Permutation& g) const {
  std::vector<Point> images(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    images[c] = static_cast<Point>(coset_of(reps_[c] * g));
  }
  return Permutation::from_images(std::move(images));
}

Permutation QuotientMap::lift(const Permutation& q) const {
  if (q.degree() != reps_.size()) throw Error("quotient: lift of a foreign element");
  return reps_[q(0)];
}

PermGroup quotient(const PermGroup& group, const PermGroup& normal) {
  return QuotientMap(group, normal).group();
}

// Abelian invariants ---------------------------------------------------------------

namespace {

std::vector<std::pair<std::uint64_t, int>> factorize_small(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

std::uint64_t AbelianInvariants::order() const {
  return std::accumulate(primary.begin(), primary.end(), std::uint64_t{1},
                         std::multiplies<>());
}

std::string AbelianInvariants::log_string() const {
  if (!logarithmic) throw Error("logarithmic form is defined only for 3-groups");
  if (logarithmic->empty()) return "0";
  std::string out;
  for (int e : *logarithmic) out += std::to_string(e);
  return out;
}

AbelianInvariants AbelianInvariants::from_log_string(std::string_view text) {
  if (text.empty()) throw Error("empty abelian type invariant");
  AbelianInvariants out;
  std::vector<int> exps;
  if (text != "0") {
    for (char c : text) {
      if (c < '1' || c > '9') throw Error("bad logarithmic invariant '" + std::string(text) + "'");
      exps.push_back(c - '0');
    }
  }
  std::sort(exps.rbegin(), exps.rend());
  for (int e : exps) {
    std::uint64_t q = 1;
    for (int k = 0; k < e; ++k) q *= 3;
    out.primary.push_back(q);
  }
  out.logarithmic = exps;
  return out;
}

AbelianInvariants abelian_invariants(const PermGroup& group) {
  if (!group.is_abelian()) throw Error("abelian_invariants: group is not abelian");
  if (group.order() > kAbelianInvariantsCap) {
    throw CapExceeded("abelian_invariants: order " + std::to_string(group.order()) +
                      " exceeds cap " + std::to_string(kAbelianInvariantsCap));
  }
  std::map<std::uint64_t, std::uint64_t> order_counts;
  for (const auto& g : group.elements(kAbelianInvariantsCap)) ++order_counts[g.order()];

  AbelianInvariants out;
  for (auto [p, exponent] : factorize_small(group.order())) {
    // omega[k] = #{x : x^(p^k) = 1}; factors of order >= p^k number log_p(omega[k]/omega[k-1])
    std::vector<std::uint64_t> omega{1};
    std::uint64_t pk = 1;
    for (int k = 1; k <= exponent; ++k) {
      pk *= p;
      std::uint64_t count = 0;
      for (auto [ord, c] : order_counts) {
        if (pk % ord == 0) count += c;
      }
      omega.push_back(count);
    }
    std::vector<int> at_least(static_cast<std::size_t>(exponent) + 1, 0);
    for (int k = 1; k <= exponent; ++k) {
      std::uint64_t ratio = omega[k] / omega[k - 1];
      int r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      at_least[k] = r;
    }
    for (int k = exponent; k >= 1; --k) {
      int exactly = at_least[k] - (k < exponent ? at_least[k + 1] : 0);
      std::uint64_t q = 1;
      for (int j = 0; j < k; ++j) q *= p;
      for (int j = 0; j < exactly; ++j) out.primary.push_back(q);
    }
  }
  std::sort(out.primary.rbegin(), out.primary.rend());
  if (is_p_group(group.order(), 3)) {
    std::vector<int> logs;
    for (auto q : out.primary) logs.push_back(log3_exact(q));
    out.logarithmic = logs;
  }
  return out;
}

AbelianInvariants abelianization(const PermGroup& group) {
  return abelian_invariants(quotient(group, derived_subgroup(group)));
}

// Maximal subgroups ------------------------------------------------------------------

FrattiniData frattini_data(const PermGroup& group) {
  if (!is_three_group(group)) throw Error("maximal_subgroups: group is not a 3-group");
  std::vector<Permutation> gens = derived_subgroup(group).generators();
  for (const auto& g : group.generators()) gens.push_back(g.pow(3));
  PermGroup phi(group.degree(), gens);

  std::vector<Permutation> basis;
  PermGroup span = phi;
  for (const auto& g : group.generators()) {
    if (span.contains(g)) continue;
    basis.push_back(g);
    span = span.with_generators({g});
  }
  std::uint64_t index = group.order() / phi.order();
  std::uint64_t expected = 1;
  for (std::size_t k = 0; k < basis.size(); ++k) expected *= 3;
  if (index != expected) throw Error("frattini quotient is not elementary abelian");
  return FrattiniData{std::move(phi), std::move(basis)};
}

std::vector<Subgroup> maximal_subgroups(const PermGroup& group) {
  FrattiniData data = frattini_data(group);
  const int r = data.rank();
  std::vector<Subgroup> out;
  if (r == 0) return out;

  // normalized normal vectors in lexicographic order
  std::uint64_t total = 1;
  for (int k = 0; k < r; ++k) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> v(static_cast<std::size_t>(r));
    std::uint64_t c = code;
    for (int k = r - 1; k >= 0; --k) {
      v[static_cast<std::size_t>(k)] = static_cast<int>(c % 3);
      c /= 3;
    }
    auto pivot = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (pivot == v.end() || *pivot != 1) continue;
    auto p = static_cast<std::size_t>(pivot - v.begin());

    std::vector<Permutation> gens = data.frattini.generators();
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j == p) continue;
      // e_j - v_j e_p lies in the hyperplane
      gens.push_back(data.basis[j] * data.basis[p].pow((3 - v[j]) % 3));
    }
    out.emplace_back(group.degree(), std::move(gens));
  }
  return out;
}

// Isomorphism ---------------------------------------------------------------------

GroupFingerprint fingerprint(const PermGroup& group) {
  GroupFingerprint fp;
  fp.order = group.order();
  for (const auto& s : lower_central_series(group)) fp.lower_central_orders.push_back(s.order());
  for (const auto& s : derived_series(group)) fp.derived_orders.push_back(s.order());
  fp.abelianization = abelianization(group).primary;
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& g : group.elements()) ++counts[g.order()];
  fp.element_orders.assign(counts.begin(), counts.end());
  if (is_three_group(group) && group.order() > 1) {
    for (const auto& m : maximal_subgroups(group)) {
      fp.maximal_ati.push_back(abelianization(m).log_string());
    }
    std::sort(fp.maximal_ati.begin(), fp.maximal_ati.end());
  }
  return fp;
}

namespace {

constexpr std::uint64_t kIsomorphismNodeBudget = 20'000'000;

std::vector<Permutation> small_generating_set(const PermGroup& group) {
  if (is_three_group(group)) return frattini_data(group).basis;
  std::vector<Permutation> kept;
  PermGroup span = PermGroup::trivial(group.degree());
  for (const auto& g : group.generators()) {
    if (span.contains(g)) continue;
    kept.push_back(g);
    span = span.with_generators({g});
  }
  return kept;
}

class IsoSearch {
 public:
  IsoSearch(const PermGroup& g, const PermGroup& h) : gens_(small_generating_set(g)) {
    auto ge = g.elements();
    he_ = h.elements();
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> gidx, hidx;
    for (std::uint32_t i = 0; i < ge.size(); ++i) gidx.emplace(ge[i], i);
    for (std::uint32_t i = 0; i < he_.size(); ++i) hidx.emplace(he_[i], i);
    n_ = ge.size();

    gmul_.resize(n_ * gens_.size());
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t s = 0; s < gens_.size(); ++s) gmul_[x * gens_.size() + s] = gidx.at(ge[x] * gens_[s]);
    }
    hmul_.resize(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) hmul_[x * n_ + y] = hidx.at(he_[x] * he_[y]);
    }
    horder_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x) horder_[x] = he_[x].order();
    for (const auto& s : gens_) gen_order_.push_back(s.order());
    pair_order_.assign(gens_.size() * gens_.size(), 0);
    pair_commutes_.assign(gens_.size() * gens_.size(), false);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        pair_order_[i * gens_.size() + j] = (gens_[i] * gens_[j]).order();
        pair_commutes_[i * gens_.size() + j] = gens_[i] * gens_[j] == gens_[j] * gens_[i];
      }
    }
    identity_h_ = hidx.at(h.identity());
  }

  bool run() {
    images_.assign(gens_.size(), 0);
    return extend(0);
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == gens_.size()) return check_full();
    const std::size_t d = gens_.size();
    for (std::uint32_t cand = 0; cand < n_; ++cand) {
      if (++nodes_ > kIsomorphismNodeBudget) {
        throw CapExceeded("isomorphism search exceeded its node budget");
      }
      if (horder_[cand] != gen_order_[depth]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        std::uint32_t prod = hmul_[cand * n_ + images_[j]];
        std::uint32_t rev = hmul_[images_[j] * n_ + cand];
        ok = horder_[prod] == pair_order_[depth * d + j] &&
             (prod == rev) == pair_commutes_[depth * d + j];
      }
      if (!ok) continue;
      images_[depth] = cand;
      if (extend(depth + 1)) return true;
    }
    return false;
  }

  // Walks the Cayley graph of G on the chosen generators; the assignment
  // extends to an isomorphism iff every edge is consistent and the map is onto.
  bool check_full() {
    constexpr std::uint32_t kUnset = 0xffffffffU;
    std::vector<std::uint32_t> phi(n_, kUnset);
    std::vector<bool> hit(n_, false);
    std::vector<std::uint32_t> queue{0};
    phi[0] = identity_h_;
    hit[identity_h_] = true;
    std::size_t covered = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t x = queue[head];
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        std::uint32_t y = gmul_[x * gens_.size() + s];
        std::uint32_t image = hmul_[phi[x] * n_ + images_[s]];
        if (phi[y] == kUnset) {
          if (hit[image]) return false;
          phi[y] = image;
          hit[image] = true;
          ++covered;
          queue.push_back(y);
        } else if (phi[y] != image) {
          return false;
        }
      }
    }
    return covered == n_;
  }

  std::vector<Permutation> gens_;
  std::vector<Permutation> he_;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> gmul_, hmul_;
  std::vector<std::uint64_t> horder_, gen_order_, pair_order_;
  std::vector<bool> pair_commutes_;
  std::vector<std::uint32_t> images_;
  std::uint32_t identity_h_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

IsoVerdict is_isomorphic_small(const PermGroup& g, const PermGroup& h, bool allow_fingerprint_only) {
  if (g.order() != h.order()) return IsoVerdict::not_isomorphic;
  if (g.order() > kIsomorphismCap && !allow_fingerprint_only) {
    throw CapExceeded("is_isomorphic_small: order " + std::to_string(g.order()) +
                      " above explicit cap " + std::to_string(kIsomorphismCap));
  }
  if (fingerprint(g) != fingerprint(h)) return IsoVerdict::not_isomorphic;
  if (g.is_abelian()) return IsoVerdict::isomorphic;  // abelian invariants already agree
  if (g.order() > kIsomorphismCap) return IsoVerdict::fingerprint_equal;
  return IsoSearch(g, h).run() ? IsoVerdict::isomorphic : IsoVerdict::not_isomorphic;
}

// Centralizers ---------------------------------------------------------------------

Subgroup centralizer_in_quotient(const PermGroup& group, const PermGroup& normal,
                                 const PermGroup& sub) {
  if (!sub.is_subgroup_of(group)) throw Error("centralizer_in_quotient: S is not a subgroup of G");
  if (!normal.is_subgroup_of(sub)) throw Error("centralizer_in_quotient: S does not contain N");
  if (!normal.is_normal_in(group)) throw Error("centralizer_in_quotient: N is not normal in G");
  std::uint64_t index = group.order() / normal.order();
  if (index > kCentralizerQuotientCap) {
    throw CapExceeded("centralizer_in_quotient: quotient order " + std::to_string(index) +
                      " exceeds cap " + std::to_string(kCentralizerQuotientCap));
  }
  QuotientMap map(group, normal);
  std::vector<Permutation> targets;
  for (const auto& s : sub.generators()) targets.push_back(map.project(s));

  PermGroup result = normal;
  for (const auto& q : map.group().elements()) {
    bool central = std::all_of(targets.begin(), targets.end(),
                               [&](const Permutation& t) { return q * t == t * q; });
    if (!central) continue;
    Permutation lifted = map.lift(q);
    if (!result.contains(lifted)) result = result.with_generators({lifted});
  }
  return result;
}

}  // namespace capitula
