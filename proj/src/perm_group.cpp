#include "capitula/perm_group.hpp"

#include <algorithm>
#include <limits>

#include "capitula/error.hpp"

namespace capitula {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw Error("group degree must lie in 1.." + std::to_string(kMaxDegree));
  }
  for (auto& g : generators) {
    if (g.degree() != degree) throw Error("generator degree does not match group degree");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  build();
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::from_cycles(std::size_t degree, const std::vector<std::string>& cycles) {
  if (cycles.empty()) throw Error("empty generator list");
  std::vector<Permutation> gens;
  gens.reserve(cycles.size());
  for (const auto& c : cycles) gens.push_back(Permutation::parse(degree, c));
  return PermGroup(degree, std::move(gens));
}

void PermGroup::rebuild_orbit(Level& level) {
  level.orbit.assign(1, level.base_point);
  level.position.assign(degree_, -1);
  level.position[level.base_point] = 0;
  level.transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto& s : level.gens) {
      Point y = s(level.orbit[k]);
      if (level.position[y] >= 0) continue;
      level.position[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(level.transversal[k] * s);
    }
  }
  level.inverse_transversal.clear();
  level.inverse_transversal.reserve(level.transversal.size());
  for (const auto& u : level.transversal) level.inverse_transversal.push_back(u.inverse());
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    std::int32_t pos = level.position[g(level.base_point)];
    if (pos < 0) return {std::move(g), l};
    g *= level.inverse_transversal[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), levels_.size()};
}

// Deterministic Schreier-Sims. The base is extended by the first moved point
// of each new strong generator, so results depend only on generator order.
void PermGroup::build() {
  levels_.clear();
  auto add_level_for = [&](const Permutation& g) {
    Level level;
    level.base_point = static_cast<Point>(g.first_moved_point());
    levels_.push_back(std::move(level));
  };

  for (const auto& g : generators_) {
    bool moves_base = std::any_of(levels_.begin(), levels_.end(),
                                  [&](const Level& l) { return g(l.base_point) != l.base_point; });
    if (!moves_base) add_level_for(g);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : generators_) {
      bool fixes_prefix = true;
      for (std::size_t m = 0; m < l; ++m) {
        if (g(levels_[m].base_point) != levels_[m].base_point) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix) levels_[l].gens.push_back(g);
    }
    rebuild_orbit(levels_[l]);
  }

  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t cur = i - 1;
    bool extended = false;
    for (std::size_t k = 0; k < levels_[cur].orbit.size() && !extended; ++k) {
      for (std::size_t s = 0; s < levels_[cur].gens.size(); ++s) {
        const Level& level = levels_[cur];
        const Permutation& gen = level.gens[s];
        Point image = gen(level.orbit[k]);
        Permutation schreier = level.transversal[k] * gen *
                               level.inverse_transversal[static_cast<std::size_t>(level.position[image])];
        if (schreier.is_identity()) continue;
        auto [residue, stop] = strip(std::move(schreier), cur + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) add_level_for(residue);
        for (std::size_t l = cur + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = stop + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const auto& level : levels_) {
    if (order_ > std::numeric_limits<std::uint64_t>::max() / level.orbit.size()) {
      throw Error("group order overflows 64 bits");
    }
    order_ *= level.orbit.size();
  }
}

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != degree_) throw Error("degree mismatch between group and permutation");
  auto [residue, stop] = strip(x, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& l : levels_) out.push_back(l.base_point);
  return out;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

bool PermGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = a + 1; b < generators_.size(); ++b) {
      if (generators_[a] * generators_[b] != generators_[b] * generators_[a]) return false;
    }
  }
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& parent) const {
  if (parent.degree() != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return parent.contains(g); });
}

bool PermGroup::is_normal_in(const PermGroup& parent) const {
  for (const auto& h : parent.generators()) {
    for (const auto& g : generators_) {
      if (!contains(g.conjugate_by(h))) return false;
    }
  }
  return true;
}

bool PermGroup::same_elements(const PermGroup& other) const {
  return order_ == other.order_ && is_subgroup_of(other);
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
    g *= it->transversal[pick(rng)];
  }
  return g;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap) {
    throw CapExceeded("element enumeration of a group of order " + std::to_string(order_) +
                      " exceeds cap " + std::to_string(cap));
  }
  std::vector<Permutation> out{Permutation(degree_)};
  out.reserve(order_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->orbit.size());
    for (const auto& u : it->transversal) {
      for (const auto& g : out) next.push_back(g * u);
    }
    out = std::move(next);
  }
  return out;
}

PermGroup PermGroup::with_generators(const std::vector<Permutation>& extra) const {
  std::vector<Permutation> gens = generators_;
  for (const auto& x : extra) {
    if (!contains(x)) gens.push_back(x);
  }
  if (gens.size() == generators_.size()) return *this;
  return PermGroup(degree_, std::move(gens));
}

}  // namespace capitula
