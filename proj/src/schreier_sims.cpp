#include <limits>

#include "paforge/groups.hpp"

namespace paforge {

StabilizerChain::StabilizerChain(const PermGroup& group) : degree_(group.degree()) {
  std::vector<Permutation> gens;
  for (const Permutation& g : group.generators()) {
    if (!g.is_identity()) gens.push_back(g);
  }
  for (const Permutation& g : gens) {
    bool fixes_base = true;
    for (const Level& level : levels_) {
      if (g[level.base_point] != level.base_point) {
        fixes_base = false;
        break;
      }
    }
    if (fixes_base) append_base_point(g);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const Permutation& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t b = 0; b < l; ++b) {
        if (g[levels_[b].base_point] != levels_[b].base_point) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix) levels_[l].generators.push_back(g);
    }
    rebuild_orbit(levels_[l]);
  }

  // `i` counts levels still to be checked; level i-1 is the current one and
  // every level below it in the chain (index >= i) is already complete.
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t cur = i - 1;
    bool complete = true;
    for (std::size_t oi = 0; complete && oi < levels_[cur].orbit.size(); ++oi) {
      for (std::size_t si = 0; complete && si < levels_[cur].generators.size(); ++si) {
        const Level& level = levels_[cur];
        const Permutation& s = level.generators[si];
        const std::uint32_t image = s[level.orbit[oi]];
        const auto back = static_cast<std::size_t>(level.orbit_index[image]);
        Permutation h = compose(compose(level.transversal[oi], s), level.transversal[back].inverse());
        if (h.is_identity()) continue;
        auto [residue, stop] = strip(std::move(h), i);
        if (stop == levels_.size() && residue.is_identity()) continue;
        complete = false;
        if (stop == levels_.size()) append_base_point(residue);
        for (std::size_t l = i; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = stop + 1;
      }
    }
    if (complete) --i;
  }
}

void StabilizerChain::append_base_point(const Permutation& moved_by) {
  for (std::uint32_t p = 0; p < degree_; ++p) {
    if (moved_by[p] != p) {
      Level level;
      level.base_point = p;
      levels_.push_back(std::move(level));
      return;
    }
  }
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.orbit_index.assign(degree_, -1);
  level.orbit_index[level.base_point] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const std::uint32_t gamma = level.orbit[k];
    for (const Permutation& s : level.generators) {
      const std::uint32_t delta = s[gamma];
      if (level.orbit_index[delta] >= 0) continue;
      level.orbit_index[delta] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(delta);
      level.transversal.push_back(compose(level.transversal[k], s));
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const std::int32_t idx = level.orbit_index[g[level.base_point]];
    if (idx < 0) return {std::move(g), l};
    g = compose(g, level.transversal[static_cast<std::size_t>(idx)].inverse());
  }
  return {std::move(g), levels_.size()};
}

std::vector<std::uint32_t> StabilizerChain::base() const {
  std::vector<std::uint32_t> out;
  for (const Level& level : levels_) out.push_back(level.base_point);
  return out;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t r = 1;
  for (const Level& level : levels_) {
    const std::uint64_t size = level.orbit.size();
    if (r > std::numeric_limits<std::uint64_t>::max() / size) {
      throw CapExceeded("group order does not fit in 64 bits");
    }
    r *= size;
  }
  return r;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.size() != degree_) return false;
  auto [residue, stop] = strip(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels_[l].orbit.size() - 1);
    g = compose(g, levels_[l].transversal[pick(rng)]);
  }
  return g;
}

}  // namespace paforge
