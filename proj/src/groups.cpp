#include "paforge/groups.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "paforge/parallel.hpp"

#ifndef PAFORGE_DATA_DIR
#define PAFORGE_DATA_DIR "data"
#endif

namespace paforge {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Enumerates g = u_{L-1} ... u_1 u_0 (u_{L-1} applied first) for a fixed
// choice of u_0, keeping running products per level.
class ChainWalker {
 public:
  explicit ChainWalker(const StabilizerChain& chain)
      : chain_(chain), n_(chain.degree()), buffers_(chain.levels() + 1, std::vector<std::uint32_t>(n_)) {
    for (std::size_t x = 0; x < n_; ++x) buffers_.back()[x] = static_cast<std::uint32_t>(x);
  }

  void run(std::size_t first_orbit_index) {
    last_ = &chain_.transversal(0, first_orbit_index);
    descend(chain_.levels() - 1, buffers_.back());
  }

  std::size_t min_moved = std::numeric_limits<std::size_t>::max();
  std::uint64_t visited = 0;

 private:
  void descend(std::size_t level, const std::vector<std::uint32_t>& prefix) {
    if (level == 0) {
      const auto u = last_->images();
      std::size_t moved = 0;
      for (std::size_t x = 0; x < n_; ++x) moved += u[prefix[x]] != x;
      ++visited;
      if (moved != 0 && moved < min_moved) min_moved = moved;
      return;
    }
    auto& out = buffers_[level];
    for (std::size_t i = 0; i < chain_.orbit(level).size(); ++i) {
      const auto u = chain_.transversal(level, i).images();
      for (std::size_t x = 0; x < n_; ++x) out[x] = u[prefix[x]];
      descend(level - 1, out);
    }
  }

  const StabilizerChain& chain_;
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> buffers_;
  const Permutation* last_ = nullptr;
};

GroupFacts exact_minimal_degree(const PermGroup& group, const DegreeOptions& options) {
  const StabilizerChain chain(group);
  GroupFacts facts;
  facts.order = chain.order();
  facts.exact = true;
  if (facts.order > options.cap) {
    throw CapExceeded("group " + group.name() + " of order " + std::to_string(facts.order) +
                      " exceeds the exact-scan cap; use sampled mode");
  }
  if (chain.levels() == 0) {
    facts.elements_examined = 1;
    return facts;
  }
  const auto top = static_cast<std::int64_t>(chain.orbit(0).size());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint64_t visited = 0;
  const int workers = resolve_threads(options.threads);
#pragma omp parallel num_threads(workers) reduction(min : best) reduction(+ : visited)
  {
    ChainWalker walker(chain);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < top; ++i) walker.run(static_cast<std::size_t>(i));
    best = std::min(best, walker.min_moved);
    visited += walker.visited;
  }
  facts.minimal_degree = best;
  facts.fixity = group.degree() - best;
  facts.elements_examined = visited;
  return facts;
}

GroupFacts sampled_minimal_degree(const PermGroup& group, const DegreeOptions& options) {
  const StabilizerChain chain(group);
  GroupFacts facts;
  facts.order = chain.order();
  facts.exact = false;
  std::vector<Permutation> letters;
  for (const Permutation& g : group.generators()) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> length(32, 96);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::size_t most_fixed = 0;
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    Permutation g = letters[pick(rng)];
    const int len = length(rng);
    for (int i = 1; i < len; ++i) g = compose(g, letters[pick(rng)]);
    const std::size_t moved = g.moved_points();
    if (moved == 0) continue;
    best = std::min(best, moved);
    most_fixed = std::max(most_fixed, group.degree() - moved);
  }
  facts.minimal_degree = best == std::numeric_limits<std::size_t>::max() ? 0 : best;
  facts.fixity = most_fixed;
  facts.elements_examined = options.trials;
  return facts;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)) {
  if (degree_ == 0) throw UsageError("group of degree zero");
  if (generators_.empty()) throw UsageError("group needs at least one generator");
  for (const Permutation& g : generators_) {
    if (g.size() != degree_) throw UsageError("generator degree does not match the group degree");
  }
}

std::vector<Permutation> group_closure(const PermGroup& group, std::uint64_t cap) {
  if (group_order(group) > cap) {
    throw CapExceeded("closure of " + group.name() + " exceeds the element cap");
  }
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<const Permutation*> frontier;
  frontier.push_back(&*seen.insert(Permutation::identity(group.degree())).first);
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    for (const Permutation& s : group.generators()) {
      auto [it, inserted] = seen.insert(compose(*frontier[k], s));
      if (inserted) {
        if (seen.size() > cap) throw CapExceeded("closure exceeds the element cap");
        frontier.push_back(&*it);
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t group_order(const PermGroup& group) { return StabilizerChain(group).order(); }

GroupFacts minimal_degree(const PermGroup& group, const DegreeOptions& options) {
  return options.mode == DegreeMode::kExact ? exact_minimal_degree(group, options)
                                            : sampled_minimal_degree(group, options);
}

PermArray group_to_pa(const PermGroup& group, const GroupFacts& facts, std::uint64_t cap,
                      bool accept_sampled) {
  if (!facts.exact && !accept_sampled) {
    throw UsageError("group_to_pa needs an exact minimal degree");
  }
  const auto rows = group_closure(group, cap);
  const std::size_t n = group.degree();
  const int claimed = static_cast<int>(facts.minimal_degree == 0 ? n : facts.minimal_degree);
  return PermArray(n, rows, claimed, "group:" + group.name());
}

std::string default_data_dir() {
  if (const char* env = std::getenv("PA_FORGE_DATA_DIR")) return env;
  return PAFORGE_DATA_DIR;
}

GeneratorFile read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open generator file " + path);
  std::string line;
  std::string name;
  std::size_t degree = 0;
  std::uint64_t order = 0;
  bool have_header = false;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string tag, tok;
      hs >> tag;
      if (tag != "GROUP") throw UsageError(path + ": expected GROUP header");
      while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw UsageError(path + ": malformed header field " + tok);
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (key == "name") {
          name = value;
        } else if (key == "degree") {
          degree = std::stoul(value);
        } else if (key == "order") {
          order = std::stoull(value);
        }
      }
      if (name.empty() || degree == 0) throw UsageError(path + ": header needs name and degree");
      have_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::uint32_t> images;
    long long v;
    while (ls >> v) {
      if (v < 0) throw UsageError(path + ": negative point");
      images.push_back(static_cast<std::uint32_t>(v));
    }
    if (images.size() != degree) throw UsageError(path + ": generator of wrong degree");
    gens.emplace_back(std::move(images));
  }
  if (!have_header) throw UsageError(path + ": missing GROUP header");
  return {PermGroup(degree, std::move(gens), name), order};
}

void write_generator_file(std::ostream& out, const PermGroup& group, std::uint64_t expected_order) {
  out << "GROUP name=" << group.name() << " degree=" << group.degree() << " order=" << expected_order
      << '\n';
  for (const Permutation& g : group.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) out << ' ';
      out << g[i];
    }
    out << '\n';
  }
}

}  // namespace paforge
