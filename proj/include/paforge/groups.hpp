#ifndef PAFORGE_GROUPS_HPP
#define PAFORGE_GROUPS_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "paforge/perm_array.hpp"

namespace paforge {

/// Permutation group of degree n given by a nonempty generator list.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string name_;
};

/// Base and strong generating set from deterministic Schreier-Sims. A new
/// base point is always the smallest point moved by the element that needs
/// it.
class StabilizerChain {
 public:
  explicit StabilizerChain(const PermGroup& group);

  std::size_t degree() const { return degree_; }
  std::size_t levels() const { return levels_.size(); }
  std::uint32_t base_point(std::size_t level) const { return levels_[level].base_point; }
  std::vector<std::uint32_t> base() const;

  /// Points in the basic orbit of `level`, in discovery order.
  const std::vector<std::uint32_t>& orbit(std::size_t level) const { return levels_[level].orbit; }
  /// Element of the level's stabilizer taking the base point to orbit(level)[i].
  const Permutation& transversal(std::size_t level, std::size_t i) const {
    return levels_[level].transversal[i];
  }
  const std::vector<Permutation>& strong_generators(std::size_t level) const {
    return levels_[level].generators;
  }

  /// Exact order; throws CapExceeded if it does not fit in 64 bits.
  std::uint64_t order() const;

  bool contains(const Permutation& g) const;

  /// Uniformly random element.
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    std::uint32_t base_point = 0;
    std::vector<Permutation> generators;
    std::vector<std::uint32_t> orbit;
    std::vector<Permutation> transversal;
    std::vector<std::int32_t> orbit_index;  // point -> index in orbit, or -1
  };

  void rebuild_orbit(Level& level) const;
  /// Sifts g through levels [from, end). Returns the residue and the level
  /// where sifting stopped (levels() if it went all the way).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void append_base_point(const Permutation& moved_by);

  std::size_t degree_;
  std::vector<Level> levels_;
};

inline constexpr std::uint64_t kDefaultClosureCap = 1ull << 24;

/// Every element by breadth-first closure, sorted. Throws CapExceeded when
/// the group order exceeds `cap`.
std::vector<Permutation> group_closure(const PermGroup& group,
                                       std::uint64_t cap = kDefaultClosureCap);

std::uint64_t group_order(const PermGroup& group);

enum class DegreeMode { kExact, kSampled };

struct GroupFacts {
  std::uint64_t order = 0;
  /// EXACT: minimum number of moved points over nontrivial elements (0 for
  /// the trivial group). SAMPLED: the smallest value observed, an upper
  /// bound on the true minimal degree.
  std::size_t minimal_degree = 0;
  /// EXACT: degree minus minimal degree. SAMPLED: most fixed points seen on
  /// a nontrivial sample.
  std::size_t fixity = 0;
  bool exact = false;
  std::uint64_t elements_examined = 0;
};

struct DegreeOptions {
  DegreeMode mode = DegreeMode::kExact;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultClosureCap;
  int threads = 0;
};

/// EXACT walks every element through the stabilizer chain without storing
/// them (parallel over the first basic orbit) and throws CapExceeded above
/// `cap`. SAMPLED evaluates `trials` random words in the generators.
GroupFacts minimal_degree(const PermGroup& group, const DegreeOptions& options = {});

/// The whole group as an array whose claimed distance is the minimal degree.
/// Sampled facts are rejected unless `accept_sampled` is set.
PermArray group_to_pa(const PermGroup& group, const GroupFacts& facts,
                      std::uint64_t cap = kDefaultClosureCap, bool accept_sampled = false);

struct GroupParams {
  std::uint32_t q = 0;
  unsigned d = 0;
  unsigned m = 0;
  std::string data_dir;  // empty: the bundled data directory
};

/// Names: agl1 (q), pgl2 (q), agl (d, q), sym (m), sym_pairs (m),
/// mathieu22, mathieu23, mathieu24.
PermGroup make_named(const std::string& name, const GroupParams& params = {});

/// Expected order recorded in a generator data file header, if any.
struct GeneratorFile {
  PermGroup group;
  std::uint64_t expected_order = 0;
};

// Generator file: '#' comment lines, then
//   GROUP name=<name> degree=<n> order=<expected order>
// and one generator per line as "i0 i1 ... i(n-1)".
GeneratorFile read_generator_file(const std::string& path);
void write_generator_file(std::ostream& out, const PermGroup& group, std::uint64_t expected_order);

std::string default_data_dir();

}  // namespace paforge

#endif  // PAFORGE_GROUPS_HPP
