#ifndef PAFORGE_SFP_HPP
#define PAFORGE_SFP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "paforge/fracpoly.hpp"

namespace paforge {

enum class Variant { kLengthQ, kLengthQPlus1 };

std::string to_string(Variant v);  // "q" or "q+1"
Variant parse_variant(const std::string& s);

/// Degree budgets of a search. `a` and `b` only matter for length q+1.
struct SfpQuery {
  std::uint32_t q = 0;
  Variant variant = Variant::kLengthQ;
  int s = 0;
  int t = 0;
  int a = 0;
  int b = 0;

  /// Throws UsageError when the budget constraints do not hold.
  void validate() const;

  /// Largest numerator / denominator degree a member can have.
  int max_num_degree() const;
  int max_den_degree() const;

  /// Distance guaranteed for the array built from this set.
  int guaranteed_distance() const;
  /// Length of the array built from this set.
  std::uint32_t length() const { return variant == Variant::kLengthQ ? q : q + 1; }

  std::string describe() const;

  friend bool operator==(const SfpQuery&, const SfpQuery&) = default;
};

struct SfpResult {
  SfpQuery query;
  std::vector<FracPoly> members;  // sorted canonically
  std::size_t count = 0;
  int guaranteed_distance = 0;
  double elapsed_ms = 0.0;
};

/// Membership decision from a value profile. Shared by every predicate and
/// by the search kernels.
bool sfp_admits(const ValueProfile& profile, std::uint32_t q, const SfpQuery& query);

/// Length-q membership: deg f <= s, deg g <= t, q - V <= min(s - s', t - t').
bool sfp_member_q(const FracPoly& phi, int s, int t);

/// Length-(q+1) membership; pole and pole-free denominators use different
/// bounds.
bool sfp_member_q1(const FracPoly& phi, int s, int t, int a, int b);

inline constexpr double kOracleCandidateCap = 1e9;

/// Brute force over every numerator and every monic denominator within the
/// degree budget. Serial; kept as the reference for the fast search.
SfpResult sfp_enumerate_oracle(const Field& field, const SfpQuery& query);

/// Searches normalized representatives only and expands each accepted one
/// by its (alpha, beta) orbit. Parallel over denominators; `threads` <= 0
/// uses the current OpenMP default. Output is independent of thread count.
SfpResult sfp_enumerate_fast(const Field& field, const SfpQuery& query, int threads = 0);

struct BestCount {
  std::uint64_t count = 0;
  SfpQuery argmax;
  double elapsed_ms = 0.0;
};

/// Maximum |SFP| over s + t = k (and, for length q+1, over
/// (a, b) in {(0,0), (1,-1), (-1,1)}). Ties go to the smallest s, then to
/// the (a, b) order above.
BestCount sfp_best_count(const Field& field, int k, Variant variant, int threads = 0);

/// Every admissible query for s + t = k, in tie-break order.
std::vector<SfpQuery> sfp_candidate_queries(std::uint32_t q, int k, Variant variant);

/// Number of permutation polynomials of degree <= d.
std::uint64_t pp_count(const Field& field, int d);

}  // namespace paforge

#endif  // PAFORGE_SFP_HPP
