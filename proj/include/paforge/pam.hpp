#ifndef PAFORGE_PAM_HPP
#define PAFORGE_PAM_HPP

#include "paforge/fracpoly.hpp"
#include "paforge/perm_array.hpp"
#include "paforge/sfp.hpp"

namespace paforge {

/// The permutation chosen for one fractional polynomial.
///
/// Every value alpha taken by f/g off the poles is hit from the smallest
/// point of its preimage set; the remaining points are matched to the
/// remaining values in ascending order. On F_q u {inf} (inf encoded as q),
/// inf maps to inf when g has no root in F_q and otherwise the smallest root
/// maps to inf.
struct PamAssignment {
  Permutation images;
  std::size_t forced_count = 0;
  std::size_t filled_count = 0;
};

PamAssignment assign_q_pam(const FracPoly& phi);
PamAssignment assign_q1_pam(const FracPoly& phi);

inline Permutation build_q_pam(const FracPoly& phi) { return assign_q_pam(phi).images; }
inline Permutation build_q1_pam(const FracPoly& phi) { return assign_q1_pam(phi).images; }

/// Array of length q or q+1 from the members of an SFP set, in member order,
/// with the distance the construction guarantees as its claimed distance.
PermArray build_pa(const SfpResult& result, int threads = 0);
PermArray build_pa(const Field& field, const SfpQuery& query, int threads = 0);

}  // namespace paforge

#endif  // PAFORGE_PAM_HPP
