#include "paforge/pam.hpp"

#include <omp.h>

#include <stdexcept>

#include "paforge/parallel.hpp"

namespace paforge {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

PamAssignment assign(const FracPoly& phi, bool with_infinity) {
  const Field& field = phi.field();
  const std::uint32_t q = field.order();
  const std::uint32_t n = with_infinity ? q + 1 : q;
  std::vector<std::uint32_t> image(n, kUnset);
  std::vector<bool> value_used(n, false);
  std::size_t forced = 0;

  std::uint32_t first_root = kUnset;
  for (std::uint32_t a = 0; a < q; ++a) {
    const FieldElem ga = phi.den().eval({a});
    if (ga.value == 0) {
      if (first_root == kUnset) first_root = a;
      continue;
    }
    const std::uint32_t value = field.div(phi.num().eval({a}), ga).value;
    if (!value_used[value]) {
      value_used[value] = true;
      image[a] = value;
      ++forced;
    }
  }

  if (with_infinity) {
    if (first_root == kUnset) {
      image[q] = q;
    } else {
      image[first_root] = q;
    }
    value_used[q] = true;
    ++forced;
  }

  std::uint32_t next_value = 0;
  for (std::uint32_t point = 0; point < n; ++point) {
    if (image[point] != kUnset) continue;
    while (value_used[next_value]) ++next_value;
    image[point] = next_value;
    value_used[next_value] = true;
  }

  // Preimage sets are disjoint, so the forced part is injective; a repeated
  // value here means the field arithmetic is broken.
  PamAssignment out{Permutation(std::move(image)), forced, n - forced};
  return out;
}

}  // namespace

PamAssignment assign_q_pam(const FracPoly& phi) { return assign(phi, false); }

PamAssignment assign_q1_pam(const FracPoly& phi) { return assign(phi, true); }

PermArray build_pa(const SfpResult& result, int threads) {
  const SfpQuery& query = result.query;
  const bool with_infinity = query.variant == Variant::kLengthQPlus1;
  const std::size_t m = result.members.size();
  std::vector<Permutation> rows(m);
  const int workers = resolve_threads(threads);
  const auto count = static_cast<std::int64_t>(m);
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& phi = result.members[static_cast<std::size_t>(i)];
    rows[static_cast<std::size_t>(i)] = with_infinity ? build_q1_pam(phi) : build_q_pam(phi);
  }
  return PermArray(query.length(), rows, query.guaranteed_distance(), query.describe(),
                   with_infinity);
}

PermArray build_pa(const Field& field, const SfpQuery& query, int threads) {
  return build_pa(sfp_enumerate_fast(field, query, threads), threads);
}

}  // namespace paforge
