#ifndef PAFORGE_FIELD_HPP
#define PAFORGE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "paforge/errors.hpp"

namespace paforge {

/// Element of F_q in its integer encoding 0..q-1. For extension fields the
/// base-p digits of `value` are the coefficients of the polynomial basis,
/// lowest degree first.
struct FieldElem {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;
inline constexpr std::uint32_t kTableFieldOrder = 1u << 16;

bool is_prime(std::uint64_t n);

/// Finite field F_q, q = p^k <= 2^20.
///
/// Immutable after construction. Lookup tables live behind a shared pointer,
/// so copies are cheap and any copy may be used from several threads.
/// For k > 1 the modulus is the least monic irreducible of degree k over F_p
/// when coefficient vectors are compared constant term first.
class Field {
 public:
  Field(std::uint32_t p, unsigned k);

  /// Field of the given prime-power order.
  static Field of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return p_; }
  unsigned extension_degree() const { return k_; }
  std::uint32_t order() const { return q_; }

  /// Coefficients of the modulus, ascending; size k+1. For k = 1 this is x.
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  /// Least encoding that generates the multiplicative group.
  FieldElem primitive() const { return primitive_; }

  bool contains(FieldElem a) const { return a.value < q_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem elem(std::uint32_t v) const;

  FieldElem add(FieldElem a, FieldElem b) const {
    if (k_ == 1) {
      std::uint32_t s = a.value + b.value;
      return {s >= p_ ? s - p_ : s};
    }
    return add_ext(a, b);
  }

  FieldElem neg(FieldElem a) const {
    if (k_ == 1) return {a.value == 0 ? 0 : p_ - a.value};
    return neg_ext(a);
  }

  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

  FieldElem mul(FieldElem a, FieldElem b) const {
    if (k_ == 1) {
      return {static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(a.value) * b.value % p_)};
    }
    return mul_ext(a, b);
  }

  /// Multiplicative inverse; throws std::domain_error for zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  /// Base-p digits of the encoding, length k.
  std::vector<std::uint32_t> digits(FieldElem a) const;
  FieldElem from_digits(std::span<const std::uint32_t> digits) const;

  /// Inverse table indexed by encoding (entry 0 unused); empty when q > 2^16.
  std::span<const std::uint32_t> inverse_table() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables;

  FieldElem add_ext(FieldElem a, FieldElem b) const;
  FieldElem neg_ext(FieldElem a) const;
  FieldElem mul_ext(FieldElem a, FieldElem b) const;
  FieldElem mul_slow(FieldElem a, FieldElem b) const;
  FieldElem pow_slow(FieldElem a, std::uint64_t e) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  FieldElem primitive_{};
  std::shared_ptr<const Tables> tables_;
};

}  // namespace paforge

#endif  // PAFORGE_FIELD_HPP
