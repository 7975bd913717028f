#ifndef PAFORGE_POLY_HPP
#define PAFORGE_POLY_HPP

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paforge/field.hpp"

namespace paforge {

/// Degree of the zero polynomial. Compares below every real degree.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Univariate polynomial over F_q, coefficients ascending with no trailing
/// zero. Holds a pointer to its field; the field must outlive the polynomial.
class Poly {
 public:
  explicit Poly(const Field& field) : field_(&field) {}
  Poly(const Field& field, std::vector<FieldElem> coeffs);
  Poly(const Field& field, std::initializer_list<std::uint32_t> coeffs);

  static Poly constant(const Field& field, FieldElem c);
  static Poly monomial(const Field& field, FieldElem c, int degree);
  static Poly x(const Field& field) { return monomial(field, field.one(), 1); }

  const Field& field() const { return *field_; }
  std::span<const FieldElem> coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
  }
  FieldElem coeff(int i) const;
  FieldElem leading() const { return coeffs_.empty() ? FieldElem{} : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

  /// Horner evaluation.
  FieldElem eval(FieldElem x) const;
  FieldElem operator()(FieldElem x) const { return eval(x); }

  Poly scaled(FieldElem c) const;
  /// Divides by the leading coefficient; the zero polynomial stays zero.
  Poly monic() const;
  /// f(x + beta).
  Poly shifted(FieldElem beta) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "c0,c1,...,cd" with elements as integer encodings; "0" for zero.
  std::string to_string() const;

 private:
  void trim();

  const Field* field_;
  std::vector<FieldElem> coeffs_;
};

/// Monic gcd by Euclid; throws UsageError when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Lagrange interpolation through points with distinct abscissae.
Poly interpolate(const Field& field,
                 std::span<const std::pair<FieldElem, FieldElem>> points);

}  // namespace paforge

#endif  // PAFORGE_POLY_HPP
