#ifndef PAFORGE_FRACPOLY_HPP
#define PAFORGE_FRACPOLY_HPP

#include <string>
#include <vector>

#include "paforge/poly.hpp"

namespace paforge {

/// Sub-normalized fractional polynomial f/g: g monic and gcd(f, g) = 1.
/// Equality is componentwise; ordering is the canonical one used for sorted
/// output (denominator coefficients first, then numerator).
class FracPoly {
 public:
  /// Cancels gcd(f, g) and moves g's leading coefficient into f.
  /// Throws UsageError when g is zero.
  static FracPoly make(const Poly& f, const Poly& g);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return num_.field(); }

  /// "f = <coeffs> ; g = <coeffs>"
  std::string to_string() const;

  friend bool operator==(const FracPoly& a, const FracPoly& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const FracPoly& a, const FracPoly& b);

 private:
  FracPoly(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

struct ValueProfile {
  std::uint32_t v = 0;   // distinct values of f/g off the poles
  bool has_pole = false;  // g has a root in F_q
  int num_deg = kMinusInfinity;
  int den_deg = 0;
};

ValueProfile value_count(const FracPoly& phi);

/// alpha * f(x + beta) / g(x + beta); alpha must be nonzero.
FracPoly transform(const FracPoly& phi, FieldElem alpha, FieldElem beta);

/// Both parts monic and, when char does not divide deg f, the x^(deg f - 1)
/// coefficient of f is zero. False for a zero numerator.
bool is_normalized(const FracPoly& phi);

/// All images under (alpha, beta), alpha != 0; sorted and deduplicated.
std::vector<FracPoly> orbit(const FracPoly& phi);

}  // namespace paforge

#endif  // PAFORGE_FRACPOLY_HPP
