#include "paforge/fracpoly.hpp"

#include <algorithm>

namespace paforge {

namespace {

bool coeffs_less(std::span<const FieldElem> a, std::span<const FieldElem> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

FracPoly FracPoly::make(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw UsageError("fractional polynomial with zero denominator");
  const Field& field = g.field();
  Poly d = gcd(f, g);
  Poly num = divmod(f, d).first;
  Poly den = divmod(g, d).first;
  const FieldElem lead_inv = field.inv(den.leading());
  return FracPoly(num.scaled(lead_inv), den.scaled(lead_inv));
}

std::string FracPoly::to_string() const {
  return "f = " + num_.to_string() + " ; g = " + den_.to_string();
}

bool operator<(const FracPoly& a, const FracPoly& b) {
  if (a.den_ == b.den_) return coeffs_less(a.num_.coeffs(), b.num_.coeffs());
  return coeffs_less(a.den_.coeffs(), b.den_.coeffs());
}

ValueProfile value_count(const FracPoly& phi) {
  const Field& field = phi.field();
  const std::uint32_t q = field.order();
  std::vector<bool> seen(q, false);
  ValueProfile out;
  out.num_deg = phi.num().degree();
  out.den_deg = phi.den().degree();
  for (std::uint32_t a = 0; a < q; ++a) {
    const FieldElem x{a};
    const FieldElem gx = phi.den().eval(x);
    if (gx.value == 0) {
      out.has_pole = true;
      continue;
    }
    const FieldElem value = field.div(phi.num().eval(x), gx);
    if (!seen[value.value]) {
      seen[value.value] = true;
      ++out.v;
    }
  }
  return out;
}

FracPoly transform(const FracPoly& phi, FieldElem alpha, FieldElem beta) {
  if (alpha.value == 0) throw UsageError("transform requires a nonzero scale");
  return FracPoly::make(phi.num().shifted(beta).scaled(alpha), phi.den().shifted(beta));
}

bool is_normalized(const FracPoly& phi) {
  const Poly& f = phi.num();
  if (f.is_zero() || !f.is_monic() || !phi.den().is_monic()) return false;
  const int s = f.degree();
  if (s % static_cast<int>(phi.field().characteristic()) != 0) {
    return f.coeff(s - 1).value == 0;
  }
  return true;
}

std::vector<FracPoly> orbit(const FracPoly& phi) {
  const std::uint32_t q = phi.field().order();
  std::vector<FracPoly> out;
  out.reserve(static_cast<std::size_t>(q) * (q - 1));
  for (std::uint32_t b = 0; b < q; ++b) {
    const Poly f = phi.num().shifted({b});
    const Poly g = phi.den().shifted({b});
    for (std::uint32_t a = 1; a < q; ++a) {
      out.push_back(FracPoly::make(f.scaled({a}), g));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace paforge
