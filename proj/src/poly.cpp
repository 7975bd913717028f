#include "paforge/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paforge {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) {
    throw UsageError("polynomials over different fields");
  }
}

}  // namespace

Poly::Poly(const Field& field, std::vector<FieldElem> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  for (FieldElem c : coeffs_) {
    if (!field.contains(c)) throw UsageError("coefficient outside the field");
  }
  trim();
}

Poly::Poly(const Field& field, std::initializer_list<std::uint32_t> coeffs)
    : field_(&field) {
  coeffs_.reserve(coeffs.size());
  for (std::uint32_t c : coeffs) coeffs_.push_back(field.elem(c));
  trim();
}

Poly Poly::constant(const Field& field, FieldElem c) {
  return Poly(field, std::vector<FieldElem>{c});
}

Poly Poly::monomial(const Field& field, FieldElem c, int degree) {
  std::vector<FieldElem> v(static_cast<std::size_t>(degree) + 1, field.zero());
  v.back() = c;
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

FieldElem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

FieldElem Poly::eval(FieldElem x) const {
  FieldElem acc = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  }
  return acc;
}

Poly Poly::scaled(FieldElem c) const {
  std::vector<FieldElem> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
  return Poly(*field_, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::shifted(FieldElem beta) const {
  // Taylor shift by repeated synthetic division.
  std::vector<FieldElem> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      c[j] = field_->add(c[j], field_->mul(beta, c[j + 1]));
    }
  }
  return Poly(*field_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Field& f = a.field();
  std::vector<FieldElem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Field& f = a.field();
  std::vector<FieldElem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<FieldElem> v(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(f, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<FieldElem> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  std::vector<FieldElem> quot(rem.size() - db, f.zero());
  const FieldElem lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const FieldElem c = f.mul(rem[i], lead_inv);
    quot[i - db] = c;
    if (c.value == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs_[j]));
    }
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].value;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw UsageError("gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly interpolate(const Field& field,
                 std::span<const std::pair<FieldElem, FieldElem>> points) {
  if (points.size() > field.order()) throw UsageError("more points than field elements");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw UsageError("repeated abscissa in interpolation");
      }
    }
  }
  Poly result(field);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly basis = Poly::constant(field, field.one());
    FieldElem denom = field.one();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly(field, std::vector<FieldElem>{field.neg(points[j].first), field.one()});
      denom = field.mul(denom, field.sub(points[i].first, points[j].first));
    }
    result = result + basis.scaled(field.div(points[i].second, denom));
  }
  return result;
}

}  // namespace paforge
