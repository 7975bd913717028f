#include "paforge/field.hpp"

#include <string>

namespace paforge {

struct Field::Tables {
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint32_t> inv;  // inv[0] unused
  std::vector<std::uint32_t> neg;  // extension fields only
  std::vector<std::uint32_t> add;  // q*q, extension fields with q <= 1024
};

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is small here.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo the monic polynomial m over F_p.
Coeffs poly_rem(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() >= m.size()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - m[i]) * lead) % p);
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Coeffs& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Coeffs div(d + 1, 0);
    div[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (poly_rem(m, div, p).empty()) return false;
    }
  }
  return true;
}

// Least monic irreducible of degree k, coefficient vectors compared with the
// constant term most significant.
Coeffs least_irreducible(std::uint32_t p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  Coeffs m(k + 1, 0);
  m[k] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = 0; i < k; ++i) {
      m[k - 1 - i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (m[0] == 0) continue;  // divisible by x
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) {
    throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (k == 0) throw UsageError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw UsageError("field order exceeds 2^20");
    }
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = k == 1 ? Coeffs{0, 1} : least_irreducible(p, k);

  const auto factors = prime_factors(q_ - 1);
  for (std::uint32_t g = 1; g < q_; ++g) {
    bool generates = true;
    for (std::uint32_t r : factors) {
      if (pow_slow({g}, (q_ - 1) / r) == one()) {
        generates = false;
        break;
      }
    }
    if (generates) {
      primitive_ = {g};
      break;
    }
  }

  if (q_ > kTableFieldOrder) return;

  auto t = std::make_shared<Tables>();
  const std::uint32_t order = q_ - 1;
  t->exp.resize(2 * static_cast<std::size_t>(order));
  t->log.assign(q_, 0);
  FieldElem x = one();
  for (std::uint32_t i = 0; i < order; ++i) {
    t->exp[i] = x.value;
    t->exp[i + order] = x.value;
    t->log[x.value] = i;
    x = mul_slow(x, primitive_);
  }
  t->inv.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a) {
    t->inv[a] = t->exp[(order - t->log[a]) % order];
  }
  if (k_ > 1) {
    t->neg.resize(q_);
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      std::uint32_t v = a, r = 0, place = 1;
      for (unsigned i = 0; i < k_; ++i) {
        const std::uint32_t digit = v % p_;
        v /= p_;
        r += ((p_ - digit) % p_) * place;
        place *= p_;
      }
      t->neg[a] = r;
    }
    if (q_ <= 1024) {
      t->add.resize(static_cast<std::size_t>(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
          t->add[static_cast<std::size_t>(a) * q_ + b] = add_ext({a}, {b}).value;
        }
      }
    }
  }
  tables_ = std::move(t);
}

Field Field::of_order(std::uint32_t q) {
  if (q < 2) throw UsageError("field order must be a prime power >= 2");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) {
    throw UsageError(std::to_string(q) + " is not a prime power");
  }
  return Field(p, k);
}

FieldElem Field::elem(std::uint32_t v) const {
  if (v >= q_) throw UsageError("element encoding out of range");
  return {v};
}

FieldElem Field::add_ext(FieldElem a, FieldElem b) const {
  if (tables_ && !tables_->add.empty()) {
    return {tables_->add[static_cast<std::size_t>(a.value) * q_ + b.value]};
  }
  std::uint32_t x = a.value, y = b.value, r = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return {r};
}

FieldElem Field::neg_ext(FieldElem a) const {
  if (tables_) return {tables_->neg[a.value]};
  std::uint32_t x = a.value, r = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return {r};
}

FieldElem Field::mul_ext(FieldElem a, FieldElem b) const {
  if (a.value == 0 || b.value == 0) return zero();
  if (tables_) {
    return {tables_->exp[tables_->log[a.value] + tables_->log[b.value]]};
  }
  return mul_slow(a, b);
}

FieldElem Field::mul_slow(FieldElem a, FieldElem b) const {
  if (k_ == 1) {
    return {static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  const auto da = digits(a);
  const auto db = digits(b);
  Coeffs prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  Coeffs r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return from_digits(r);
}

FieldElem Field::pow_slow(FieldElem a, std::uint64_t e) const {
  FieldElem r = one();
  while (e > 0) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

FieldElem Field::inv(FieldElem a) const {
  if (a.value == 0) throw std::domain_error("inverse of zero in F_q");
  if (tables_) return {tables_->inv[a.value]};
  if (k_ == 1) return {inv_mod_prime(a.value, p_)};
  return pow(a, q_ - 2);
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  FieldElem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> Field::digits(FieldElem a) const {
  std::vector<std::uint32_t> d(k_);
  std::uint32_t v = a.value;
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

FieldElem Field::from_digits(std::span<const std::uint32_t> d) const {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    v = v * p_ + d[i] % p_;
  }
  return {v};
}

std::span<const std::uint32_t> Field::inverse_table() const {
  if (!tables_) return {};
  return tables_->inv;
}

}  // namespace paforge
