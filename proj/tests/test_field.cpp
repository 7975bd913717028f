#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "paforge/errors.hpp"
#include "paforge/field.hpp"

using namespace paforge;

namespace {

// Digit-vector product reduced by the field's modulus; independent of the
// table code in Field.
std::uint32_t slow_mul(const Field& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = f.characteristic();
  const unsigned k = f.extension_degree();
  if (k == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  std::vector<std::uint32_t> da(k), db(k), prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i, a /= p, b /= p) {
    da[i] = a % p;
    db[i] = b % p;
  }
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto mod = f.modulus();
  for (unsigned d = 2 * k - 1; d-- > k;) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (unsigned i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * mod[i]) % p;
  }
  std::uint32_t out = 0;
  for (unsigned i = k; i-- > 0;) out = out * p + prod[i];
  return out;
}

std::vector<std::uint32_t> test_orders() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= 64; ++q) {
    try {
      Field::of_order(q);
      out.push_back(q);
    } catch (const UsageError&) {
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("prime powers up to 64 are accepted, others rejected") {
    const auto orders = test_orders();
    const std::vector<std::uint32_t> expected{2,  3,  4,  5,  7,  8,  9,  11, 13, 16, 17, 19,
                                              23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53,
                                              59, 61, 64};
    CHECK(orders == expected);
    CHECK_THROWS_AS(Field(4, 1), UsageError);
    CHECK_THROWS_AS(Field(2, 21), UsageError);
    CHECK_NOTHROW(Field(2, 20));
  }

  TEST_CASE("construction examples") {
    const Field f19(19, 1);
    CHECK(f19.order() == 19);
    const Field f4(2, 2);
    const auto mod = f4.modulus();
    CHECK(std::vector<std::uint32_t>(mod.begin(), mod.end()) == std::vector<std::uint32_t>{1, 1, 1});
  }

  TEST_CASE("least monic irreducible modulus") {
    // Low degree first: over F_2, x^3+1 has the root 1, so the least cubic is
    // x^3+x^2+1 (not x^3+x+1); over F_3 the least quadratic is x^2+1.
    const Field f8(2, 3);
    auto m8 = f8.modulus();
    CHECK(std::vector<std::uint32_t>(m8.begin(), m8.end()) == std::vector<std::uint32_t>{1, 0, 1, 1});
    const Field f9(3, 2);
    auto m9 = f9.modulus();
    CHECK(std::vector<std::uint32_t>(m9.begin(), m9.end()) == std::vector<std::uint32_t>{1, 0, 1});
  }

  TEST_CASE("multiplication and inverse examples") {
    const Field f7(7, 1);
    CHECK(f7.mul({3}, {5}) == FieldElem{1});
    const Field f4(2, 2);
    CHECK(f4.mul({2}, {3}) == FieldElem{1});
    CHECK(f4.inv({2}) == FieldElem{3});
    const Field f19(19, 1);
    CHECK(f19.inv({2}) == FieldElem{10});
    const Field f5(5, 1);
    CHECK_THROWS_AS(f5.inv({0}), std::domain_error);
    for (std::uint32_t a = 0; a < 5; ++a) CHECK(f5.mul({0}, {a}) == FieldElem{0});
  }

  TEST_CASE("axioms hold exhaustively for q <= 64") {
    for (std::uint32_t q : test_orders()) {
      CAPTURE(q);
      const Field f = Field::of_order(q);
      bool ok = true;
      for (std::uint32_t a = 0; a < q && ok; ++a) {
        for (std::uint32_t b = 0; b < q && ok; ++b) {
          const FieldElem ea{a}, eb{b};
          ok = f.mul(ea, eb).value == slow_mul(f, a, b) && f.mul(ea, eb) == f.mul(eb, ea) &&
               f.add(ea, eb) == f.add(eb, ea) && f.sub(f.add(ea, eb), eb) == ea;
        }
      }
      CHECK(ok);
      // Distributivity and associativity on a stride through the triples.
      bool ok3 = true;
      for (std::uint32_t a = 0; a < q && ok3; a += 1 + q / 8)
        for (std::uint32_t b = 0; b < q && ok3; b += 1 + q / 8)
          for (std::uint32_t c = 0; c < q && ok3; ++c) {
            const FieldElem x{a}, y{b}, z{c};
            ok3 = f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)) &&
                  f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)) &&
                  f.add(f.add(x, y), z) == f.add(x, f.add(y, z));
          }
      CHECK(ok3);
    }
  }

  TEST_CASE("nonzero multiplication permutes the field; inverses and Fermat") {
    for (std::uint32_t q : test_orders()) {
      CAPTURE(q);
      const Field f = Field::of_order(q);
      bool ok = true;
      for (std::uint32_t a = 1; a < q; ++a) {
        std::set<std::uint32_t> image;
        for (std::uint32_t b = 0; b < q; ++b) image.insert(f.mul({a}, {b}).value);
        ok = ok && image.size() == q;
        ok = ok && f.inv(f.inv({a})) == FieldElem{a} && f.mul({a}, f.inv({a})) == f.one();
        ok = ok && f.pow({a}, q - 1) == f.one();
      }
      CHECK(ok);
    }
  }

  TEST_CASE("primitive element generates the multiplicative group and is least") {
    for (std::uint32_t q : test_orders()) {
      CAPTURE(q);
      const Field f = Field::of_order(q);
      auto order_of = [&](std::uint32_t g) {
        FieldElem x{g};
        std::uint32_t n = 1;
        while (x != f.one()) {
          x = f.mul(x, {g});
          ++n;
        }
        return n;
      };
      CHECK(order_of(f.primitive().value) == q - 1);
      for (std::uint32_t g = 1; g < f.primitive().value; ++g) CHECK(order_of(g) < q - 1);
    }
  }

  TEST_CASE("digit encoding round-trips") {
    for (std::uint32_t q : test_orders()) {
      const Field f = Field::of_order(q);
      for (std::uint32_t a = 0; a < q; ++a) {
        const auto d = f.digits({a});
        CHECK(d.size() == f.extension_degree());
        CHECK(f.from_digits(d) == FieldElem{a});
      }
    }
  }

  TEST_CASE("large field without tables") {
    const Field f = Field::of_order(1u << 20);
    CHECK(f.extension_degree() == 20);
    for (std::uint32_t a : {1u, 2u, 12345u, (1u << 20) - 1}) {
      CHECK(f.mul({a}, f.inv({a})) == f.one());
      CHECK(f.mul({a}, {7}).value == slow_mul(f, a, 7));
    }
    const Field big(1048573, 1);  // largest prime below 2^20
    CHECK(big.mul({1048572}, {1048572}) == big.one());
    CHECK(big.mul({123456}, big.inv({123456})) == big.one());
  }

  TEST_CASE("element out of range") {
    const Field f(5, 1);
    CHECK_THROWS_AS(f.elem(5), UsageError);
    CHECK(f.elem(4) == FieldElem{4});
  }
}
