#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "paforge/errors.hpp"
#include "paforge/fracpoly.hpp"

using namespace paforge;

namespace {

std::vector<Poly> polys_up_to(const Field& f, int d, bool monic_only) {
  std::vector<Poly> out;
  if (!monic_only) out.emplace_back(f);
  for (int deg = 0; deg <= d; ++deg) {
    std::size_t total = 1;
    for (int i = 0; i < (monic_only ? deg : deg + 1); ++i) total *= f.order();
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<FieldElem> c(static_cast<std::size_t>(deg + 1));
      std::size_t x = code;
      for (int i = 0; i < (monic_only ? deg : deg + 1); ++i) {
        c[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(x % f.order())};
        x /= f.order();
      }
      if (monic_only) c.back() = f.one();
      if (c.back().value == 0) continue;
      out.emplace_back(f, c);
    }
  }
  return out;
}

// Every sub-normalized f/g with deg f <= s (f != 0) and monic g, deg g <= t.
std::vector<FracPoly> all_fracs(const Field& f, int s, int t) {
  std::vector<FracPoly> out;
  for (const Poly& g : polys_up_to(f, t, true)) {
    for (const Poly& num : polys_up_to(f, s, false)) {
      if (num.is_zero()) continue;
      if (gcd(num, g).degree() != 0) continue;
      out.push_back(FracPoly::make(num, g));
    }
  }
  return out;
}

// Direct evaluation oracle for V.
std::uint32_t direct_v(const FracPoly& phi) {
  const Field& f = phi.field();
  std::set<std::uint32_t> values;
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    const FieldElem ga = phi.den()({a});
    if (ga.value == 0) continue;
    values.insert(f.div(phi.num()({a}), ga).value);
  }
  return static_cast<std::uint32_t>(values.size());
}

}  // namespace

TEST_SUITE("fracpoly") {
  TEST_CASE("make normalizes the denominator and cancels common factors") {
    const Field f5(5, 1);
    const FracPoly a = FracPoly::make(Poly(f5, {0, 2}), Poly(f5, {2}));
    CHECK(a.num() == Poly(f5, {0, 1}));
    CHECK(a.den() == Poly(f5, {1}));
    const FracPoly b = FracPoly::make(Poly(f5, {4, 0, 1}), Poly(f5, {4, 1}));
    CHECK(b.num() == Poly(f5, {1, 1}));
    CHECK(b.den() == Poly(f5, {1}));
    const FracPoly c = FracPoly::make(Poly(f5), Poly(f5, {0, 1}));
    CHECK(c.num().is_zero());
    CHECK(c.den() == Poly(f5, {1}));
    CHECK_THROWS_AS(FracPoly::make(Poly(f5, {1}), Poly(f5)), UsageError);
    CHECK(b.to_string() == "f = 1,1 ; g = 1");
  }

  TEST_CASE("value count examples") {
    const Field f5(5, 1);
    const auto id = value_count(FracPoly::make(Poly::x(f5), Poly(f5, {1})));
    CHECK(id.v == 5);
    CHECK_FALSE(id.has_pole);
    CHECK(value_count(FracPoly::make(Poly(f5, {0, 0, 1}), Poly(f5, {1}))).v == 3);
    const auto inv = value_count(FracPoly::make(Poly(f5, {1}), Poly::x(f5)));
    CHECK(inv.v == 4);
    CHECK(inv.has_pole);
    CHECK(inv.num_deg == 0);
    CHECK(inv.den_deg == 1);
  }

  TEST_CASE("transform examples") {
    const Field f5(5, 1);
    const FracPoly x = FracPoly::make(Poly::x(f5), Poly(f5, {1}));
    CHECK(transform(x, {1}, {0}) == x);
    CHECK(transform(x, {2}, {1}) == FracPoly::make(Poly(f5, {2, 2}), Poly(f5, {1})));
    CHECK_THROWS_AS(transform(x, {0}, {1}), UsageError);
  }

  TEST_CASE("normalization examples") {
    const Field f5(5, 1);
    CHECK(is_normalized(FracPoly::make(Poly(f5, {0, 0, 1}), Poly(f5, {1, 1}))));
    CHECK_FALSE(is_normalized(FracPoly::make(Poly(f5, {0, 1, 1}), Poly(f5, {1}))));
    CHECK_FALSE(is_normalized(FracPoly::make(Poly(f5, {0, 2}), Poly(f5, {1}))));
    CHECK_FALSE(is_normalized(FracPoly::make(Poly(f5), Poly(f5, {1}))));
    // deg f = 5 is divisible by the characteristic: no subleading condition.
    CHECK(is_normalized(FracPoly::make(Poly(f5, {0, 0, 0, 0, 3, 1}), Poly(f5, {1}))));
  }

  TEST_CASE("orbit examples") {
    const Field f5(5, 1);
    CHECK(orbit(FracPoly::make(Poly::x(f5), Poly(f5, {1}))).size() == 20);
    const auto consts = orbit(FracPoly::make(Poly(f5, {3}), Poly(f5, {1})));
    CHECK(consts.size() == 4);
    for (const FracPoly& c : consts) CHECK(c.num().degree() == 0);
  }

  TEST_CASE("orbit size divides q(q-1) and is closed") {
    const Field f5(5, 1);
    for (const FracPoly& phi : all_fracs(f5, 2, 2)) {
      const auto orb = orbit(phi);
      CHECK(20 % orb.size() == 0);
      CHECK(std::binary_search(orb.begin(), orb.end(), phi));
    }
  }

  TEST_CASE("value count matches direct evaluation") {
    for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
      const Field f = Field::of_order(q);
      for (const FracPoly& phi : all_fracs(f, 2, 2)) {
        const auto prof = value_count(phi);
        CHECK(prof.v == direct_v(phi));
        bool pole = false;
        for (std::uint32_t a = 0; a < q; ++a) pole = pole || phi.den()({a}).value == 0;
        CHECK(prof.has_pole == pole);
      }
    }
  }

  TEST_CASE("cross-difference vanishes only for equal fractions") {
    for (std::uint32_t q : {5u, 7u}) {
      const Field f(q, 1);
      const auto fracs = all_fracs(f, 2, 2);
      const int limit = static_cast<int>(q) - 2;
      std::size_t pairs = 0;
      for (std::size_t i = 0; i < fracs.size(); ++i) {
        for (std::size_t j = i + 1; j < fracs.size(); ++j) {
          const FracPoly& a = fracs[i];
          const FracPoly& b = fracs[j];
          const Poly l = a.num() * b.den();
          const Poly r = b.num() * a.den();
          if (l.degree() > limit || r.degree() > limit) continue;
          ++pairs;
          // Oracle: the difference is not the zero function on F_q.
          bool zero_function = true;
          for (std::uint32_t x = 0; x < q && zero_function; ++x) zero_function = l({x}) == r({x});
          if (zero_function) {
            FAIL_CHECK("distinct fractions with vanishing cross difference: " << a.to_string()
                                                                             << " vs " << b.to_string());
          }
        }
      }
      CHECK(pairs > 0);
    }
  }

  TEST_CASE("profile is invariant under every transform") {
    for (std::uint32_t q : {5u, 7u}) {
      const Field f(q, 1);
      for (const FracPoly& phi : all_fracs(f, 2, 2)) {
        const auto base = value_count(phi);
        for (std::uint32_t alpha = 1; alpha < q; ++alpha) {
          for (std::uint32_t beta = 0; beta < q; ++beta) {
            const FracPoly psi = transform(phi, {alpha}, {beta});
            const auto p = value_count(psi);
            CHECK(p.v == direct_v(psi));
            CHECK(p.v == base.v);
            CHECK(p.has_pole == base.has_pole);
            CHECK(p.num_deg == base.num_deg);
            CHECK(p.den_deg == base.den_deg);
          }
        }
      }
    }
  }

  TEST_CASE("every orbit has a normalized member (q = 5, degrees <= 3)") {
    const Field f5(5, 1);
    for (const FracPoly& phi : all_fracs(f5, 3, 3)) {
      bool found = false;
      for (std::uint32_t alpha = 1; alpha < 5 && !found; ++alpha)
        for (std::uint32_t beta = 0; beta < 5 && !found; ++beta)
          found = is_normalized(transform(phi, {alpha}, {beta}));
      if (!found) FAIL_CHECK("orbit without a normalized member: " << phi.to_string());
    }
  }
}
