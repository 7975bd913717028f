// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// fails. `--full-large` verifies the 123804-row array exhaustively instead
// of by sampling.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "paforge/groups.hpp"
#include "paforge/pa_io.hpp"
#include "paforge/pam.hpp"
#include "paforge/sfp.hpp"

using namespace paforge;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "criterion " << number << ": " << (out.pass ? "PASS" : "FAIL") << " - " << title
            << out.detail.str() << " (" << secs << " s)" << std::endl;
  if (!out.pass) ++failures;
}

std::vector<SfpQuery> queries_up_to(std::uint32_t q, int k_max) {
  std::vector<SfpQuery> out;
  for (int s = 0; s <= k_max; ++s)
    for (int t = 0; s + t <= k_max; ++t)
      for (const SfpQuery& query : {SfpQuery{q, Variant::kLengthQ, s, t, 0, 0},
                                    SfpQuery{q, Variant::kLengthQPlus1, s, t, 0, 0},
                                    SfpQuery{q, Variant::kLengthQPlus1, s, t, 1, -1},
                                    SfpQuery{q, Variant::kLengthQPlus1, s, t, -1, 1}}) {
        try {
          query.validate();
          out.push_back(query);
        } catch (const UsageError&) {
        }
      }
  return out;
}

std::vector<FracPoly> fractions(const Field& f, int max_num, int max_den) {
  std::vector<FracPoly> out;
  const std::uint32_t q = f.order();
  std::vector<Poly> nums, dens;
  std::uint64_t total = 1;
  for (int i = 0; i <= max_num; ++i) total *= q;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<FieldElem> c(static_cast<std::size_t>(max_num + 1));
    std::uint64_t x = code;
    for (auto& e : c) {
      e = {static_cast<std::uint32_t>(x % q)};
      x /= q;
    }
    nums.emplace_back(f, c);
  }
  for (int deg = 0; deg <= max_den; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<FieldElem> c(static_cast<std::size_t>(deg + 1));
      std::uint64_t x = code;
      for (int i = 0; i < deg; ++i, x /= q) c[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(x % q)};
      c.back() = f.one();
      dens.emplace_back(f, c);
    }
  }
  for (const Poly& g : dens)
    for (const Poly& n : nums)
      if (gcd(n, g).degree() == 0) out.push_back(FracPoly::make(n, g));
  return out;
}

VerifyReport verify(const PermArray& pa, VerifyMode mode) {
  VerifyOptions opt;
  opt.mode = mode;
  opt.sample_pairs = 1'000'000;
  opt.seed = 1;
  return min_distance(pa, opt);
}

}  // namespace

int main(int argc, char** argv) {
  bool full_large = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--full-large") == 0) full_large = true;
  }

  const Field f17(17, 1), f19(19, 1), f23(23, 1);
  std::optional<BestCount> best_q1_19;

  criterion(1, "length q bounds 684, 6840, 65322", [&](Outcome& o) {
    for (auto [k, expected] : {std::pair{3, 684ull}, {4, 6840ull}, {5, 65322ull}}) {
      const BestCount b = sfp_best_count(f19, k, Variant::kLengthQ);
      o.detail << " k=" << k << ":" << b.count;
      o.expect(b.count == expected, "q=19 k=" + std::to_string(k));
    }
  });

  criterion(2, "length q+1 bounds 9520, 123804, 23782", [&](Outcome& o) {
    const BestCount a = sfp_best_count(f17, 3, Variant::kLengthQPlus1);
    o.detail << " q=17:" << a.count;
    o.expect(a.count == 9520, "q=17 k=3");
    best_q1_19 = sfp_best_count(f19, 5, Variant::kLengthQPlus1);
    o.detail << " q=19:" << best_q1_19->count;
    o.expect(best_q1_19->count == 123804, "q=19 k=5");
    const BestCount c = sfp_best_count(f23, 3, Variant::kLengthQPlus1);
    o.detail << " q=23:" << c.count;
    o.expect(c.count == 23782, "q=23 k=3");
  });

  criterion(3, "distance guarantee, q in {5,7,11}, s+t <= 3, FULL", [&](Outcome& o) {
    std::size_t arrays = 0;
    for (std::uint32_t q : {5u, 7u, 11u}) {
      const Field f(q, 1);
      for (const SfpQuery& query : queries_up_to(q, 3)) {
        const auto result = sfp_enumerate_fast(f, query);
        if (result.count < 2) continue;
        const VerifyReport r = verify(build_pa(result), VerifyMode::kFull);
        ++arrays;
        o.expect(r.pass && r.exhaustive, query.describe());
      }
    }
    o.detail << " arrays=" << arrays;
  });

  criterion(4, "paper-scale arrays verify", [&](Outcome& o) {
    for (int k : {3, 4}) {
      const BestCount b = sfp_best_count(f19, k, Variant::kLengthQ);
      const PermArray pa = build_pa(f19, b.argmax);
      const VerifyReport r = verify(pa, VerifyMode::kFull);
      o.detail << " (19," << pa.size() << "," << pa.claimed_distance() << ") FULL min=" << r.min_observed;
      o.expect(r.pass && r.exhaustive, "FULL k=" + std::to_string(k));
    }
    const SfpQuery large =
        best_q1_19 ? best_q1_19->argmax : sfp_best_count(f19, 5, Variant::kLengthQPlus1).argmax;
    const PermArray pa = build_pa(f19, large);
    const VerifyMode mode = full_large ? VerifyMode::kFull : VerifyMode::kSampled;
    const VerifyReport r = verify(pa, mode);
    o.detail << " (20," << pa.size() << "," << pa.claimed_distance() << ") " << to_string(mode)
             << " pairs=" << r.pairs_checked << " min=" << r.min_observed;
    o.expect(pa.size() == 123804 && pa.claimed_distance() == 14, "size/distance of the large array");
    o.expect(r.pass, "verification of the large array");
  });

  criterion(5, "Mathieu orders and minimal degrees", [&](Outcome& o) {
    const PermGroup m22 = make_named("mathieu22"), m23 = make_named("mathieu23"),
                    m24 = make_named("mathieu24");
    o.expect(group_order(m24) == 244823040ull, "|M24|");
    o.expect(group_order(m23) == 10200960ull, "|M23|");
    o.expect(group_order(m22) == 443520ull, "|M22|");
    const GroupFacts f22 = minimal_degree(m22);
    const GroupFacts f23 = minimal_degree(m23);
    o.expect(f22.exact && f22.minimal_degree == 16, "M22 exact minimal degree");
    o.expect(f23.exact && f23.minimal_degree == 16, "M23 exact minimal degree");
    DegreeOptions sampled;
    sampled.mode = DegreeMode::kSampled;
    sampled.trials = 100'000;
    sampled.seed = 1;
    const GroupFacts f24 = minimal_degree(m24, sampled);
    o.expect(f24.minimal_degree >= 16, "M24 sampled degree >= 16");
    o.expect(f24.fixity <= 8, "M24 sampled fixity <= 8");
    o.detail << " M22 d=" << f22.minimal_degree << " M23 d=" << f23.minimal_degree
             << " M24 sampled min=" << f24.minimal_degree << " max fixed=" << f24.fixity;
  });

  criterion(6, "named constructions, FULL-verified", [&](Outcome& o) {
    struct Case {
      std::string name;
      GroupParams params;
      std::size_t n;
      std::uint64_t m;
      int d;
    };
    std::vector<Case> cases;
    for (std::uint32_t q : {5u, 7u, 8u}) cases.push_back({"agl1", {q, 0, 0, {}}, q, q * (q - 1ull), static_cast<int>(q) - 1});
    for (std::uint32_t q : {5u, 7u})
      cases.push_back({"pgl2", {q, 0, 0, {}}, q + 1, (q + 1ull) * q * (q - 1), static_cast<int>(q) - 1});
    cases.push_back({"sym_pairs", {0, 0, 5, {}}, 10, 120, 6});
    // q^(d(d+1)/2) (q^d - 1)...(q - 1) at d = q = 2: 8 * 3 * 1.
    cases.push_back({"agl", {2, 2, 0, {}}, 4, 8 * 3 * 1, 2});
    for (const Case& c : cases) {
      const PermGroup g = make_named(c.name, c.params);
      const GroupFacts facts = minimal_degree(g);
      const PermArray pa = group_to_pa(g, facts);
      const VerifyReport r = verify(pa, VerifyMode::kFull);
      const bool ok = pa.length() == c.n && pa.size() == c.m && r.exhaustive && r.pass &&
                      r.min_observed == c.d && pa.claimed_distance() == c.d;
      o.detail << " " << g.name() << "=(" << pa.length() << "," << pa.size() << "," << r.min_observed << ")";
      o.expect(ok, g.name());
    }
  });

  criterion(7, "sharp k-transitivity equivalence", [&](Outcome& o) {
    const std::vector<std::tuple<std::string, GroupParams, int>> cases{
        {"agl1", {5, 0, 0, {}}, 2}, {"agl1", {7, 0, 0, {}}, 2}, {"pgl2", {5, 0, 0, {}}, 3},
        {"pgl2", {7, 0, 0, {}}, 3}, {"sym", {0, 0, 4, {}}, 4}};
    for (const auto& [name, params, k] : cases) {
      const PermGroup g = make_named(name, params);
      const PermArray pa = group_to_pa(g, minimal_degree(g));
      const bool sharp = is_sharply_k_transitive(pa, k);
      o.expect(theorem8_check(pa, k) && sharp, g.name());
      o.detail << " " << g.name() << ":k=" << k;
    }
  });

  criterion(8, "property suites", [&](Outcome& o) {
    // Oracle and fast enumeration agree.
    std::size_t queries = 0;
    for (std::uint32_t q : {5u, 7u, 11u}) {
      const Field f(q, 1);
      for (const SfpQuery& query : queries_up_to(q, 3)) {
        ++queries;
        o.expect(sfp_enumerate_fast(f, query).members == sfp_enumerate_oracle(f, query).members,
                 "oracle equivalence " + query.describe());
      }
    }
    o.detail << " oracle queries=" << queries;

    // min/min/max inequality.
    bool lemma = true;
    for (int s = 0; s <= 6; ++s)
      for (int t = 0; t <= 6; ++t)
        for (int s1 = 0; s1 <= s; ++s1)
          for (int s2 = 0; s2 <= s; ++s2)
            for (int t1 = 0; t1 <= t; ++t1)
              for (int t2 = 0; t2 <= t; ++t2)
                lemma = lemma && std::min(s - s1, t - t1) + std::min(s - s2, t - t2) +
                                         std::max(s1 + t2, s2 + t1) <=
                                     s + t;
    o.expect(lemma, "inequality lemma");

    // Cross-difference at q = 5, 7 with degrees <= 2.
    std::size_t pairs = 0;
    for (std::uint32_t q : {5u, 7u}) {
      const Field f(q, 1);
      const auto fr = fractions(f, 2, 2);
      const int limit = static_cast<int>(q) - 2;
      for (std::size_t i = 0; i < fr.size(); ++i)
        for (std::size_t j = i + 1; j < fr.size(); ++j) {
          const Poly l = fr[i].num() * fr[j].den(), r = fr[j].num() * fr[i].den();
          if (l.degree() > limit || r.degree() > limit) continue;
          ++pairs;
          bool vanishes = true;
          for (std::uint32_t x = 0; x < q && vanishes; ++x) vanishes = l({x}) == r({x});
          if (vanishes) o.expect(false, "cross difference " + fr[i].to_string() + " vs " + fr[j].to_string());
        }
    }
    o.detail << " cross pairs=" << pairs;

    // Transform invariance of V and membership at q = 5.
    const Field f5(5, 1);
    const auto q5_queries = queries_up_to(5, 3);
    bool invariant = true;
    for (const FracPoly& phi : fractions(f5, 3, 2)) {
      const auto base = value_count(phi);
      for (std::uint32_t a = 1; a < 5; ++a)
        for (std::uint32_t b = 0; b < 5; ++b) {
          const auto moved = value_count(transform(phi, {a}, {b}));
          invariant = invariant && moved.v == base.v && moved.has_pole == base.has_pole;
          for (const SfpQuery& query : q5_queries)
            invariant = invariant && sfp_admits(base, 5, query) == sfp_admits(moved, 5, query);
        }
    }
    o.expect(invariant, "transform invariance");

    // Round-trip and determinism across thread counts.
    const Field f13(13, 1);
    for (const SfpQuery& query : {SfpQuery{13, Variant::kLengthQ, 2, 1, 0, 0},
                                  SfpQuery{13, Variant::kLengthQPlus1, 2, 1, 1, -1}}) {
      const std::string one = pa_to_text(build_pa(f13, query, 1));
      const std::string four = pa_to_text(build_pa(f13, query, 4));
      o.expect(one == four, "thread determinism " + query.describe());
      std::istringstream in(one);
      o.expect(pa_to_text(to_perm_array(parse_pa_text(in))) == one, "round trip " + query.describe());
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
