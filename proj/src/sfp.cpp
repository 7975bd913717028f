#include "paforge/sfp.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "paforge/parallel.hpp"

namespace paforge {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::array<std::pair<int, int>, 3> kOffsets{{{0, 0}, {1, -1}, {-1, 1}}};

// Largest allowed q - V for a fraction with the given degrees, or -1 when the
// degrees are already outside the budget.
int allowed_defect(const SfpQuery& query, int num_deg, int den_deg, bool has_pole) {
  int s = query.s;
  int t = query.t;
  int extra = 0;
  if (query.variant == Variant::kLengthQPlus1) {
    if (has_pole) {
      extra = 1;
    } else {
      s += query.a;
      t += query.b;
    }
  }
  if (num_deg > s || den_deg > t) return -1;
  const int t_slack = t - den_deg;
  // A zero numerator leaves the numerator slack unbounded.
  const int slack = num_deg == kMinusInfinity ? t_slack : std::min(s - num_deg, t_slack);
  return slack + extra;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Coefficient vector for `index` read as base-q digits, lowest first.
std::vector<FieldElem> digits_of(std::uint64_t index, std::uint32_t q, int len) {
  std::vector<FieldElem> c(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    c[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return c;
}

// Every monic polynomial of degree 0..max_deg, by degree then encoding.
std::vector<Poly> monic_polys(const Field& field, int max_deg) {
  const std::uint32_t q = field.order();
  std::vector<Poly> out;
  for (int d = 0; d <= max_deg; ++d) {
    const std::uint64_t count = ipow(q, d);
    for (std::uint64_t i = 0; i < count; ++i) {
      auto c = digits_of(i, q, d);
      c.push_back(field.one());
      out.emplace_back(field, std::move(c));
    }
  }
  return out;
}

bool coprime(const Poly& f, const Poly& g) { return gcd(f, g).degree() == 0; }

void finish(SfpResult& result, Clock::time_point start) {
  std::sort(result.members.begin(), result.members.end());
  result.members.erase(std::unique(result.members.begin(), result.members.end()),
                       result.members.end());
  result.count = result.members.size();
  result.guaranteed_distance = result.query.guaranteed_distance();
  result.elapsed_ms = ms_since(start);
}

// Search state for one denominator in the fast kernel.
class DenominatorScan {
 public:
  DenominatorScan(const Field& field, const SfpQuery& query,
                  const std::vector<std::vector<FieldElem>>& powers)
      : field_(field),
        query_(query),
        powers_(powers),
        q_(field.order()),
        g_vals_(q_),
        g_inv_(q_),
        high_(q_),
        stamp_(q_, 0) {}

  void run(const Poly& g, std::vector<FracPoly>& out) {
    const int t_deg = g.degree();
    poles_ = 0;
    for (std::uint32_t a = 0; a < q_; ++a) {
      g_vals_[a] = g.eval({a});
      if (g_vals_[a].value == 0) {
        ++poles_;
      } else {
        g_inv_[a] = field_.inv(g_vals_[a]);
      }
    }
    const bool has_pole = poles_ > 0;
    const int max_num = query_.max_num_degree();
    for (int s_deg = 0; s_deg <= max_num; ++s_deg) {
      const int allowed = allowed_defect(query_, s_deg, t_deg, has_pole);
      // Every pole already costs one value.
      if (allowed < static_cast<int>(poles_)) continue;
      scan_numerators(g, s_deg, allowed, out);
    }
  }

 private:
  void scan_numerators(const Poly& g, int s_deg, int allowed, std::vector<FracPoly>& out) {
    const std::uint32_t p = field_.characteristic();
    // Normalized numerators: monic, and x^(s-1) vanishes unless p | s.
    std::vector<int> free_outer;
    bool constant_free = false;
    for (int i = 0; i < s_deg; ++i) {
      if (i == s_deg - 1 && s_deg % static_cast<int>(p) != 0) continue;
      if (i == 0) {
        constant_free = true;
      } else {
        free_outer.push_back(i);
      }
    }
    std::vector<FieldElem> coeffs(static_cast<std::size_t>(s_deg) + 1, field_.zero());
    coeffs.back() = field_.one();
    const std::uint64_t outer_count = ipow(q_, static_cast<int>(free_outer.size()));
    const std::uint32_t inner_count = constant_free ? q_ : 1;
    const int budget = allowed - static_cast<int>(poles_);

    for (std::uint64_t idx = 0; idx < outer_count; ++idx) {
      std::uint64_t v = idx;
      for (int pos : free_outer) {
        coeffs[static_cast<std::size_t>(pos)] = {static_cast<std::uint32_t>(v % q_)};
        v /= q_;
      }
      if (constant_free) coeffs[0] = field_.zero();
      // high_[a] = f(a) with the free constant term set to zero.
      for (std::uint32_t a = 0; a < q_; ++a) {
        FieldElem acc = field_.zero();
        for (int i = s_deg; i >= 0; --i) {
          const FieldElem c = coeffs[static_cast<std::size_t>(i)];
          if (c.value != 0) acc = field_.add(acc, field_.mul(c, powers_[static_cast<std::size_t>(i)][a]));
        }
        high_[a] = acc;
      }
      for (std::uint32_t c0 = 0; c0 < inner_count; ++c0) {
        if (!accept(FieldElem{c0}, budget)) continue;
        if (constant_free) coeffs[0] = {c0};
        Poly f(field_, coeffs);
        if (!coprime(f, g)) continue;
        const FracPoly rep = FracPoly::make(f, g);
        for (FracPoly& member : orbit(rep)) {
          if (sfp_admits(value_count(member), q_, query_)) out.push_back(std::move(member));
        }
      }
    }
  }

  // Counts repeated values of (high + c0) / g off the poles, bailing out once
  // the repeats exceed `budget`. Rejects a shared root of f and g.
  bool accept(FieldElem c0, int budget) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    int repeats = 0;
    for (std::uint32_t a = 0; a < q_; ++a) {
      const FieldElem fa = field_.add(high_[a], c0);
      if (g_vals_[a].value == 0) {
        if (fa.value == 0) return false;
        continue;
      }
      const std::uint32_t value = field_.mul(fa, g_inv_[a]).value;
      if (stamp_[value] == epoch_) {
        if (++repeats > budget) return false;
      } else {
        stamp_[value] = epoch_;
      }
    }
    return true;
  }

  const Field& field_;
  const SfpQuery& query_;
  const std::vector<std::vector<FieldElem>>& powers_;
  std::uint32_t q_;
  std::uint32_t poles_ = 0;
  std::vector<FieldElem> g_vals_;
  std::vector<FieldElem> g_inv_;
  std::vector<FieldElem> high_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

std::string to_string(Variant v) { return v == Variant::kLengthQ ? "q" : "q+1"; }

Variant parse_variant(const std::string& s) {
  if (s == "q") return Variant::kLengthQ;
  if (s == "q+1") return Variant::kLengthQPlus1;
  throw UsageError("unknown variant '" + s + "' (expected q or q+1)");
}

void SfpQuery::validate() const {
  const long limit = static_cast<long>(q) - 2;
  auto fail = [this](const std::string& why) {
    throw UsageError("invalid SFP query " + describe() + ": " + why);
  };
  if (q < 2) fail("field order below 2");
  if (s < 0 || t < 0) fail("s and t must be non-negative");
  if (s + t > limit) fail("s + t exceeds q - 2");
  if (variant == Variant::kLengthQ) {
    if (a != 0 || b != 0) fail("a and b apply to length q+1 only");
    return;
  }
  if (s + a < 0 || t + b < 0) fail("s + a and t + b must be non-negative");
  if (s + t + a > limit || s + t + b > limit || s + t + a + b > limit) {
    fail("offset budgets exceed q - 2");
  }
}

int SfpQuery::max_num_degree() const {
  return variant == Variant::kLengthQ ? s : s + std::max(a, 0);
}

int SfpQuery::max_den_degree() const {
  return variant == Variant::kLengthQ ? t : t + std::max(b, 0);
}

int SfpQuery::guaranteed_distance() const {
  const int qi = static_cast<int>(q);
  if (variant == Variant::kLengthQ) return qi - s - t;
  return std::min({qi - s - t, qi - s - t - a - b, qi + 1 - s - t - std::max(a, b)});
}

std::string SfpQuery::describe() const {
  std::ostringstream os;
  os << "sfp:q=" << q << ",variant=" << to_string(variant) << ",s=" << s << ",t=" << t;
  if (variant == Variant::kLengthQPlus1) os << ",a=" << a << ",b=" << b;
  return os.str();
}

bool sfp_admits(const ValueProfile& profile, std::uint32_t q, const SfpQuery& query) {
  const int allowed = allowed_defect(query, profile.num_deg, profile.den_deg, profile.has_pole);
  if (allowed < 0) return false;
  return static_cast<long>(q) - static_cast<long>(profile.v) <= allowed;
}

bool sfp_member_q(const FracPoly& phi, int s, int t) {
  const SfpQuery query{phi.field().order(), Variant::kLengthQ, s, t, 0, 0};
  return sfp_admits(value_count(phi), query.q, query);
}

bool sfp_member_q1(const FracPoly& phi, int s, int t, int a, int b) {
  const SfpQuery query{phi.field().order(), Variant::kLengthQPlus1, s, t, a, b};
  return sfp_admits(value_count(phi), query.q, query);
}

SfpResult sfp_enumerate_oracle(const Field& field, const SfpQuery& query) {
  query.validate();
  if (query.q != field.order()) throw UsageError("query order does not match the field");
  const auto start = Clock::now();
  const std::uint32_t q = field.order();
  const int num_len = query.max_num_degree() + 1;
  const std::vector<Poly> dens = monic_polys(field, query.max_den_degree());
  const double candidates = std::pow(static_cast<double>(q), num_len) * static_cast<double>(dens.size());
  if (candidates > kOracleCandidateCap) {
    throw CapExceeded("oracle enumeration of " + query.describe() + " exceeds 1e9 candidates");
  }
  SfpResult result;
  result.query = query;
  const std::uint64_t num_count = ipow(q, num_len);
  for (const Poly& g : dens) {
    for (std::uint64_t i = 0; i < num_count; ++i) {
      Poly f(field, digits_of(i, q, num_len));
      if (!coprime(f, g)) continue;
      FracPoly phi = FracPoly::make(f, g);
      if (sfp_admits(value_count(phi), q, query)) result.members.push_back(std::move(phi));
    }
  }
  finish(result, start);
  return result;
}

SfpResult sfp_enumerate_fast(const Field& field, const SfpQuery& query, int threads) {
  query.validate();
  if (query.q != field.order()) throw UsageError("query order does not match the field");
  const auto start = Clock::now();
  const std::uint32_t q = field.order();
  const std::vector<Poly> dens = monic_polys(field, query.max_den_degree());

  const int max_pow = std::max(query.max_num_degree(), 1);
  std::vector<std::vector<FieldElem>> powers(static_cast<std::size_t>(max_pow) + 1,
                                             std::vector<FieldElem>(q));
  for (std::uint32_t a = 0; a < q; ++a) {
    FieldElem x = field.one();
    for (int i = 0; i <= max_pow; ++i) {
      powers[static_cast<std::size_t>(i)][a] = x;
      x = field.mul(x, {a});
    }
  }

  const int workers = resolve_threads(threads);
  std::vector<std::vector<FracPoly>> local(static_cast<std::size_t>(workers));
  const auto n_dens = static_cast<std::int64_t>(dens.size());

#pragma omp parallel num_threads(workers)
  {
    DenominatorScan scan(field, query, powers);
    auto& out = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n_dens; ++i) {
      scan.run(dens[static_cast<std::size_t>(i)], out);
    }
  }

  SfpResult result;
  result.query = query;
  std::size_t total = 0;
  for (const auto& part : local) total += part.size();
  result.members.reserve(total);
  for (auto& part : local) {
    std::move(part.begin(), part.end(), std::back_inserter(result.members));
  }
  finish(result, start);
  return result;
}

std::vector<SfpQuery> sfp_candidate_queries(std::uint32_t q, int k, Variant variant) {
  const long limit = static_cast<long>(q) - 2;
  if (k < 0) throw UsageError("k must be non-negative");
  if (variant == Variant::kLengthQ && k > limit) throw UsageError("k exceeds q - 2");
  if (variant == Variant::kLengthQPlus1 && k + 1 > limit) throw UsageError("k + 1 exceeds q - 2");
  std::vector<SfpQuery> out;
  for (int s = 0; s <= k; ++s) {
    const int t = k - s;
    if (variant == Variant::kLengthQ) {
      out.push_back({q, variant, s, t, 0, 0});
      continue;
    }
    for (auto [a, b] : kOffsets) {
      const SfpQuery query{q, variant, s, t, a, b};
      try {
        query.validate();
      } catch (const UsageError&) {
        continue;
      }
      out.push_back(query);
    }
  }
  return out;
}

BestCount sfp_best_count(const Field& field, int k, Variant variant, int threads) {
  const auto start = Clock::now();
  BestCount best;
  bool first = true;
  for (const SfpQuery& query : sfp_candidate_queries(field.order(), k, variant)) {
    const std::size_t count = sfp_enumerate_fast(field, query, threads).count;
    if (first || count > best.count) {
      best.count = count;
      best.argmax = query;
      first = false;
    }
  }
  best.elapsed_ms = ms_since(start);
  return best;
}

std::uint64_t pp_count(const Field& field, int d) {
  const std::uint32_t q = field.order();
  if (d < 0) return 0;
  if (q <= 8) {
    // Interpolate every permutation of F_q and bucket by reduced degree.
    std::vector<std::uint32_t> perm(q);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::pair<FieldElem, FieldElem>> graph(q);
    std::uint64_t count = 0;
    do {
      for (std::uint32_t a = 0; a < q; ++a) graph[a] = {FieldElem{a}, FieldElem{perm[a]}};
      if (interpolate(field, graph).degree() <= d) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
  }
  const int len = std::min(d, static_cast<int>(q) - 2) + 1;
  if (std::pow(static_cast<double>(q), len) > kOracleCandidateCap) {
    throw CapExceeded("permutation polynomial count infeasible for this q and degree");
  }
  const std::uint64_t total = ipow(q, len);
  std::vector<std::uint32_t> stamp(q, 0);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    Poly f(field, digits_of(i, q, len));
    bool bijective = true;
    for (std::uint32_t a = 0; a < q && bijective; ++a) {
      std::uint32_t& slot = stamp[f.eval({a}).value];
      if (slot == i + 1) bijective = false;
      slot = static_cast<std::uint32_t>(i + 1);
    }
    if (bijective) ++count;
  }
  return count;
}

}  // namespace paforge
