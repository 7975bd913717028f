#include "paforge/perm_array.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "paforge/parallel.hpp"

namespace paforge {

namespace {

constexpr std::size_t kClosureCheckLimit = 2048;

struct RowResult {
  int min = std::numeric_limits<int>::max();
  std::size_t argmin = 0;
  std::size_t violation = std::numeric_limits<std::size_t>::max();
  bool saw_one = false;
};

RowResult scan_row(const RowMatrix& rows, std::size_t i, int claimed) {
  RowResult r;
  const auto base = rows.row(i);
  const std::size_t m = rows.rows();
  for (std::size_t j = i + 1; j < m; ++j) {
    const int d = static_cast<int>(hamming_distance(base, rows.row(j)));
    if (d == 1) r.saw_one = true;
    if (d < r.min) {
      r.min = d;
      r.argmin = j;
    }
    if (d < claimed) {
      r.violation = j;
      break;
    }
  }
  return r;
}

std::uint64_t pairs_before_row(std::uint64_t m, std::uint64_t i) {
  // sum_{r < i} (m - 1 - r)
  return i * (m - 1) - i * (i - 1) / 2;
}

void check_full_cap(const RowMatrix& rows, const VerifyOptions& options) {
  const double m = static_cast<double>(rows.rows());
  if (m * (m - 1) / 2 > options.full_pair_cap) {
    throw CapExceeded("FULL verification exceeds the pair cap; use sampled mode");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> draw_pairs(std::size_t m,
                                                            const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> first(0, m - 1);
  std::uniform_int_distribution<std::size_t> second(0, m - 2);
  std::vector<std::pair<std::size_t, std::size_t>> pairs(options.sample_pairs);
  for (auto& pr : pairs) {
    const std::size_t i = first(rng);
    std::size_t j = second(rng);
    if (j >= i) ++j;
    pr = {std::min(i, j), std::max(i, j)};
  }
  return pairs;
}

VerifyReport finish_full(std::vector<RowResult>& results, std::size_t m, int claimed,
                         std::size_t first_bad) {
  VerifyReport report;
  report.mode = VerifyMode::kFull;
  report.claimed_distance = claimed;
  for (const RowResult& r : results) {
    if (r.saw_one) throw std::logic_error("two permutations at distance 1");
  }
  if (first_bad < m) {
    int best = results[first_bad].min;
    for (std::size_t r = 0; r < first_bad; ++r) best = std::min(best, results[r].min);
    report.min_observed = best;
    report.witness = {first_bad, results[first_bad].violation};
    report.pairs_checked = pairs_before_row(m, first_bad) + (results[first_bad].violation - first_bad);
    report.pass = false;
    return report;
  }
  std::size_t best_row = 0;
  for (std::size_t r = 1; r + 1 < m; ++r) {
    if (results[r].min < results[best_row].min) best_row = r;
  }
  report.min_observed = results[best_row].min;
  report.witness = {best_row, results[best_row].argmin};
  report.pairs_checked = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  report.pass = report.min_observed >= claimed;
  report.exhaustive = true;
  return report;
}

VerifyReport finish_sampled(const std::vector<int>& dist,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                            int claimed) {
  VerifyReport report;
  report.mode = VerifyMode::kSampled;
  report.claimed_distance = claimed;
  report.pairs_checked = pairs.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < dist.size(); ++i) {
    if (dist[i] < dist[best]) best = i;
  }
  report.min_observed = dist.empty() ? 0 : dist[best];
  if (!pairs.empty()) report.witness = pairs[best];
  report.pass = !dist.empty() && report.min_observed >= claimed;
  return report;
}

void require_two_rows(const RowMatrix& rows) {
  if (rows.rows() < 2) throw UsageError("distance verification needs at least two rows");
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v]) throw UsageError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const { return moved_points() == 0; }

std::size_t Permutation::moved_points() const {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) moved += images_[i] != i;
  return moved;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation out;
  out.images_ = std::move(v);
  return out;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size()) throw UsageError("composing permutations of different degree");
  std::vector<std::uint32_t> v(first.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = second[first[i]];
  return Permutation(std::move(v));
}

std::size_t hamming_distance(std::span<const std::uint32_t> p, std::span<const std::uint32_t> r) {
  if (p.size() != r.size()) throw UsageError("hamming distance of different lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) d += p[i] != r[i];
  return d;
}

std::size_t hamming_distance(const Permutation& p, const Permutation& r) {
  return hamming_distance(p.images(), r.images());
}

void RowMatrix::push_back(std::span<const std::uint32_t> row) {
  if (row.size() != n_) throw UsageError("row length does not match the array length");
  data_.insert(data_.end(), row.begin(), row.end());
}

PermArray::PermArray(std::size_t n, const std::vector<Permutation>& rows, int claimed_distance,
                     std::string provenance, bool has_infinity)
    : rows_(n),
      claimed_distance_(claimed_distance),
      provenance_(std::move(provenance)),
      has_infinity_(has_infinity) {
  for (const Permutation& p : rows) rows_.push_back(p.images());
  validate();
}

PermArray::PermArray(RowMatrix rows, int claimed_distance, std::string provenance,
                     bool has_infinity)
    : rows_(std::move(rows)),
      claimed_distance_(claimed_distance),
      provenance_(std::move(provenance)),
      has_infinity_(has_infinity) {
  validate();
}

void PermArray::validate() const {
  const std::size_t n = rows_.length();
  if (n == 0) throw UsageError("permutation array of length zero");
  if (claimed_distance_ < 1 || claimed_distance_ > static_cast<int>(n)) {
    throw UsageError("claimed distance outside 1..n");
  }
  if (provenance_.find('\n') != std::string::npos) {
    throw UsageError("provenance must be a single line");
  }
  const std::size_t m = rows_.rows();
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t v : rows_.row(i)) {
      if (v >= n || seen[v]) throw UsageError("row " + std::to_string(i) + " is not a permutation");
      seen[v] = true;
    }
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto row_less = [this](std::size_t a, std::size_t b) {
    const auto ra = rows_.row(a);
    const auto rb = rows_.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  };
  std::sort(order.begin(), order.end(), row_less);
  for (std::size_t i = 1; i < m; ++i) {
    if (!row_less(order[i - 1], order[i])) {
      throw UsageError("rows " + std::to_string(std::min(order[i - 1], order[i])) + " and " +
                       std::to_string(std::max(order[i - 1], order[i])) + " are identical");
    }
  }
}

Permutation PermArray::row(std::size_t i) const {
  const auto r = rows_.row(i);
  return Permutation(std::vector<std::uint32_t>(r.begin(), r.end()));
}

std::string to_string(VerifyMode mode) { return mode == VerifyMode::kFull ? "FULL" : "SAMPLED"; }

VerifyReport min_distance_reference(const RowMatrix& rows, int claimed,
                                    const VerifyOptions& options) {
  require_two_rows(rows);
  const std::size_t m = rows.rows();
  if (options.mode == VerifyMode::kSampled) {
    const auto pairs = draw_pairs(m, options);
    std::vector<int> dist(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      dist[i] = static_cast<int>(hamming_distance(rows.row(pairs[i].first), rows.row(pairs[i].second)));
    }
    return finish_sampled(dist, pairs, claimed);
  }
  check_full_cap(rows, options);
  std::vector<RowResult> results(m);
  std::size_t first_bad = m;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    results[i] = scan_row(rows, i, claimed);
    if (results[i].violation != std::numeric_limits<std::size_t>::max()) {
      first_bad = i;
      break;
    }
  }
  return finish_full(results, m, claimed, first_bad);
}

VerifyReport min_distance(const RowMatrix& rows, int claimed, const VerifyOptions& options) {
  require_two_rows(rows);
  const std::size_t m = rows.rows();
  const int workers = resolve_threads(options.threads);
  if (options.mode == VerifyMode::kSampled) {
    const auto pairs = draw_pairs(m, options);
    std::vector<int> dist(pairs.size());
    const auto n_pairs = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for num_threads(workers) schedule(static)
    for (std::int64_t i = 0; i < n_pairs; ++i) {
      const auto& pr = pairs[static_cast<std::size_t>(i)];
      dist[static_cast<std::size_t>(i)] =
          static_cast<int>(hamming_distance(rows.row(pr.first), rows.row(pr.second)));
    }
    return finish_sampled(dist, pairs, claimed);
  }
  check_full_cap(rows, options);
  std::vector<RowResult> results(m);
  std::atomic<std::size_t> first_bad{m};
  const auto last = static_cast<std::int64_t>(m) - 1;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
  for (std::int64_t ii = 0; ii < last; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    // Rows past a known violation cannot change the report.
    if (i > first_bad.load(std::memory_order_relaxed)) continue;
    results[i] = scan_row(rows, i, claimed);
    if (results[i].violation != std::numeric_limits<std::size_t>::max()) {
      std::size_t cur = first_bad.load();
      while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
      }
    }
  }
  return finish_full(results, m, claimed, first_bad.load());
}

VerifyReport min_distance(const PermArray& pa, const VerifyOptions& options) {
  return min_distance(pa.rows(), pa.claimed_distance(), options);
}

std::optional<std::uint64_t> falling_factorial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t f = n - i;
    if (f != 0 && r > std::numeric_limits<std::uint64_t>::max() / f) return std::nullopt;
    r *= f;
  }
  return r;
}

bool is_sharply_k_transitive(const PermArray& pa, int k) {
  const std::size_t n = pa.length();
  const std::size_t m = pa.size();
  if (k < 0 || static_cast<std::size_t>(k) > n) throw UsageError("k exceeds the degree");
  if (m <= kClosureCheckLimit) {
    std::set<Permutation> elems;
    for (std::size_t i = 0; i < m; ++i) elems.insert(pa.row(i));
    for (const Permutation& x : elems) {
      for (const Permutation& y : elems) {
        if (!elems.contains(compose(x, y))) throw UsageError("rows do not form a group");
      }
    }
  }
  const auto expected = falling_factorial(n, static_cast<std::uint64_t>(k));
  if (!expected || *expected != m) return false;
  std::set<std::vector<std::uint32_t>> prefixes;
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = pa.rows().row(i);
    if (!prefixes.emplace(r.begin(), r.begin() + k).second) return false;
  }
  return true;
}

bool theorem8_check(const PermArray& pa, int k) {
  const std::size_t n = pa.length();
  if (k < 1 || static_cast<std::size_t>(k) > n) throw UsageError("k outside 1..n");
  const auto expected = falling_factorial(n, static_cast<std::uint64_t>(k));
  if (!expected || *expected != pa.size()) throw UsageError("group order is not n!/(n-k)!");
  const int target = static_cast<int>(n) - k + 1;
  VerifyOptions options;
  options.mode = VerifyMode::kFull;
  const bool distance_holds = min_distance(pa.rows(), target, options).pass;
  return distance_holds == is_sharply_k_transitive(pa, k);
}

}  // namespace paforge
