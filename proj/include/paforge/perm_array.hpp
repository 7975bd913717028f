#ifndef PAFORGE_PERM_ARRAY_HPP
#define PAFORGE_PERM_ARRAY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paforge/errors.hpp"

namespace paforge {

/// Permutation of {0, ..., n-1}; images[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws UsageError unless `images` is a permutation of 0..n-1.
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  std::span<const std::uint32_t> images() const { return images_; }

  bool is_identity() const;
  std::size_t moved_points() const;
  Permutation inverse() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Apply `first`, then `second`.
Permutation compose(const Permutation& first, const Permutation& second);

/// Number of points where the two permutations disagree.
std::size_t hamming_distance(std::span<const std::uint32_t> p, std::span<const std::uint32_t> r);
std::size_t hamming_distance(const Permutation& p, const Permutation& r);

/// Row-major block of M rows of length n. No distinctness requirement; the
/// verifier runs on this so that files with repeated rows can be reported.
class RowMatrix {
 public:
  RowMatrix() = default;
  explicit RowMatrix(std::size_t n) : n_(n) {}

  std::size_t length() const { return n_; }
  std::size_t rows() const { return n_ == 0 ? 0 : data_.size() / n_; }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }
  void push_back(std::span<const std::uint32_t> row);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> data_;
};

/// An (n, M, d) permutation array: pairwise distinct rows of length n and a
/// claimed minimum distance 1 <= d <= n. For length q+1 arrays the point
/// n-1 stands for infinity.
class PermArray {
 public:
  PermArray(std::size_t n, const std::vector<Permutation>& rows, int claimed_distance,
            std::string provenance, bool has_infinity = false);
  PermArray(RowMatrix rows, int claimed_distance, std::string provenance,
            bool has_infinity = false);

  std::size_t length() const { return rows_.length(); }
  std::size_t size() const { return rows_.rows(); }
  int claimed_distance() const { return claimed_distance_; }
  const std::string& provenance() const { return provenance_; }
  bool has_infinity() const { return has_infinity_; }
  const RowMatrix& rows() const { return rows_; }
  Permutation row(std::size_t i) const;

 private:
  void validate() const;

  RowMatrix rows_;
  int claimed_distance_;
  std::string provenance_;
  bool has_infinity_;
};

enum class VerifyMode { kFull, kSampled };

std::string to_string(VerifyMode mode);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kFull;
  std::uint64_t sample_pairs = 1'000'000;
  std::uint64_t seed = 1;
  double full_pair_cap = 1e10;
  int threads = 0;
};

struct VerifyReport {
  VerifyMode mode = VerifyMode::kFull;
  std::uint64_t pairs_checked = 0;
  int min_observed = 0;
  std::pair<std::size_t, std::size_t> witness{0, 0};
  int claimed_distance = 0;
  bool pass = false;
  /// FULL mode that scanned every pair; min_observed is then the exact
  /// minimum distance.
  bool exhaustive = false;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Minimum-distance check against `claimed`.
///
/// FULL scans pairs (i, j), i < j, in lexicographic order and stops at the
/// first pair closer than `claimed`; the witness is that pair and
/// pairs_checked counts the pairs up to and including it. Without a
/// violation the witness is the first pair attaining the minimum. Rows are
/// split across OpenMP workers, but the report equals the serial scan.
///
/// SAMPLED draws `sample_pairs` random pairs of distinct indices from a
/// seeded generator. A pass there is evidence only.
VerifyReport min_distance(const RowMatrix& rows, int claimed, const VerifyOptions& options);
VerifyReport min_distance(const PermArray& pa, const VerifyOptions& options);

/// Single-threaded scan with the same contract as min_distance.
VerifyReport min_distance_reference(const RowMatrix& rows, int claimed,
                                    const VerifyOptions& options);

/// Rows are assumed to form a group (checked by closure when M <= 2048).
/// True iff M = n!/(n-k)! and no two rows agree on the points 0..k-1.
bool is_sharply_k_transitive(const PermArray& pa, int k);

/// Checks that "min distance >= n-k+1" and "sharply k-transitive" agree on
/// this array. Requires M = n!/(n-k)!.
bool theorem8_check(const PermArray& pa, int k);

/// n!/(n-k)!, or nullopt on overflow.
std::optional<std::uint64_t> falling_factorial(std::uint64_t n, std::uint64_t k);

}  // namespace paforge

#endif  // PAFORGE_PERM_ARRAY_HPP
