#ifndef PAFORGE_BOUNDS_HPP
#define PAFORGE_BOUNDS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace paforge {

enum class BoundCheck { kFull, kSampled, kOrderOnly };

std::string to_string(BoundCheck check);  // FULL, SAMPLED, ORDER_ONLY

/// One reproduced lower bound P(n, d) >= size.
struct BoundRecord {
  std::size_t n = 0;
  int d = 0;
  std::uint64_t size = 0;
  std::string construction;
  BoundCheck verification = BoundCheck::kFull;
  std::uint64_t paper_value = 0;
  int paper_distance = 0;
  /// Size equals the published value, the distance equals the published
  /// distance and the verification step passed.
  bool match = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct BoundsOptions {
  /// Sampled check for the largest array and order-only facts for M23.
  bool skip_slow = false;
  int threads = 0;
  std::uint64_t sample_pairs = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t group_trials = 100'000;
  std::function<void(const BoundRecord&)> on_record;
};

/// Six fractional-polynomial bounds followed by three Mathieu bounds.
std::vector<BoundRecord> reproduce_bounds(const BoundsOptions& options = {});

// Header: n,d,size,construction,verification,paper_value,match
void write_bounds_csv(std::ostream& out, const std::vector<BoundRecord>& records);
void write_bounds_csv_row(std::ostream& out, const BoundRecord& record);
void write_bounds_csv_header(std::ostream& out);

}  // namespace paforge

#endif  // PAFORGE_BOUNDS_HPP
