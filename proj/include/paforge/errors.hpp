#ifndef PAFORGE_ERRORS_HPP
#define PAFORGE_ERRORS_HPP

#include <stdexcept>

namespace paforge {

/// Invalid parameters: non-prime characteristic, budgets out of range,
/// malformed files. The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force or materialization step would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace paforge

#endif  // PAFORGE_ERRORS_HPP
