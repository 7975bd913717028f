#ifndef PAFORGE_PA_IO_HPP
#define PAFORGE_PA_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "paforge/perm_array.hpp"

namespace paforge {

// Text format:
//   PA n=<n> M=<M> d=<claimed> inf=<none|n-1> provenance=<rest of line>
//   followed by M lines of n space-separated integers in [0, n).

struct PaHeader {
  std::size_t n = 0;
  std::size_t m = 0;
  int claimed_distance = 0;
  bool has_infinity = false;
  std::string provenance;
};

/// A parsed file before the distinct-rows check, so that a verifier can
/// report repeated rows as a distance violation.
struct PaDocument {
  PaHeader header;
  RowMatrix rows;
};

/// Throws UsageError on any malformed header or row.
PaDocument parse_pa_text(std::istream& in);
PaDocument read_pa_file(const std::string& path);

/// Strict conversion; throws UsageError on repeated rows.
PermArray to_perm_array(PaDocument doc);

void write_pa_text(std::ostream& out, const PermArray& pa);
void write_pa_file(const std::string& path, const PermArray& pa);
std::string pa_to_text(const PermArray& pa);

nlohmann::json pa_to_json(const PermArray& pa);
PermArray pa_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace paforge

#endif  // PAFORGE_PA_IO_HPP
