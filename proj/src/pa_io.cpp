#include "paforge/pa_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace paforge {

namespace {

std::size_t parse_count(std::string_view text, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError(std::string("malformed ") + what + " in PA header");
  }
  return value;
}

std::string_view expect_field(std::string_view& rest, std::string_view key) {
  if (rest.substr(0, key.size()) != key) {
    throw UsageError("PA header: expected '" + std::string(key) + "'");
  }
  rest.remove_prefix(key.size());
  const std::size_t space = rest.find(' ');
  if (space == std::string_view::npos) throw UsageError("PA header truncated");
  std::string_view value = rest.substr(0, space);
  rest.remove_prefix(space + 1);
  return value;
}

PaHeader parse_header(const std::string& line) {
  std::string_view rest = line;
  if (rest.substr(0, 3) != "PA ") throw UsageError("missing PA header");
  rest.remove_prefix(3);
  PaHeader h;
  h.n = parse_count(expect_field(rest, "n="), "n");
  h.m = parse_count(expect_field(rest, "M="), "M");
  h.claimed_distance = static_cast<int>(parse_count(expect_field(rest, "d="), "d"));
  const std::string_view inf = expect_field(rest, "inf=");
  if (inf == "none") {
    h.has_infinity = false;
  } else {
    if (h.n == 0 || parse_count(inf, "inf") != h.n - 1) {
      throw UsageError("PA header: inf must be none or n-1");
    }
    h.has_infinity = true;
  }
  if (rest.substr(0, 11) != "provenance=") throw UsageError("PA header: expected 'provenance='");
  h.provenance = std::string(rest.substr(11));
  if (h.n == 0) throw UsageError("PA header: n must be positive");
  return h;
}

}  // namespace

PaDocument parse_pa_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw UsageError("empty PA file");
  PaDocument doc;
  doc.header = parse_header(line);
  const std::size_t n = doc.header.n;
  doc.rows = RowMatrix(n);
  std::vector<std::uint32_t> row(n);
  std::vector<bool> seen(n);
  for (std::size_t r = 0; r < doc.header.m; ++r) {
    if (!std::getline(in, line)) throw UsageError("PA file has fewer rows than M");
    std::istringstream ls(line);
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t i = 0; i < n; ++i) {
      long long v = -1;
      if (!(ls >> v) || v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
        throw UsageError("PA row " + std::to_string(r) + " is not a permutation of 0..n-1");
      }
      seen[static_cast<std::size_t>(v)] = true;
      row[i] = static_cast<std::uint32_t>(v);
    }
    std::string extra;
    if (ls >> extra) throw UsageError("PA row " + std::to_string(r) + " has more than n entries");
    doc.rows.push_back(row);
  }
  while (std::getline(in, line)) {
    if (!line.empty()) throw UsageError("PA file has more rows than M");
  }
  return doc;
}

PaDocument read_pa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return parse_pa_text(in);
}

PermArray to_perm_array(PaDocument doc) {
  return PermArray(std::move(doc.rows), doc.header.claimed_distance,
                   std::move(doc.header.provenance), doc.header.has_infinity);
}

void write_pa_text(std::ostream& out, const PermArray& pa) {
  const std::size_t n = pa.length();
  out << "PA n=" << n << " M=" << pa.size() << " d=" << pa.claimed_distance() << " inf=";
  if (pa.has_infinity()) {
    out << n - 1;
  } else {
    out << "none";
  }
  out << " provenance=" << pa.provenance() << '\n';
  std::string buf;
  for (std::size_t r = 0; r < pa.size(); ++r) {
    buf.clear();
    const auto row = pa.rows().row(r);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) buf.push_back(' ');
      buf += std::to_string(row[i]);
    }
    buf.push_back('\n');
    out << buf;
  }
}

void write_pa_file(const std::string& path, const PermArray& pa) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  write_pa_text(out, pa);
}

std::string pa_to_text(const PermArray& pa) {
  std::ostringstream os;
  write_pa_text(os, pa);
  return os.str();
}

nlohmann::json pa_to_json(const PermArray& pa) {
  nlohmann::json j;
  j["n"] = pa.length();
  j["M"] = pa.size();
  j["d"] = pa.claimed_distance();
  j["inf"] = pa.has_infinity() ? nlohmann::json(pa.length() - 1) : nlohmann::json(nullptr);
  j["provenance"] = pa.provenance();
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < pa.size(); ++r) {
    const auto row = pa.rows().row(r);
    rows.push_back(std::vector<std::uint32_t>(row.begin(), row.end()));
  }
  j["rows"] = std::move(rows);
  return j;
}

PermArray pa_from_json(const nlohmann::json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    RowMatrix rows(n);
    for (const auto& r : j.at("rows")) {
      const auto v = r.get<std::vector<std::uint32_t>>();
      rows.push_back(Permutation(v).images());
    }
    if (rows.rows() != j.at("M").get<std::size_t>()) throw UsageError("JSON PA: M does not match rows");
    const bool inf = !j.at("inf").is_null();
    if (inf && j.at("inf").get<std::size_t>() != n - 1) throw UsageError("JSON PA: inf must be n-1");
    return PermArray(std::move(rows), j.at("d").get<int>(), j.at("provenance").get<std::string>(), inf);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed JSON PA: ") + e.what());
  }
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["mode"] = to_string(report.mode);
  j["pairs_checked"] = report.pairs_checked;
  j["min_observed"] = report.min_observed;
  j["witness"] = {report.witness.first, report.witness.second};
  j["claimed_distance"] = report.claimed_distance;
  j["pass"] = report.pass;
  j["exhaustive"] = report.exhaustive;
  if (report.mode == VerifyMode::kSampled) {
    j["note"] = "sampled pairs only; a pass is evidence, not proof";
  }
  return j;
}

}  // namespace paforge
