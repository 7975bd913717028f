// pa_forge: search, build, verify and reproduce permutation arrays.
//
// Exit codes: 0 success, 1 verification or reproduction failure, 2 usage
// error. PA_FORGE_THREADS is the fallback for --threads.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "paforge/bounds.hpp"
#include "paforge/errors.hpp"
#include "paforge/field.hpp"
#include "paforge/groups.hpp"
#include "paforge/pa_io.hpp"
#include "paforge/pam.hpp"
#include "paforge/parallel.hpp"
#include "paforge/sfp.hpp"
#include "paforge/version.hpp"

namespace {

using nlohmann::json;
using namespace paforge;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

json query_json(const SfpQuery& q) {
  return {{"s", q.s}, {"t", q.t}, {"a", q.a}, {"b", q.b}};
}

struct SfpArgs {
  std::uint32_t q = 0;
  int k = -1;
  std::string variant = "q";
  int s = -1;
  int t = -1;
  int a = 0;
  int b = 0;
  std::string emit;
  int threads = 0;
};

int run_sfp(const SfpArgs& args) {
  const Field field = Field::of_order(args.q);
  const Variant variant = parse_variant(args.variant);
  const bool explicit_budget = args.s >= 0 || args.t >= 0;
  if (explicit_budget == (args.k >= 0)) {
    throw UsageError("give either --k or both --s and --t");
  }

  SfpQuery chosen;
  std::uint64_t count = 0;
  double elapsed = 0.0;
  SfpResult result;
  if (explicit_budget) {
    if (args.s < 0 || args.t < 0) throw UsageError("--s and --t go together");
    chosen = {args.q, variant, args.s, args.t, args.a, args.b};
    chosen.validate();
    result = sfp_enumerate_fast(field, chosen, args.threads);
    count = result.count;
    elapsed = result.elapsed_ms;
  } else {
    const BestCount best = sfp_best_count(field, args.k, variant, args.threads);
    chosen = best.argmax;
    count = best.count;
    elapsed = best.elapsed_ms;
  }

  const json manifest = {{"q", args.q},
                         {"variant", to_string(variant)},
                         {"k", chosen.s + chosen.t},
                         {"s", chosen.s},
                         {"t", chosen.t},
                         {"a", chosen.a},
                         {"b", chosen.b},
                         {"count", count},
                         {"guaranteed_distance", chosen.guaranteed_distance()},
                         {"length", chosen.length()},
                         {"argmax", query_json(chosen)},
                         {"elapsed_ms", elapsed},
                         {"tool_version", kToolVersion}};
  std::cout << manifest.dump() << '\n';

  if (!args.emit.empty()) {
    if (!explicit_budget) result = sfp_enumerate_fast(field, chosen, args.threads);
    write_pa_file(args.emit, build_pa(result, args.threads));
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string in;
  std::string mode = "full";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  int threads = 0;
};

int run_verify(const VerifyArgs& args) {
  const PaDocument doc = read_pa_file(args.in);
  VerifyOptions options;
  options.mode = args.mode == "full" ? VerifyMode::kFull : VerifyMode::kSampled;
  options.sample_pairs = args.samples;
  options.seed = args.seed;
  options.threads = args.threads;
  const VerifyReport report = min_distance(doc.rows, doc.header.claimed_distance, options);
  json out = report_to_json(report);
  out["n"] = doc.header.n;
  out["M"] = doc.header.m;
  out["provenance"] = doc.header.provenance;
  std::cout << out.dump() << '\n';
  if (!report.pass) {
    std::cerr << "violation: rows " << report.witness.first << " and " << report.witness.second
              << " are at distance " << report.min_observed << " < " << report.claimed_distance
              << '\n';
    return kExitFail;
  }
  return kExitOk;
}

struct GroupArgs {
  std::string name;
  std::uint32_t q = 0;
  unsigned d = 0;
  unsigned m = 0;
  std::string data_dir;
  std::string emit;
  std::string mode = "auto";
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  int threads = 0;
};

constexpr std::uint64_t kSharpCheckCap = 1ull << 20;

int run_group(const GroupArgs& args) {
  const PermGroup group = make_named(args.name, {args.q, args.d, args.m, args.data_dir});
  const std::uint64_t order = group_order(group);

  DegreeOptions options;
  options.trials = args.trials;
  options.seed = args.seed;
  options.threads = args.threads;
  if (args.mode == "exact") {
    options.mode = DegreeMode::kExact;
  } else if (args.mode == "sampled") {
    options.mode = DegreeMode::kSampled;
  } else {
    options.mode = order <= options.cap ? DegreeMode::kExact : DegreeMode::kSampled;
  }
  const GroupFacts facts = minimal_degree(group, options);
  const std::size_t n = group.degree();
  const std::size_t d = facts.minimal_degree == 0 ? n : facts.minimal_degree;

  json out = {{"name", group.name()},
              {"degree", n},
              {"order", facts.order},
              {"minimal_degree", facts.minimal_degree},
              {"fixity", facts.fixity},
              {"mode", facts.exact ? "exact" : "sampled"},
              {"elements_examined", facts.elements_examined},
              {"pa", {n, facts.order, d}}};
  if (!facts.exact) out["note"] = "sampled minimal degree is an upper bound, not proof";

  const bool materialize = !args.emit.empty() || (facts.exact && facts.order <= kSharpCheckCap);
  if (materialize) {
    const PermArray pa = group_to_pa(group, facts, options.cap, !facts.exact);
    const int k = static_cast<int>(n - d + 1);
    out["sharply_transitive_k"] = k;
    out["sharply_transitive"] = is_sharply_k_transitive(pa, k);
    if (!args.emit.empty()) write_pa_file(args.emit, pa);
  }
  std::cout << out.dump() << '\n';
  std::cout << "(" << n << ", " << facts.order << ", " << d << ")";
  if (out.contains("sharply_transitive")) {
    std::cout << ", sharply " << out["sharply_transitive_k"].get<int>()
              << "-transitive: " << (out["sharply_transitive"].get<bool>() ? "yes" : "no");
  }
  std::cout << '\n';
  return kExitOk;
}

struct BoundsArgs {
  bool reproduce = false;
  std::string out = "csv";
  bool skip_slow = false;
  int threads = 0;
};

int run_bounds(const BoundsArgs& args) {
  if (!args.reproduce) throw UsageError("bounds needs --reproduce");
  BoundsOptions options;
  options.skip_slow = args.skip_slow;
  options.threads = args.threads;
  const bool csv = args.out == "csv";
  if (csv) write_bounds_csv_header(std::cout);
  options.on_record = [&](const BoundRecord& r) {
    if (csv) {
      write_bounds_csv_row(std::cout, r);
      std::cout.flush();
    }
    std::cerr << r.construction << ": " << r.detail << " (" << r.elapsed_ms / 1000.0 << " s)\n";
  };
  const auto records = reproduce_bounds(options);
  if (!csv) {
    json rows = json::array();
    for (const BoundRecord& r : records) {
      rows.push_back({{"n", r.n},
                      {"d", r.d},
                      {"size", r.size},
                      {"construction", r.construction},
                      {"verification", to_string(r.verification)},
                      {"paper_value", r.paper_value},
                      {"match", r.match},
                      {"detail", r.detail},
                      {"elapsed_ms", r.elapsed_ms}});
    }
    std::cout << rows.dump(2) << '\n';
  }
  for (const BoundRecord& r : records) {
    if (!r.match) return kExitFail;
  }
  return kExitOk;
}

struct GridArgs {
  std::vector<std::uint32_t> qs{5, 7, 11, 13};
  int k_max = 3;
  std::string variant = "both";
  int threads = 0;
};

int run_grid(const GridArgs& args) {
  std::vector<Variant> variants;
  if (args.variant == "both" || args.variant == "q") variants.push_back(Variant::kLengthQ);
  if (args.variant == "both" || args.variant == "q+1") variants.push_back(Variant::kLengthQPlus1);
  if (variants.empty()) throw UsageError("--variant must be q, q+1 or both");
  std::cout << "q,k,variant,n,d,count,s,t,a,b,elapsed_ms\n";
  for (std::uint32_t q : args.qs) {
    const Field field = Field::of_order(q);
    for (int k = 1; k <= args.k_max; ++k) {
      for (Variant v : variants) {
        if (sfp_candidate_queries(q, k, v).empty()) continue;
        const BestCount best = sfp_best_count(field, k, v, args.threads);
        const SfpQuery& a = best.argmax;
        std::cout << q << ',' << k << ',' << to_string(v) << ',' << a.length() << ','
                  << a.guaranteed_distance() << ',' << best.count << ',' << a.s << ',' << a.t
                  << ',' << a.a << ',' << a.b << ',' << best.elapsed_ms << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation arrays from fractional polynomials and permutation groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  SfpArgs sfp;
  auto* sfp_cmd = app.add_subcommand("sfp", "search an SFP family and print its manifest");
  sfp_cmd->add_option("--q", sfp.q, "field order")->required();
  sfp_cmd->add_option("--k", sfp.k, "total degree budget s+t (maximize over splits)");
  sfp_cmd->add_option("--variant", sfp.variant, "q or q+1")->check(CLI::IsMember({"q", "q+1"}));
  sfp_cmd->add_option("--s", sfp.s, "numerator budget");
  sfp_cmd->add_option("--t", sfp.t, "denominator budget");
  sfp_cmd->add_option("--a", sfp.a, "numerator slack (q+1 only)");
  sfp_cmd->add_option("--b", sfp.b, "denominator slack (q+1 only)");
  sfp_cmd->add_option("--emit", sfp.emit, "write the constructed PA to this file");
  sfp_cmd->add_option("--threads", sfp.threads, "worker threads (0: PA_FORGE_THREADS or all)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check the minimum distance of a PA file");
  verify_cmd->add_option("--in", verify.in, "PA file")->required();
  verify_cmd->add_option("--mode", verify.mode, "full or sample")
      ->check(CLI::IsMember({"full", "sample"}));
  verify_cmd->add_option("--samples", verify.samples, "pairs drawn in sample mode");
  verify_cmd->add_option("--seed", verify.seed, "sampling seed");
  verify_cmd->add_option("--threads", verify.threads, "worker threads");

  GroupArgs group;
  auto* group_cmd = app.add_subcommand("group", "facts about a named permutation group");
  group_cmd->add_option("--name", group.name,
                        "agl1, pgl2, agl, sym, sym_pairs, mathieu22, mathieu23, mathieu24")
      ->required();
  group_cmd->add_option("--q", group.q, "field order");
  group_cmd->add_option("--d", group.d, "dimension (agl)");
  group_cmd->add_option("--m", group.m, "points (sym, sym_pairs)");
  group_cmd->add_option("--data-dir", group.data_dir, "directory holding groups/*.txt");
  group_cmd->add_option("--emit", group.emit, "write the group as a PA file");
  group_cmd->add_option("--mode", group.mode, "auto, exact or sampled")
      ->check(CLI::IsMember({"auto", "exact", "sampled"}));
  group_cmd->add_option("--trials", group.trials, "random words in sampled mode");
  group_cmd->add_option("--seed", group.seed, "sampling seed");
  group_cmd->add_option("--threads", group.threads, "worker threads");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "reproduce the published lower bounds");
  bounds_cmd->add_flag("--reproduce", bounds.reproduce, "run every reproduction");
  bounds_cmd->add_option("--out", bounds.out, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bounds_cmd->add_flag("--skip-slow", bounds.skip_slow, "sampled/order-only for the slow rows");
  bounds_cmd->add_option("--threads", bounds.threads, "worker threads");

  GridArgs grid;
  auto* grid_cmd = app.add_subcommand("grid", "best SFP counts over a grid of q and k");
  grid_cmd->add_option("--q", grid.qs, "field orders")->delimiter(',');
  grid_cmd->add_option("--k-max", grid.k_max, "largest s+t");
  grid_cmd->add_option("--variant", grid.variant, "q, q+1 or both")
      ->check(CLI::IsMember({"q", "q+1", "both"}));
  grid_cmd->add_option("--threads", grid.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sfp_cmd) return run_sfp(sfp);
    if (*verify_cmd) return run_verify(verify);
    if (*group_cmd) return run_group(group);
    if (*bounds_cmd) return run_bounds(bounds);
    if (*grid_cmd) return run_grid(grid);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
