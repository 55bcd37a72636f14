// esolve: command-line front end for the 4/n = 1/x + 1/y + 1/z toolkit.
//
// Exit codes: 0 success, 1 usage or environment error, 2 mathematical
// finding (search exhaustion, verification failure, nonzero identity
// residual).

#include "es/identity.hpp"
#include "es/search.hpp"
#include "es/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace es;
using nlohmann::ordered_json;

namespace {

Natural parse_n(const std::string& text) {
  auto n = Natural::from_decimal(text);
  if (!n) throw CLI::ValidationError("'" + text + "' is not a non-negative decimal integer");
  return *n;
}

int run_solve(const std::string& n_text, const std::string& format) {
  Natural n = parse_n(n_text);
  SolveResult r = solve(n);
  if (r.status != SearchStatus::found) {
    std::fprintf(stderr,
                 "no solution found for n=%s within the search window "
                 "(counterexample candidate)\n",
                 n.str().c_str());
    return 2;
  }
  bool ok = verify(n, *r.triple);
  if (format == "json") {
    ordered_json j;
    j["n"] = n.str();
    j["family"] = family_name(r.family);
    j["x"] = r.triple->x.str();
    j["y"] = r.triple->y.str();
    j["z"] = r.triple->z.str();
    j["verified"] = ok;
    j["mordell_hard"] = r.mordell_hard;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("family=%s x=%s y=%s z=%s %s\n", family_name(r.family), r.triple->x.str().c_str(),
                r.triple->y.str().c_str(), r.triple->z.str().c_str(),
                ok ? "verified" : "VERIFY FAILED");
  }
  return ok ? 0 : 2;
}

int run_search(const std::string& n_text, u64 all_cap, const std::string& format) {
  Natural n = parse_n(n_text);
  std::vector<Triple> sols;
  if (all_cap > 0) {
    sols = search_all(n, all_cap);
  } else {
    SearchOutcome r = search_min(n);
    if (r.status != SearchStatus::found) {
      std::fprintf(stderr, "search window exhausted for n=%s\n", n.str().c_str());
      return 2;
    }
    sols.push_back(*r.triple);
  }
  if (sols.empty()) {
    std::fprintf(stderr, "search window exhausted for n=%s\n", n.str().c_str());
    return 2;
  }
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const Triple& t : sols)
      arr.push_back({{"x", t.x.str()}, {"y", t.y.str()}, {"z", t.z.str()}});
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const Triple& t : sols)
      std::printf("x=%s y=%s z=%s\n", t.x.str().c_str(), t.y.str().c_str(), t.z.str().c_str());
  }
  return 0;
}

int run_verify_range(const std::string& lo_text, const std::string& hi_text, unsigned jobs,
                     const std::string& out, const std::string& checkpoint, bool verbose,
                     const std::string& format) {
  Natural lo = parse_n(lo_text), hi = parse_n(hi_text);
  if (hi < lo) throw CLI::ValidationError("range bounds must satisfy lo <= hi");

  std::ofstream out_file;
  if (!out.empty()) {
    out_file.open(out);
    if (!out_file) {
      std::fprintf(stderr, "error: cannot open output file: %s\n", out.c_str());
      return 1;
    }
  }

  RangeOptions opts;
  opts.workers = jobs;
  opts.checkpoint_path = checkpoint;
  const bool want_rows = verbose || format == "csv";  // csv is the per-n format
  const bool csv_to_file = want_rows && format == "csv" && out_file.is_open();
  if (csv_to_file)
    opts.verbose_sink = &out_file;
  else if (want_rows)
    opts.verbose_sink = &std::cout;

  RangeReport r = verify_range(lo, hi, opts);

  std::printf("range [%s, %s]\n", r.lo.str().c_str(), r.hi.str().c_str());
  std::printf("families:");
  for (Family f : kAllFamilies) std::printf(" %s=%llu", family_name(f),
                                            static_cast<unsigned long long>(r.count(f)));
  std::printf("\n");
  std::printf("search=%llu mordell_hard=%llu failures=%zu\n",
              static_cast<unsigned long long>(r.search_count),
              static_cast<unsigned long long>(r.mordell_hard_count), r.failures.size());
  for (const Failure& f : r.failures)
    std::printf("FAILURE n=%s reason=%s\n", f.n.str().c_str(), f.reason.c_str());
  std::printf("wall=%.3fs throughput=%.0f n/s\n", r.wall_time_seconds, r.throughput_per_second);

  if (out_file.is_open() && !csv_to_file) out_file << report_json(r);
  if (out_file.is_open()) {
    out_file.flush();
    if (!out_file) {
      std::fprintf(stderr, "error: write to output file failed: %s\n", out.c_str());
      return 1;
    }
  }
  return r.failures.empty() ? 0 : 2;
}

int run_identity_check(const std::string& table_path, bool dump, const std::string& format,
                       const std::string& out) {
  std::vector<FamilySpec> specs;
  if (table_path.empty()) {
    specs = builtin_specs();
  } else {
    std::ifstream in(table_path);
    if (!in) {
      std::fprintf(stderr, "error: cannot open table file: %s\n", table_path.c_str());
      return 1;
    }
    specs = parse_spec_table(in);
  }

  std::ofstream out_file;
  if (!out.empty()) {
    out_file.open(out);
    if (!out_file) {
      std::fprintf(stderr, "error: cannot open output file: %s\n", out.c_str());
      return 1;
    }
  }
  std::ostream& sink = out_file.is_open() ? static_cast<std::ostream&>(out_file) : std::cout;

  if (dump) {
    write_spec_table(sink, specs);
    return 0;
  }
  bool all_hold = true;
  ordered_json arr = ordered_json::array();
  for (const FamilySpec& s : specs) {
    IdentityVerdict v = check_family(s);
    all_hold = all_hold && v.holds;
    if (format == "json") {
      ordered_json row;
      row["family"] = family_name(s.id);
      row["verdict"] = v.holds ? "holds" : "residual";
      if (!v.holds) row["residual"] = v.residual.str();
      arr.push_back(row);
    } else {
      sink << family_name(s.id) << (v.holds ? " holds" : " residual " + v.residual.str()) << "\n";
    }
  }
  if (format == "json") sink << arr.dump(2) << "\n";
  return all_hold ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and range verifier for 4/n = 1/x + 1/y + 1/z"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "plain";
  unsigned jobs = 0;
  std::string out, checkpoint;
  bool verbose = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--jobs", jobs, "worker threads (default: all cores)")->envname("ES_JOBS");
  app.add_option("--out", out, "write the machine-readable report here");
  app.add_option("--checkpoint", checkpoint, "chunk completion log for resumable runs");
  app.add_flag("--verbose", verbose, "stream per-n outcomes as CSV");

  auto* solve_cmd = app.add_subcommand("solve", "solve one n (closed form or search)");
  std::string solve_n;
  solve_cmd->add_option("n", solve_n, "the denominator, any size")->required();

  auto* search_cmd = app.add_subcommand("search", "enumerate solutions for one n");
  std::string search_n;
  u64 all_cap = 0;
  search_cmd->add_option("n", search_n, "the denominator")->required();
  search_cmd->add_option("--all", all_cap, "list the first CAP solutions instead of the minimum");

  auto* range_cmd = app.add_subcommand("verify-range", "solve and verify every n in [lo, hi]");
  std::string lo_text, hi_text;
  range_cmd->add_option("lo", lo_text)->required();
  range_cmd->add_option("hi", hi_text)->required();

  auto* id_cmd = app.add_subcommand("identity-check", "prove each family formula for all k");
  std::string table_path;
  bool dump_table = false;
  id_cmd->add_option("--table", table_path, "check this formula table instead of the built-ins");
  id_cmd->add_flag("--dump-table", dump_table, "print the formula table and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_n, format);
    if (search_cmd->parsed()) return run_search(search_n, all_cap, format);
    if (range_cmd->parsed())
      return run_verify_range(lo_text, hi_text, jobs, out, checkpoint, verbose, format);
    if (id_cmd->parsed()) return run_identity_check(table_path, dump_table, format, out);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
