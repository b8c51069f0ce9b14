#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gaussindex/census.hpp"
#include "gaussindex/errors.hpp"
#include "gaussindex/gauss.hpp"
#include "gaussindex/invariants.hpp"
#include "gaussindex/moves.hpp"
#include "gaussindex/report.hpp"

namespace gaussindex::cli {

namespace {

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string code_or_stdin(const std::string& code, std::istream& in) { return code.empty() ? read_all(in) : code; }

int cmd_compute(const std::string& code, const std::string& format, std::ostream& out) {
  const InvariantReport report = make_report(parse_gauss_code(code));
  if (format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << render_text(report);
  }
  return kOk;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& format, std::ostream& out) {
  const GaussDiagram da = parse_gauss_code(a);
  const GaussDiagram db = parse_gauss_code(b);
  const auto ia = invariant_set(da);
  const auto ib = invariant_set(db);
  const auto differing = differing_invariants(ia, ib);
  const bool distinct = !differing.empty();
  if (format == "json") {
    out << nlohmann::json{{"verdict", distinct ? "DISTINCT" : "INCONCLUSIVE"},
                          {"differing", differing},
                          {"F_a", ia.f.render()},
                          {"F_b", ib.f.render()}}
               .dump(2)
        << '\n';
  } else {
    out << (distinct ? "DISTINCT" : "INCONCLUSIVE") << '\n';
    if (distinct) {
      out << "differing:";
      for (const auto& name : differing) out << ' ' << name;
      out << '\n';
    }
    out << "F(a) = " << ia.f.render() << '\n';
    out << "F(b) = " << ib.f.render() << '\n';
  }
  return distinct ? kDistinct : kOk;
}

int cmd_fuzz(const FuzzOptions& options, const InvariantFunction& invariants, std::ostream& out) {
  const FuzzSummary summary = run_fuzz(options, invariants);
  out << summary.preserved << '/' << summary.total << " preserved\n";
  for (const auto& failure : summary.failures) {
    out << "FAIL case " << failure.case_index << ": " << failure.code << " (" << failure.walk_length
        << "-step walk)\n";
    out << "  changed:";
    for (const auto& name : failure.changed) out << ' ' << name;
    out << "\n  minimized: " << failure.minimized.code << '\n';
    for (const auto& step : failure.minimized.trace) out << "    " << format_step(step) << '\n';
  }
  return summary.failures.empty() ? kOk : kFuzzFailure;
}

struct CensusArgs {
  std::size_t chords = 0;
  std::string where;
  std::string out_prefix;
  unsigned threads = 0;
  bool records = false;
};

int cmd_census(const CensusArgs& args, std::ostream& out) {
  CensusOptions options;
  options.chords = args.chords;
  options.cap = default_census_cap();
  options.threads = args.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : args.threads;
  if (!args.where.empty()) options.where = Predicate::parse(args.where);

  std::ofstream jsonl;
  std::ofstream csv;
  if (!args.out_prefix.empty()) {
    jsonl.open(args.out_prefix + ".jsonl");
    csv.open(args.out_prefix + ".csv");
    if (!jsonl || !csv) throw std::runtime_error("cannot write to " + args.out_prefix + ".*");
    csv << csv_header() << '\n';
  }
  const CensusSummary summary = run_census(options, [&](const CensusRecord& record) {
    if (jsonl.is_open()) {
      jsonl << to_json(record).dump() << '\n';
      csv << to_csv_row(record) << '\n';
    }
    if (args.records) out << to_json(record).dump() << '\n';
  });
  const std::string text = to_json(summary).dump(2);
  if (!args.out_prefix.empty()) {
    std::ofstream(args.out_prefix + ".summary.json") << text << '\n';
  }
  if (!args.records) out << text << '\n';
  return kOk;
}

int cmd_replay(const std::string& code, const std::string& trace_path, std::ostream& out) {
  std::ifstream file(trace_path);
  if (!file) throw std::runtime_error("cannot read trace " + trace_path);
  const GaussDiagram start = parse_gauss_code(code);
  GaussDiagram current = start;
  for (const auto& step : parse_trace(read_all(file))) current = apply_move(current, step);
  const auto changed = differing_invariants(invariant_set(start), invariant_set(current));
  out << "start: " << serialize(start) << '\n';
  out << "end:   " << serialize(current) << '\n';
  out << "F(start) = " << f_invariant(start).render() << '\n';
  out << "F(end)   = " << f_invariant(current).render() << '\n';
  out << (changed.empty() ? "preserved" : "CHANGED") << '\n';
  return changed.empty() ? kOk : kFuzzFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const InvariantFunction& fuzz_invariants) {
  CLI::App app{"Index-type invariants of virtual knots from signed Gauss codes", "gaussindex"};
  app.require_subcommand(1);

  std::string code;
  std::string format = "text";
  auto* compute = app.add_subcommand("compute", "Compute the full invariant report of a Gauss code");
  compute->add_option("code", code, "Signed Gauss code, e.g. O1+O2+U1+U2+ (stdin if omitted)");
  compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string code_a;
  std::string code_b;
  auto* compare = app.add_subcommand("compare", "Compare two Gauss codes by their invariants");
  compare->add_option("a", code_a)->required();
  compare->add_option("b", code_b)->required();
  compare->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  FuzzOptions fuzz_options;
  auto* fuzz = app.add_subcommand("fuzz", "Check invariance under random Reidemeister walks");
  fuzz->add_option("--count", fuzz_options.count, "Number of random diagrams");
  fuzz->add_option("--steps", fuzz_options.steps, "Moves per walk");
  fuzz->add_option("--max-chords", fuzz_options.size_cap, "Chord cap during walks");
  fuzz->add_option("--init-chords", fuzz_options.initial_max_chords, "Maximum chords of the starting diagrams");
  fuzz->add_option("--seed", fuzz_options.seed, "Random seed");

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Tabulate invariants of all diagrams with n chords");
  census->add_option("--chords", census_args.chords, "Number of chords")->required();
  census->add_option("--where", census_args.where, "Filter, e.g. \"W_t=0 && F!=0\"");
  census->add_option("--out", census_args.out_prefix, "Write PATH.jsonl, PATH.csv and PATH.summary.json");
  census->add_option("--threads", census_args.threads, "Worker threads (0 = hardware concurrency)");
  census->add_flag("--records", census_args.records, "Print records as JSON lines instead of the summary");

  auto* bound = app.add_subcommand("bound", "Lower bound for the real crossing number");
  bound->add_option("code", code, "Signed Gauss code (stdin if omitted)");

  std::string trace_path;
  auto* replay = app.add_subcommand("replay", "Apply a move trace to a Gauss code and check invariance");
  replay->add_option("code", code)->required();
  replay->add_option("--trace", trace_path, "Trace file, one move per line")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kOk : kParseError;
  }

  try {
    if (compute->parsed()) return cmd_compute(code_or_stdin(code, in), format, out);
    if (compare->parsed()) return cmd_compare(code_a, code_b, format, out);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_options, fuzz_invariants, out);
    if (census->parsed()) return cmd_census(census_args, out);
    if (bound->parsed()) {
      out << crossing_bound(f_invariant(parse_gauss_code(code_or_stdin(code, in)))) << '\n';
      return kOk;
    }
    if (replay->parsed()) return cmd_replay(code, trace_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const MoveError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const UnknownChordError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kOk;
}

}  // namespace gaussindex::cli
