// slicekit: junta thresholds and slice-function analysis from the command line.
//
// Exit codes: 0 success, 1 negative result (not A-valued, no counterexample,
// verification violations), 2 input or parse error, 3 resource guard.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "slicekit/analysis.hpp"
#include "slicekit/error.hpp"
#include "slicekit/poly_text.hpp"
#include "slicekit/records.hpp"

namespace {

using namespace slicekit;

enum class Format { Human, Records };

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<ValueSet> load_sets(const std::vector<std::string>& args) {
  std::vector<ValueSet> sets;
  for (const auto& arg : args) {
    const auto first = arg.find_first_not_of(" \t");
    if (first != std::string::npos && arg[first] == '{') {
      sets.push_back(ValueSet::parse(arg));
    } else {
      try {
        for (auto& A : parse_value_set_list(read_file(arg))) sets.push_back(std::move(A));
      } catch (const ParseError& e) {
        throw ParseError(arg + ": " + e.what(), e.line(), e.column());
      }
    }
  }
  if (sets.empty()) throw ParseError("no value sets given", 1, 1);
  return sets;
}

std::string poly_source(const std::string& file, const std::string& expr) {
  if (!file.empty() && !expr.empty()) throw Error(ErrorKind::Input, "give either --poly or --expr, not both");
  if (!expr.empty()) return expr;
  if (file.empty()) throw Error(ErrorKind::Input, "a polynomial is required (--poly FILE or --expr TEXT)");
  return read_file(file);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return 2;
    case ErrorKind::Domain: return 1;
    case ErrorKind::Guard: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Junta thresholds and analysis of functions on the slice"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::Human;
  const std::map<std::string, Format> formats{{"human", Format::Human}, {"records", Format::Records}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("human");

  // table
  auto* table = app.add_subcommand("table", "Compute W(A,d), k(A,d), kappa(A,d) for d = 1..dmax");
  std::vector<std::string> set_args;
  int dmax = 5;
  table->add_option("--set", set_args, "Value set like {0,1,3}, or a file with one set per line")->required();
  table->add_option("--dmax", dmax, "Largest degree")->check(CLI::Range(1, 12))->capture_default_str();

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Degree, A-valuedness, sparse form and minimum junta");
  std::string poly_file, poly_expr, a_text;
  int n = 0, k = 0, d = 0, m = 0, bound = 0;
  std::string verify_set = "{0,1}";
  analyze_cmd->add_option("--poly", poly_file, "Polynomial file ('-' for stdin)");
  analyze_cmd->add_option("--expr", poly_expr, "Polynomial text");
  analyze_cmd->add_option("--n", n, "Number of coordinates")->required();
  analyze_cmd->add_option("--k", k, "Slice weight")->required();
  analyze_cmd->add_option("--A", a_text, "Value set");
  analyze_cmd->add_option("--d", d, "Degree for the homogeneous expansion");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Certified non-junta example below the threshold");
  construct_cmd->add_option("--A", a_text, "Value set")->required();
  construct_cmd->add_option("--d", d, "Degree")->required();
  construct_cmd->add_option("--k", k, "Slice weight")->required();
  construct_cmd->add_option("--m", m, "The example is not an (m-1)-junta")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check every A-valued degree-d table");
  verify_cmd->add_option("--n", n, "Number of coordinates")->required();
  verify_cmd->add_option("--k", k, "Slice weight")->required();
  verify_cmd->add_option("--d", d, "Degree")->required();
  verify_cmd->add_option("--A", verify_set, "Value set")->capture_default_str();
  verify_cmd->add_option("--bound", bound, "Junta size bound")->required();

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "Split an A-valued function into Boolean indicators");
  decompose_cmd->add_option("--poly", poly_file, "Polynomial file ('-' for stdin)");
  decompose_cmd->add_option("--expr", poly_expr, "Polynomial text");
  decompose_cmd->add_option("--n", n, "Number of coordinates")->required();
  decompose_cmd->add_option("--k", k, "Slice weight")->required();
  decompose_cmd->add_option("--A", a_text, "Value set")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool records = format == Format::Records;
  try {
    if (*table) {
      const auto rows = build_table(load_sets(set_args), dmax);
      std::cout << (records ? write_table_records(rows) : render_table_human(rows));
      return 0;
    }
    if (*analyze_cmd) {
      const SliceDomain dom(n, k);
      const MultilinearPoly p = parse_poly(poly_source(poly_file, poly_expr), n);
      std::optional<ValueSet> A;
      if (!a_text.empty()) A = ValueSet::parse(a_text);
      const auto report = analyze(p, dom, A, d > 0 ? std::optional<int>(d) : std::nullopt);
      std::cout << (records ? write_analysis_records(report) : render_analysis_human(report));
      return (A && !report.a_valued.ok) ? 1 : 0;
    }
    if (*construct_cmd) {
      const auto bundle = construct_certified(ValueSet::parse(a_text), d, k, m);
      std::cout << (records ? write_construction_records(bundle) : render_construction_human(bundle));
      return bundle.certified() ? 0 : 4;
    }
    if (*verify_cmd) {
      const SliceDomain dom(n, k);
      const auto report = verify_exhaustive(dom, d, ValueSet::parse(verify_set), bound,
                                            [](std::uint64_t done, std::uint64_t total) {
                                              std::cerr << "scanned " << done << " / " << total << " tables\n";
                                            });
      std::cout << (records ? write_verification_records(report) : render_verification_human(report));
      return report.violations.empty() ? 0 : 1;
    }
    if (*decompose_cmd) {
      const SliceDomain dom(n, k);
      const ValueSet A = ValueSet::parse(a_text);
      const SliceTable f = truth_table(parse_poly(poly_source(poly_file, poly_expr), n), dom);
      const auto report = decompose(f, A);
      std::cout << (records ? write_decomposition_records(f, report) : render_decomposition_human(f, report));
      return report.reconstructs && report.all_boolean ? 0 : 4;
    }
  } catch (const Error& e) {
    std::cerr << "slicekit: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}
