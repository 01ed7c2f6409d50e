// Command-line front end. Every subcommand reads its inputs from files,
// dispatches through the C API, prints the deterministic report and exits
// with the operation's status code (0 ok, 1 verified negative, 2 budget,
// 3 input, 4 internal). The only nondeterministic output is the elapsed-time
// comment, removed by --no-timing.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "freicond.h"

namespace {

std::string read_file_or_exit(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(FC_ERR_INPUT);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T, typename F>
std::unique_ptr<T, F> parse_or_exit(T* (*parser)(const char*),
                                    const std::string& path, F freer) {
  std::string text = read_file_or_exit(path);
  T* obj = parser(text.c_str());
  if (!obj) {
    std::cerr << "error: " << path << ": " << fc_last_error() << "\n";
    std::exit(FC_ERR_INPUT);
  }
  return std::unique_ptr<T, F>(obj, freer);
}

// The config string echoed into the report header: the exact argument
// vector, so a report identifies the run that produced it.
std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

// capi reports carry no timing; insert the elapsed comment immediately
// before the final RESULT line when timing is enabled.
std::string with_timing(std::string report, std::uint64_t elapsed_ms) {
  auto pos = report.rfind("\nRESULT ");
  std::string line = "# elapsed_ms " + std::to_string(elapsed_ms) + "\n";
  if (pos == std::string::npos) return line + report;
  report.insert(pos + 1, line);
  return report;
}

int emit(int status, fc_result* result, bool timing, std::uint64_t elapsed_ms,
         const std::string& output_path) {
  if (!result) {
    std::cerr << "error: " << fc_last_error() << "\n";
    return status;
  }
  std::string report = fc_result_report(result);
  if (timing) report = with_timing(std::move(report), elapsed_ms);
  fc_result_free(result);
  if (output_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << output_path << "\n";
      return FC_ERR_INPUT;
    }
    out << report;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructive condensation and densification of integer sets"};
  app.require_subcommand(1);
  app.fallthrough();  // shared flags may follow the subcommand

  std::uint64_t budget = 0;
  bool no_timing = false;
  std::string output_path;
  app.add_option("--budget", budget,
                 "cap on evaluation-tuple enumerations (0 = default)");
  app.add_flag("--no-timing", no_timing, "omit the elapsed-time comment");
  app.add_option("--output", output_path, "write the report to a file");

  std::string set_path, system_path, map_path, phi_path;
  std::string mode = "thm32";
  std::string verify_mode = "auto";
  std::uint32_t max_steps = 64;
  bool diagonal = false;
  std::int64_t eps_num = 1, eps_den = 10;
  std::uint32_t s = 2, k = 2;
  bool oracle = false;
  std::uint32_t env_cap = 8;

  auto* condense = app.add_subcommand(
      "condense", "shrink the envelope preserving solution structure");
  condense->add_option("--mode", mode, "thm31, thm32 or greedy")
      ->check(CLI::IsMember({"thm31", "thm32", "greedy"}));
  condense->add_option("--max-steps", max_steps, "iteration cap");
  condense->add_flag("--diagonal", diagonal,
                     "degree-t diagonal pipeline with algebraic lift");
  condense->add_option("set", set_path, "set file")->required();
  condense->add_option("system", system_path, "system file")->required();

  auto* densify = app.add_subcommand(
      "densify", "grow cardinality at bounded envelope cost");
  densify->add_option("--eps-num", eps_num, "improvement epsilon numerator");
  densify->add_option("--eps-den", eps_den, "improvement epsilon denominator");
  densify->add_option("--max-steps", max_steps, "iteration cap");
  densify->add_option("--verify", verify_mode, "auto, full, count or sample")
      ->check(CLI::IsMember({"auto", "full", "count", "sample"}));
  densify->add_option("set", set_path, "set file")->required();
  densify->add_option("system", system_path, "system file")->required();

  auto* count =
      app.add_subcommand("count", "power-sum mean value J_{s,k} of a set");
  count->add_option("--s", s, "tuples per side");
  count->add_option("--k", k, "highest power matched");
  count->add_option("--phi", phi_path,
                    "system of k single-variable weight polynomials");
  count->add_flag("--oracle", oracle, "force the direct 2s-tuple enumeration");
  count->add_option("set", set_path, "set file")->required();

  auto* verify = app.add_subcommand(
      "verify", "check a map preserves the solution set both ways");
  verify->add_option("map", map_path, "map file")->required();
  verify->add_option("set", set_path, "set file")->required();
  verify->add_option("system", system_path, "system file")->required();

  auto* minmodel = app.add_subcommand(
      "minmodel", "exact minimal-envelope model by exhaustive search");
  minmodel->add_option("--env-cap", env_cap, "largest envelope searched");
  minmodel->add_option("set", set_path, "set file")->required();
  minmodel->add_option("system", system_path, "system file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : FC_ERR_INPUT;
  }

  std::string config = join_args(argc, argv);
  auto a = parse_or_exit(fc_intset_parse, set_path, fc_intset_free);

  fc_result* result = nullptr;
  int status = FC_ERR_INTERNAL;
  auto t0 = std::chrono::steady_clock::now();

  if (condense->parsed()) {
    auto p = parse_or_exit(fc_polysystem_parse, system_path,
                           fc_polysystem_free);
    status = diagonal
                 ? fc_op_condense_diagonal(a.get(), p.get(), mode.c_str(),
                                           max_steps, budget, config.c_str(),
                                           &result)
                 : fc_op_condense(a.get(), p.get(), mode.c_str(), max_steps,
                                  budget, config.c_str(), &result);
  } else if (densify->parsed()) {
    auto p = parse_or_exit(fc_polysystem_parse, system_path,
                           fc_polysystem_free);
    status = fc_op_densify(a.get(), p.get(), eps_num, eps_den, max_steps,
                           verify_mode.c_str(), budget, config.c_str(),
                           &result);
  } else if (count->parsed()) {
    if (phi_path.empty()) {
      status = fc_op_count(a.get(), s, k, oracle ? 1 : 0, budget,
                           config.c_str(), &result);
    } else {
      auto phis = parse_or_exit(fc_polysystem_parse, phi_path,
                                fc_polysystem_free);
      status = fc_op_count_phi(a.get(), s, phis.get(), budget, config.c_str(),
                               &result);
    }
  } else if (verify->parsed()) {
    auto m = parse_or_exit(fc_maptable_parse, map_path, fc_maptable_free);
    auto p = parse_or_exit(fc_polysystem_parse, system_path,
                           fc_polysystem_free);
    status = fc_op_verify(m.get(), a.get(), p.get(), budget, config.c_str(),
                          &result);
  } else if (minmodel->parsed()) {
    auto p = parse_or_exit(fc_polysystem_parse, system_path,
                           fc_polysystem_free);
    status = fc_op_minmodel(a.get(), p.get(), env_cap, budget, config.c_str(),
                            &result);
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return emit(status, result, !no_timing,
              static_cast<std::uint64_t>(elapsed), output_path);
}
