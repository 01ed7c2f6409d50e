#include "freicond/report.hpp"

namespace freicond {

std::string stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::target_reached:
      return "target";
    case StopReason::no_strict_decrease:
      return "stall";
    case StopReason::budget:
      return "budget";
  }
  return "unknown";
}

std::string describe_set(const IntSet& a) {
  return "card=" + std::to_string(a.card()) + " env=" + a.env().str() +
         " diam=" + a.diam().str() + " min=" + a.min().str() +
         " max=" + a.max().str();
}

std::string set_values_line(const IntSet& a) {
  std::string s = "set:";
  for (const Int& v : a.values()) s += " " + v.str();
  return s;
}

std::vector<std::string> map_lines(const MapTable& m) {
  std::vector<std::string> out;
  out.reserve(m.size());
  for (std::uint64_t i = 0; i < m.size(); ++i) {
    std::string s;
    const auto& key = m.keys()[i];
    for (std::size_t j = 0; j < key.size(); ++j) {
      if (j) s += ", ";
      s += key[j].str();
    }
    s += " -> " + m.values()[i].str();
    out.push_back(std::move(s));
  }
  return out;
}

std::string big_float_str(const BigFloat& v) {
  return v.str(30, std::ios_base::scientific);
}

std::string ratio_string(const LogRatio& r) {
  return "log(" + r.env.str() + ")/log(" + r.card.str() + ") = " +
         big_float_str(r.value);
}

std::string counterexample_string(const Counterexample& c) {
  std::string s = c.direction == Direction::lost_solution
                      ? "lost_solution at ("
                      : "spurious_solution at (";
  for (std::size_t i = 0; i < c.tuple.size(); ++i) {
    if (i) s += ", ";
    s += c.tuple[i].str();
  }
  return s + ")";
}

namespace {

std::string mode_name(CondenseMode m) {
  switch (m) {
    case CondenseMode::thm31:
      return "thm31";
    case CondenseMode::thm32:
      return "thm32";
    case CondenseMode::greedy:
      return "greedy";
  }
  return "unknown";
}

}  // namespace

std::vector<std::string> condense_body(const CondenseTrace& trace) {
  std::vector<std::string> out;
  out.push_back("input: " + describe_set(trace.initial));
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const CondenseStep& st = trace.steps[i];
    std::string s = "step " + std::to_string(i + 1) + ": mode=" +
                    mode_name(st.mode);
    if (st.pi != 0) s += " pi=" + st.pi.str();
    s += " rho=" + st.rho.str();
    if (st.L != 1) s += " L=" + st.L.str();
    s += " h=" + st.h.str();
    s += " env " + st.env_before.str() + " -> " + st.env_after.str();
    out.push_back(std::move(s));
  }
  out.push_back("final: " + describe_set(trace.final_set));
  out.push_back(set_values_line(trace.final_set));
  out.push_back("composed map:");
  for (auto& l : map_lines(trace.composed)) out.push_back("  " + l);
  return out;
}

std::vector<std::string> densify_body(const DensifyRun& run,
                                      const Int& eps_num, const Int& eps_den) {
  std::vector<std::string> out;
  out.push_back("input: " + describe_set(run.initial));
  for (std::size_t i = 0; i < run.steps.size(); ++i) {
    const DensifyStep& st = run.steps[i];
    std::string primes = "primes:";
    for (const Int& p : st.primes) primes += " " + p.str();
    out.push_back("step " + std::to_string(i + 1) + ": y=" + st.y_used.str() +
                  " card " + std::to_string(st.input.card()) + " -> " +
                  std::to_string(st.output.card()));
    out.push_back("  " + primes);
    out.push_back("  ratio before: " + ratio_string(st.ratio_before));
    out.push_back("  ratio after:  " + ratio_string(st.ratio_after));
    StepConditions c = check_step_conditions(st, eps_num, eps_den);
    out.push_back(std::string("  window condition: ") +
                  (c.cond75 ? "holds" : "fails"));
    out.push_back(std::string("  improvement condition: ") +
                  (c.cond76 ? "holds" : "fails") +
                  " margin=" + big_float_str(c.margin) +
                  " err_bound=" + big_float_str(c.err_bound));
    out.push_back("  env bound: " + st.env_bound.str());
  }
  out.push_back("final: " + describe_set(run.final_set));
  return out;
}

std::vector<std::string> diagonal_body(const DiagonalResult& r) {
  std::vector<std::string> out;
  out.push_back("powers: " + describe_set(r.cert.a_t));
  for (auto& l : condense_body(r.cert.trace)) out.push_back(l);
  out.push_back("lifted roots:");
  for (const DiagonalLift& l : r.lifted)
    out.push_back("  " + format_algnum(l.root) +
                  " ; power: " + l.power.str());
  out.push_back("power map:");
  for (auto& l : map_lines(r.power_map)) out.push_back("  " + l);
  out.push_back("env: " + r.cert.env_value.str() + " (" +
                (r.cert.env_exact ? "exact" : "upper bound") +
                "), theorem bound " + r.cert.env_bound.str());
  out.push_back("degree: " + r.cert.degree_value.str() + ", cap " +
                r.cert.degree_cap.str());
  return out;
}

std::vector<std::string> minmodel_body(const MinModelResult& r) {
  std::vector<std::string> out;
  out.push_back("model: " + describe_set(r.model));
  out.push_back(set_values_line(r.model));
  out.push_back("vertex map:");
  for (auto& l : map_lines(r.map)) out.push_back("  " + l);
  return out;
}

ReportBuilder::ReportBuilder(std::string config) {
  lines_.push_back(std::string("# freicond v") + kVersion);
  lines_.push_back("# config: " + std::move(config));
}

void ReportBuilder::line(std::string s) { lines_.push_back(std::move(s)); }

void ReportBuilder::lines(const std::vector<std::string>& ls) {
  for (const auto& l : ls) lines_.push_back(l);
}

void ReportBuilder::comment(const std::string& s) {
  lines_.push_back("# " + s);
}

std::string ReportBuilder::build(const ResultKv& result, bool with_timing,
                                 std::uint64_t elapsed_ms) const {
  std::string out;
  for (const auto& l : lines_) out += l + '\n';
  if (with_timing)
    out += "# elapsed_ms " + std::to_string(elapsed_ms) + '\n';
  out += "RESULT";
  for (const auto& [k, v] : result) out += " " + k + "=" + v;
  out += '\n';
  return out;
}

}  // namespace freicond
