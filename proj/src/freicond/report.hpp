// Deterministic report assembly shared by the C API and the CLI: a header
// echoing the run configuration, a human-readable body, an optional timing
// comment, and a final machine-readable "RESULT key=value ..." line.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "freicond/condense.hpp"
#include "freicond/densify.hpp"
#include "freicond/diagonal.hpp"
#include "freicond/freiman.hpp"
#include "freicond/intset.hpp"
#include "freicond/minmodel.hpp"

namespace freicond {

inline constexpr const char* kVersion = "0.1.0";

std::string stop_reason_name(StopReason r);  // target | stall | budget

std::string describe_set(const IntSet& a);     // card=.. env=.. diam=.. ...
std::string set_values_line(const IntSet& a);  // "set: v1 v2 ..."
std::vector<std::string> map_lines(const MapTable& m);

// Fixed 30 significant digits; deterministic for a given value.
std::string big_float_str(const BigFloat& v);
std::string ratio_string(const LogRatio& r);
std::string counterexample_string(const Counterexample& c);

std::vector<std::string> condense_body(const CondenseTrace& trace);
std::vector<std::string> densify_body(const DensifyRun& run,
                                      const Int& eps_num, const Int& eps_den);
std::vector<std::string> diagonal_body(const DiagonalResult& r);
std::vector<std::string> minmodel_body(const MinModelResult& r);

using ResultKv = std::vector<std::pair<std::string, std::string>>;

class ReportBuilder {
 public:
  // Emits "# freicond v<version>" followed by "# config: <config>".
  explicit ReportBuilder(std::string config);

  void line(std::string s);
  void lines(const std::vector<std::string>& ls);
  void comment(const std::string& s);  // "# ..."

  // Assembles the full report; elapsed is appended as a comment before the
  // RESULT line only when with_timing is set.
  std::string build(const ResultKv& result, bool with_timing,
                    std::uint64_t elapsed_ms) const;

 private:
  std::vector<std::string> lines_;
};

}  // namespace freicond
