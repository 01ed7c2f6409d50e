#include "freicond.h"

#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "freicond/condense.hpp"
#include "freicond/densify.hpp"
#include "freicond/errors.hpp"
#include "freicond/diagonal.hpp"
#include "freicond/formats.hpp"
#include "freicond/freiman.hpp"
#include "freicond/meanvalue.hpp"
#include "freicond/minmodel.hpp"
#include "freicond/report.hpp"

using namespace freicond;

struct fc_intset {
  IntSet v;
};
struct fc_polysystem {
  PolySystem v;
};
struct fc_maptable {
  MapTable v;
};
struct fc_result {
  ResultKv kv;
  std::string report;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename F>
int guarded(F&& f) {
  try {
    set_error("");
    return f();
  } catch (const budget_error& e) {
    set_error(e.what());
    return FC_ERR_BUDGET;
  } catch (const input_error& e) {
    set_error(e.what());
    return FC_ERR_INPUT;
  } catch (const internal_error& e) {
    set_error(e.what());
    return FC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FC_ERR_INTERNAL;
  }
}

Budget make_budget(uint64_t max_tuples) {
  Budget b;
  if (max_tuples != 0) b.max_tuples = Int(max_tuples);
  return b;
}

CondenseMode parse_mode(const char* mode) {
  std::string m = mode ? mode : "";
  if (m == "thm31") return CondenseMode::thm31;
  if (m == "thm32") return CondenseMode::thm32;
  if (m == "greedy") return CondenseMode::greedy;
  throw input_error("unknown condensation mode: " + m);
}

DensifyVerify parse_verify(const char* v) {
  std::string m = v ? v : "auto";
  if (m == "auto") return DensifyVerify::automatic;
  if (m == "full") return DensifyVerify::full;
  if (m == "count") return DensifyVerify::count;
  if (m == "sample") return DensifyVerify::sample;
  throw input_error("unknown verification mode: " + m);
}

fc_result* finish(ReportBuilder& rb, ResultKv kv) {
  auto* r = new fc_result;
  r->report = rb.build(kv, false, 0);
  r->kv = std::move(kv);
  return r;
}

const char* require(const void* p, const char* what) {
  if (!p) throw input_error(std::string("null ") + what);
  return "";
}

}  // namespace

extern "C" {

const char* fc_last_error(void) { return g_last_error.c_str(); }

fc_intset* fc_intset_parse(const char* text) {
  fc_intset* out = nullptr;
  guarded([&] {
    require(text, "set text");
    out = new fc_intset{parse_intset(text)};
    return FC_OK;
  });
  return out;
}

fc_polysystem* fc_polysystem_parse(const char* text) {
  fc_polysystem* out = nullptr;
  guarded([&] {
    require(text, "system text");
    out = new fc_polysystem{parse_polysystem(text)};
    return FC_OK;
  });
  return out;
}

fc_maptable* fc_maptable_parse(const char* text) {
  fc_maptable* out = nullptr;
  guarded([&] {
    require(text, "map text");
    out = new fc_maptable{parse_maptable(text)};
    return FC_OK;
  });
  return out;
}

void fc_intset_free(fc_intset* s) { delete s; }
void fc_polysystem_free(fc_polysystem* p) { delete p; }
void fc_maptable_free(fc_maptable* m) { delete m; }

const char* fc_result_get(const fc_result* r, const char* key) {
  if (!r || !key) return nullptr;
  for (const auto& [k, v] : r->kv)
    if (k == key) return v.c_str();
  return nullptr;
}

const char* fc_result_report(const fc_result* r) {
  return r ? r->report.c_str() : nullptr;
}

void fc_result_free(fc_result* r) { delete r; }

int fc_op_condense(const fc_intset* a, const fc_polysystem* p,
                   const char* mode, uint32_t max_steps, uint64_t budget,
                   const char* config, fc_result** out) {
  return guarded([&] {
    require(a, "set");
    require(p, "system");
    require(out, "result out-parameter");
    CondenseTrace trace = condense_iterate(a->v, p->v, parse_mode(mode),
                                           max_steps, make_budget(budget));
    ReportBuilder rb(config ? config : "condense");
    rb.lines(condense_body(trace));
    ResultKv kv{{"op", "condense"},
                {"steps", std::to_string(trace.steps.size())},
                {"env_before", trace.initial.env().str()},
                {"env_after", trace.final_set.env().str()},
                {"stop", stop_reason_name(trace.stop_reason)},
                {"iso", "yes"}};
    *out = finish(rb, std::move(kv));
    return FC_OK;
  });
}

int fc_op_condense_diagonal(const fc_intset* a, const fc_polysystem* p,
                            const char* mode, uint32_t max_steps,
                            uint64_t budget, const char* config,
                            fc_result** out) {
  return guarded([&] {
    require(a, "set");
    require(p, "system");
    require(out, "result out-parameter");
    DiagonalResult r = condense_diagonal(a->v, p->v, parse_mode(mode),
                                         max_steps, make_budget(budget));
    ReportBuilder rb(config ? config : "condense --diagonal");
    rb.lines(diagonal_body(r));
    ResultKv kv{{"op", "condense_diagonal"},
                {"t", std::to_string(r.cert.t)},
                {"env", r.cert.env_value.str()},
                {"env_exact", r.cert.env_exact ? "yes" : "no"},
                {"env_bound", r.cert.env_bound.str()},
                {"degree", r.cert.degree_value.str()},
                {"degree_cap", r.cert.degree_cap.str()},
                {"iso", r.cert.iso.yes ? "yes" : "no"}};
    *out = finish(rb, std::move(kv));
    return FC_OK;
  });
}

int fc_op_densify(const fc_intset* a, const fc_polysystem* p, int64_t eps_num,
                  int64_t eps_den, uint32_t max_steps, const char* verify,
                  uint64_t budget, const char* config, fc_result** out) {
  return guarded([&] {
    require(a, "set");
    require(p, "system");
    require(out, "result out-parameter");
    DensifyOptions opts;
    opts.verify = parse_verify(verify);
    opts.budget = make_budget(budget);
    DensifyRun run = densify_iterate(a->v, p->v, Int(eps_num), Int(eps_den),
                                     max_steps, opts);
    ReportBuilder rb(config ? config : "densify");
    rb.lines(densify_body(run, Int(eps_num), Int(eps_den)));
    ResultKv kv{
        {"op", "densify"},
        {"steps", std::to_string(run.steps.size())},
        {"card", std::to_string(run.final_set.card())},
        {"env", run.final_set.env().str()},
        {"target", run.target_reached ? "yes" : "no"}};
    if (run.final_set.card() >= 2)
      kv.emplace_back("ratio",
                      big_float_str(make_log_ratio(run.final_set.env(),
                                                   Int(run.final_set.card()))
                                        .value));
    *out = finish(rb, std::move(kv));
    return FC_OK;
  });
}

int fc_op_count(const fc_intset* a, uint32_t s, uint32_t k, int oracle,
                uint64_t budget, const char* config, fc_result** out) {
  return guarded([&] {
    require(a, "set");
    require(out, "result out-parameter");
    Budget b = make_budget(budget);
    Int j = oracle ? count_J_oracle(a->v, s, k, b) : count_J(a->v, s, k, b);
    BoundReport rep = bound_report(a->v, s, k, j, BigFloat("0.01"), b);
    ReportBuilder rb(config ? config : "count");
    rb.line("input: " + describe_set(a->v));
    rb.line("J = " + j.str());
    rb.line("trivial envelope: " + rep.lower.str() + " <= J <= " +
            rep.upper.str() + (rep.trivial_ok ? " (holds)" : " (violated)"));
    rb.line("asymptotic shape at eps=" + big_float_str(rep.eps) + ": " +
            big_float_str(rep.envelope));
    ResultKv kv{{"op", "count"},
                {"J", j.str()},
                {"lower", rep.lower.str()},
                {"upper", rep.upper.str()},
                {"trivial", rep.trivial_ok ? "yes" : "no"}};
    if (rep.consecutive_j) {
      rb.line("consecutive-set comparison: J({1..card}) = " +
              rep.consecutive_j->str());
      kv.emplace_back("consecutive_J", rep.consecutive_j->str());
      kv.emplace_back("consecutive_cmp", std::to_string(*rep.consecutive_cmp));
    }
    *out = finish(rb, std::move(kv));
    return FC_OK;
  });
}

int fc_op_count_phi(const fc_intset* a, uint32_t s, const fc_polysystem* phis,
                    uint64_t budget, const char* config, fc_result** out) {
  return guarded([&] {
    require(a, "set");
    require(phis, "weight system");
    require(out, "result out-parameter");
    Int j = count_J_phi(a->v, s, phis->v.polys(), make_budget(budget));
    ReportBuilder rb(config ? config : "count --phi");
    rb.line("input: " + describe_set(a->v));
    rb.line("J = " + j.str());
    ResultKv kv{{"op", "count_phi"}, {"J", j.str()}};
    *out = finish(rb, std::move(kv));
    return FC_OK;
  });
}

int fc_op_verify(const fc_maptable* psi, const fc_intset* a,
                 const fc_polysystem* p, uint64_t budget, const char* config,
                 fc_result** out) {
  return guarded([&] {
    require(psi, "map");
    require(a, "set");
    require(p, "system");
    require(out, "result out-parameter");
    Budget b = make_budget(budget);
    IsoVerdict v = psi->v.kind() == MapTable::Kind::single
                       ? is_freiman_iso(psi->v, a->v, p->v, b)
                       : is_tfold_freiman_iso(psi->v, a->v, p->v, b);
    ReportBuilder rb(config ? config : "verify");
    rb.line("input: " + describe_set(a->v));
    ResultKv kv{{"op", "verify"}, {"iso", v.yes ? "yes" : "no"}};
    if (!v.yes) {
      rb.line("counterexample: " + counterexample_string(*v.witness));
      kv.emplace_back("direction",
                      v.witness->direction == Direction::lost_solution
                          ? "lost"
                          : "spurious");
      std::string tup;
      for (const auto& x : v.witness->tuple) {
        if (!tup.empty()) tup += ",";
        tup += x.str();
      }
      kv.emplace_back("counterexample", tup);
    } else {
      rb.line("verdict: isomorphism");
    }
    *out = finish(rb, std::move(kv));
    return v.yes ? FC_OK : FC_VERIFIED_NO;
  });
}

int fc_op_minmodel(const fc_intset* a, const fc_polysystem* p,
                   uint32_t env_cap, uint64_t budget, const char* config,
                   fc_result** out) {
  return guarded([&] {
    require(a, "set");
    require(p, "system");
    require(out, "result out-parameter");
    MinModelResult r = exact_min_model(a->v, p->v, env_cap,
                                       make_budget(budget));
    ReportBuilder rb(config ? config : "minmodel");
    rb.line("input: " + describe_set(a->v));
    rb.lines(minmodel_body(r));
    ResultKv kv{{"op", "minmodel"}, {"env_star", r.env_star.str()}};
    *out = finish(rb, std::move(kv));
    return FC_OK;
  });
}

}  // extern "C"
