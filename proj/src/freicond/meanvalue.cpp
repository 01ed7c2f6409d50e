#include "freicond/meanvalue.hpp"

#include <map>
#include <numeric>

#include "freicond/solutions.hpp"

namespace freicond {

namespace {

void validate_sk(std::uint32_t s, std::uint32_t k) {
  if (s == 0 || k == 0) throw input_error("s and k must be positive");
  if (s > 16 || k > 16) throw input_error("s and k capped at 16");
}

// pw[e * k + (j-1)] = a[e]^j.
std::vector<Int> power_table(const IntSet& a, std::uint32_t k) {
  std::vector<Int> pw(a.card() * k);
  for (std::uint64_t e = 0; e < a.card(); ++e) {
    Int acc = 1;
    for (std::uint32_t j = 0; j < k; ++j) {
      acc *= a[e];
      pw[e * k + j] = acc;
    }
  }
  return pw;
}

Int tally_squares(const IntSet& a, std::uint32_t s, std::uint32_t k,
                  const std::vector<Int>& val, const Budget& budget,
                  const char* what) {
  const std::uint32_t n = static_cast<std::uint32_t>(a.card());
  budget.charge_tuples(int_pow(Int(n), s), what);
  std::map<std::vector<Int>, Int> tally;
  std::vector<std::uint32_t> idx(s, 0);
  std::vector<Int> moment(k);
  do {
    for (std::uint32_t j = 0; j < k; ++j) moment[j] = 0;
    for (std::uint32_t i = 0; i < s; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        moment[j] += val[std::uint64_t(idx[i]) * k + j];
    ++tally[moment];
  } while (next_index_tuple(idx, n));
  Int j_total = 0;
  for (const auto& [v, cnt] : tally) j_total += cnt * cnt;
  return j_total;
}

}  // namespace

Int count_J(const IntSet& a, std::uint32_t s, std::uint32_t k,
            const Budget& budget) {
  validate_sk(s, k);
  return tally_squares(a, s, k, power_table(a, k), budget,
                       "moment tally enumeration");
}

Int count_J_oracle(const IntSet& a, std::uint32_t s, std::uint32_t k,
                   const Budget& budget) {
  validate_sk(s, k);
  const std::uint32_t n = static_cast<std::uint32_t>(a.card());
  budget.charge_tuples(int_pow(Int(n), 2 * std::uint64_t(s)),
                       "direct 2s-tuple enumeration");
  std::vector<Int> pw = power_table(a, k);
  Int total = 0;
  std::vector<std::uint32_t> idx(2 * std::size_t(s), 0);
  do {
    bool solves = true;
    for (std::uint32_t j = 0; j < k && solves; ++j) {
      Int lhs = 0;
      for (std::uint32_t i = 0; i < s; ++i)
        lhs += pw[std::uint64_t(idx[i]) * k + j];
      for (std::uint32_t i = s; i < 2 * s; ++i)
        lhs -= pw[std::uint64_t(idx[i]) * k + j];
      solves = lhs == 0;
    }
    if (solves) ++total;
  } while (next_index_tuple(idx, n));
  return total;
}

Int count_J_phi(const IntSet& a, std::uint32_t s,
                const std::vector<Poly>& phis, const Budget& budget) {
  validate_sk(s, phis.empty() ? 0 : static_cast<std::uint32_t>(phis.size()));
  const std::uint32_t k = static_cast<std::uint32_t>(phis.size());
  for (const Poly& phi : phis)
    if (phi.nvars() != 1)
      throw input_error("weight polynomials must be in one variable");
  std::vector<Int> val(a.card() * k);
  std::vector<Int> point(1);
  for (std::uint64_t e = 0; e < a.card(); ++e) {
    point[0] = a[e];
    for (std::uint32_t j = 0; j < k; ++j)
      val[e * k + j] = phis[j].eval(point);
  }
  return tally_squares(a, s, k, val, budget, "weighted tally enumeration");
}

IntSet translate_to_zero(const IntSet& a) { return a.translated(-a.min()); }

PolySystem vinogradov_system(std::uint32_t s, std::uint32_t k) {
  validate_sk(s, k);
  std::vector<Poly> polys;
  polys.reserve(k);
  for (std::uint32_t j = 1; j <= k; ++j) {
    std::vector<Term> terms;
    for (std::uint32_t i = 0; i < 2 * s; ++i) {
      std::vector<std::uint32_t> exps(2 * std::size_t(s), 0);
      exps[i] = j;
      terms.push_back(Term{i < s ? Int(1) : Int(-1), std::move(exps)});
    }
    polys.emplace_back(2 * s, std::move(terms));
  }
  return PolySystem(2 * s, std::move(polys));
}

BoundReport bound_report(const IntSet& a, std::uint32_t s, std::uint32_t k,
                         const Int& j, const BigFloat& eps,
                         const Budget& budget) {
  validate_sk(s, k);
  Int card(a.card());
  BoundReport rep;
  rep.lower = int_pow(card, s);
  rep.upper = int_pow(card, 2 * std::uint64_t(s));
  rep.trivial_ok = rep.lower <= j && j <= rep.upper;
  rep.eps = eps;
  // diam^eps * (card^s + card^(2s - k(k+1)/2)); the second exponent may be
  // negative, so everything is evaluated in floating point.
  long long e2 = 2LL * s - (static_cast<long long>(k) * (k + 1)) / 2;
  BigFloat second = pow(BigFloat(card), static_cast<int>(e2));
  rep.envelope = pow(BigFloat(a.diam()), eps) * (BigFloat(rep.lower) + second);
  if (int_pow(card, s) <= budget.max_tuples) {
    std::vector<Int> consecutive;
    for (Int v = 1; v <= card; ++v) consecutive.push_back(v);
    Int cj = count_J(IntSet(std::move(consecutive)), s, k, budget);
    rep.consecutive_cmp = j < cj ? -1 : (j == cj ? 0 : 1);
    rep.consecutive_j = std::move(cj);
  }
  return rep;
}

}  // namespace freicond
