#include "freicond/polysystem.hpp"

#include <algorithm>
#include <map>

namespace freicond {

std::uint32_t Term::total_degree() const {
  std::uint32_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

Poly::Poly(std::uint32_t nvars, std::vector<Term> terms) : nvars_(nvars) {
  if (nvars == 0) throw input_error("polynomial needs at least one variable");
  std::map<std::vector<std::uint32_t>, Int> merged;
  for (auto& t : terms) {
    if (t.exps.size() != nvars)
      throw input_error("term exponent count does not match variable count");
    merged[t.exps] += t.coeff;
  }
  for (auto& [e, c] : merged)
    if (c != 0) terms_.push_back(Term{c, e});
  if (terms_.empty()) throw input_error("polynomial is identically zero");
  degree_ = 0;
  for (const auto& t : terms_) degree_ = std::max(degree_, t.total_degree());
}

Int Poly::norm1() const {
  Int n = 0;
  for (const auto& t : terms_) n += abs(t.coeff);
  return n;
}

bool Poly::is_linear() const {
  for (const auto& t : terms_)
    if (t.total_degree() > 1) return false;
  return true;
}

bool Poly::is_homogeneous() const {
  std::uint32_t d = terms_.front().total_degree();
  if (d == 0) return false;
  for (const auto& t : terms_)
    if (t.total_degree() != d) return false;
  return true;
}

std::optional<std::uint32_t> Poly::diagonal_degree() const {
  std::uint32_t t = 0;
  std::vector<bool> seen(nvars_, false);
  for (const auto& term : terms_) {
    std::uint32_t var = 0, nz = 0;
    for (std::uint32_t j = 0; j < nvars_; ++j)
      if (term.exps[j] != 0) {
        ++nz;
        var = j;
      }
    if (nz != 1) return std::nullopt;
    if (seen[var]) return std::nullopt;
    seen[var] = true;
    if (t == 0)
      t = term.exps[var];
    else if (term.exps[var] != t)
      return std::nullopt;
  }
  return t == 0 ? std::nullopt : std::optional<std::uint32_t>(t);
}

Int Poly::coeff_of_var(std::uint32_t j) const {
  for (const auto& t : terms_) {
    if (t.exps[j] == 1 && t.total_degree() == 1) return t.coeff;
  }
  return 0;
}

Int Poly::single_var_coeff(std::uint32_t j) const {
  for (const auto& t : terms_) {
    if (t.exps[j] == 0 || t.total_degree() != t.exps[j]) continue;
    return t.coeff;
  }
  return 0;
}

Int Poly::constant_term() const {
  for (const auto& t : terms_)
    if (t.total_degree() == 0) return t.coeff;
  return 0;
}

Int Poly::eval(const std::vector<Int>& point) const {
  if (point.size() != nvars_)
    throw input_error("evaluation point arity mismatch");
  Int acc = 0;
  for (const auto& t : terms_) {
    Int m = t.coeff;
    for (std::uint32_t j = 0; j < nvars_; ++j)
      if (t.exps[j] != 0) m *= int_pow(point[j], t.exps[j]);
    acc += m;
  }
  return acc;
}

PolySystem::PolySystem(std::uint32_t nvars, std::vector<Poly> polys)
    : nvars_(nvars), polys_(std::move(polys)) {
  if (polys_.empty()) throw input_error("system needs at least one polynomial");
  for (const auto& p : polys_)
    if (p.nvars() != nvars_)
      throw input_error("polynomial arity does not match system arity");
  degree_ = 0;
  norm1_max_ = 0;
  linear_ = true;
  homogeneous_ = true;
  for (const auto& p : polys_) {
    degree_ = std::max(degree_, p.degree());
    Int n = p.norm1();
    if (n > norm1_max_) norm1_max_ = n;
    linear_ = linear_ && p.is_linear();
    homogeneous_ = homogeneous_ && p.is_homogeneous();
  }
  diag_ = polys_.front().diagonal_degree();
  for (std::uint64_t i = 1; diag_ && i < polys_.size(); ++i) {
    auto d = polys_[i].diagonal_degree();
    if (!d || *d != *diag_) diag_ = std::nullopt;
  }
}

bool PolySystem::all_vanish(const std::vector<Int>& point) const {
  for (const auto& p : polys_)
    if (p.eval(point) != 0) return false;
  return true;
}

}  // namespace freicond
