#include "freicond/unipoly.hpp"

#include <boost/integer/common_factor.hpp>

namespace freicond {

UniPoly::UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::x_pow_plus(std::uint32_t t, const Int& c0) {
  std::vector<Int> c(std::size_t(t) + 1, Int(0));
  c[0] = c0;
  c[t] = 1;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::linear_root(const Int& a) {
  return UniPoly(std::vector<Int>{-a, Int(1)});
}

const Int& UniPoly::leading() const {
  if (coeffs_.empty()) throw internal_error("zero polynomial has no leading");
  return coeffs_.back();
}

Int UniPoly::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) g = boost::integer::gcd(g, abs(c));
  return g;
}

UniPoly UniPoly::primitive_positive() const {
  if (coeffs_.empty()) return {};
  Int g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<Int> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / g;
  return UniPoly(std::move(c));
}

Int UniPoly::eval(const Int& x) const {
  Int acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Int UniPoly::norm1() const {
  Int n = 0;
  for (const Int& c : coeffs_) n += abs(c);
  return n;
}

Int UniPoly::norm2_sq() const {
  Int n = 0;
  for (const Int& c : coeffs_) n += c * c;
  return n;
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) return {};
  std::vector<Int> c(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return UniPoly(std::move(c));
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& rhs) const {
  if (rhs.is_zero()) throw input_error("division by the zero polynomial");
  if (is_zero()) return UniPoly{};
  if (degree() < rhs.degree()) return std::nullopt;
  std::vector<Int> rem = coeffs_;
  std::vector<Int> quot(coeffs_.size() - rhs.coeffs_.size() + 1, Int(0));
  for (std::size_t qi = quot.size(); qi-- > 0;) {
    Int& lead = rem[qi + rhs.coeffs_.size() - 1];
    if (lead % rhs.leading() != 0) return std::nullopt;
    Int f = lead / rhs.leading();
    quot[qi] = f;
    if (f != 0)
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        rem[qi + j] -= f * rhs.coeffs_[j];
  }
  for (const Int& c : rem)
    if (c != 0) return std::nullopt;
  return UniPoly(std::move(quot));
}

}  // namespace freicond
