#include "freicond/algnum.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "freicond/intervals.hpp"

namespace freicond {

namespace {

Int binom(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  Int r = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

void validate_algnum_poly(const UniPoly& p) {
  if (p.is_zero()) throw input_error("defining polynomial is zero");
  if (p.leading() <= 0)
    throw input_error("defining polynomial needs a positive leading coefficient");
  if (p.content() != 1)
    throw input_error("defining polynomial must have content 1");
}

// The roots of x^t - b lie on the circle of radius |b|^(1/t) at angles
// m*pi/t; m runs over even residues for b > 0 and odd ones for b < 0,
// normalized into (-t, t].
std::vector<int> circle_points(const Int& b, std::uint32_t t) {
  std::vector<int> ms;
  ms.reserve(t);
  for (std::uint32_t k = 0; k < t; ++k) {
    int raw = static_cast<int>(b > 0 ? 2 * k : 2 * k + 1);
    if (raw > static_cast<int>(t)) raw -= 2 * static_cast<int>(t);
    ms.push_back(raw);
  }
  return ms;
}

int principal_m(const Int& b, std::uint32_t t) {
  if (b > 0) return 0;
  return t % 2 == 1 ? static_cast<int>(t) : 1;
}

// Ascending by real part R*cos(m*pi/t), then by imaginary part: cos is
// strictly decreasing in |m| on [0, t], and conjugate pairs order by the
// sign of m. Exact on the angle numerators.
bool point_less(int m1, int m2) {
  if (std::abs(m1) != std::abs(m2)) return std::abs(m1) > std::abs(m2);
  return m1 < m2;
}

std::uint32_t index_among(std::vector<int> ms, int target) {
  std::sort(ms.begin(), ms.end(), point_less);
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ms[i] == target) return static_cast<std::uint32_t>(i);
  throw internal_error("principal root missing from the circle points");
}

ComplexBox point_box(const Int& abs_b, std::uint32_t t, int m,
                     unsigned bsteps, unsigned terms) {
  RatInterval r = real_root_interval(abs_b, t, bsteps);
  if (m == 0) return {r, RatInterval::point(0)};
  if (m == static_cast<int>(t)) return {-r, RatInterval::point(0)};
  if (2 * std::abs(m) == static_cast<int>(t))
    return {RatInterval::point(0), m > 0 ? r : -r};
  RatInterval x = pi_interval(terms).scaled(Rational(Int(m), Int(t)));
  return {r * cos_interval(x, terms), r * sin_interval(x, terms)};
}

// Owner factor per circle point, by excluding factors whose value box
// separates from zero; a point is resolved once a single factor remains.
// The true owner can never be excluded, so completion certifies ownership.
std::vector<std::size_t> assign_points(const std::vector<UniPoly>& factors,
                                       const Int& b, std::uint32_t t,
                                       const std::vector<int>& ms) {
  const std::size_t f = factors.size();
  std::vector<std::size_t> owner(ms.size(), f);
  std::vector<std::vector<bool>> excluded(ms.size(),
                                          std::vector<bool>(f, false));
  // Start cheap: exact rational series terms grow to thousands of digits at
  // high precision, and the roots of x^t - b are far enough apart that the
  // first round almost always resolves every point. The doubling rounds
  // below keep the worst case covered.
  unsigned bsteps = 16, terms = 5;
  for (unsigned round = 0; round < 6; ++round) {
    bool done = true;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (owner[i] < f) continue;
      ComplexBox z = point_box(abs(b), t, ms[i], bsteps, terms);
      std::size_t remaining = f, last = f;
      for (std::size_t j = 0; j < f; ++j) {
        if (!excluded[i][j] && eval_box(factors[j], z).excludes_zero())
          excluded[i][j] = true;
        if (excluded[i][j])
          --remaining;
        else
          last = j;
      }
      if (remaining == 1)
        owner[i] = last;
      else
        done = false;
    }
    if (done) return owner;
    bsteps *= 2;
    terms *= 2;
  }
  throw budget_error("interval separation rounds", Int(7), Int(6));
}

}  // namespace

AlgNum integer_algnum(const Int& a) {
  return AlgNum{UniPoly::linear_root(a), 0, true};
}

AlgSet::AlgSet(std::vector<AlgNum> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) throw input_error("algebraic set is empty");
  for (const AlgNum& e : elems_) {
    validate_algnum_poly(e.poly);
    if (static_cast<int>(e.root_index) > e.poly.degree() - 1)
      throw input_error("root index out of range for the defining polynomial");
  }
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = i + 1; j < elems_.size(); ++j)
      if (elems_[i].poly == elems_[j].poly &&
          elems_[i].root_index == elems_[j].root_index)
        throw input_error("algebraic set elements must be pairwise distinct");
}

EnvAlgebraic AlgSet::env() const {
  Int v = 0;
  bool exact = true;
  for (const AlgNum& e : elems_) {
    v = std::max(v, e.poly.norm1());
    exact = exact && e.certified_minimal;
  }
  return {v, exact};
}

Int AlgSet::degree_bound() const {
  Int d = 1;
  for (const AlgNum& e : elems_) d *= e.poly.degree();
  return d;
}

EnvAlgebraic env_algebraic(const AlgSet& c) { return c.env(); }

namespace {

// Smallest-degree monic divisor of q (monic, nonzero constant term) whose
// roots lie on the circle of radius <= rhi: coefficient i is bounded by
// binom(d, d-i) * rhi^(d-i), and the constant term divides q(0).
std::optional<UniPoly> find_min_divisor(const UniPoly& q, const Int& rhi,
                                        std::uint64_t& used,
                                        std::uint64_t cap, bool& bailed) {
  const int dq = q.degree();
  Int aq0 = abs(q[0]);
  std::vector<Int> divs;
  for (Int i = 1; i * i <= aq0; ++i) {
    if (++used > cap) {
      bailed = true;
      return std::nullopt;
    }
    if (aq0 % i == 0) {
      divs.push_back(i);
      if (i * i != aq0) divs.push_back(aq0 / i);
    }
  }
  std::sort(divs.begin(), divs.end());
  for (int d = 1; 2 * d <= dq; ++d) {
    std::vector<Int> bound(d);
    for (int i = 0; i < d; ++i)
      bound[i] = binom(d, d - i) * int_pow(rhi, d - i);
    std::vector<Int> r0s;
    for (auto it = divs.rbegin(); it != divs.rend(); ++it)
      if (*it <= bound[0]) r0s.push_back(-*it);
    for (const Int& v : divs)
      if (v <= bound[0]) r0s.push_back(v);
    std::vector<Int> coeff(std::size_t(d) + 1);
    coeff[d] = 1;
    for (const Int& r0 : r0s) {
      coeff[0] = r0;
      for (int i = 1; i < d; ++i) coeff[i] = -bound[i];
      for (;;) {
        if (++used > cap) {
          bailed = true;
          return std::nullopt;
        }
        UniPoly cand{std::vector<Int>(coeff)};
        if (q.divide_exact(cand)) return cand;
        int i = 1;
        while (i < d && coeff[i] == bound[i]) {
          coeff[i] = -bound[i];
          ++i;
        }
        if (i >= d) break;
        ++coeff[i];
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<UniPoly>> factor_power_poly(
    const Int& b, std::uint32_t t, std::uint64_t candidate_cap) {
  if (t == 0) throw input_error("root order must be positive");
  if (b == 0) throw input_error("factorization path needs b != 0");
  UniPoly q = UniPoly::x_pow_plus(t, -b);
  Int rhi = iroot(abs(b), t);
  if (int_pow(rhi, t) != abs(b)) rhi += 1;
  std::vector<UniPoly> out;
  std::uint64_t used = 0;
  bool bailed = false;
  while (q.degree() >= 1) {
    auto d = find_min_divisor(q, rhi, used, candidate_cap, bailed);
    if (bailed) return std::nullopt;
    if (!d) {
      out.push_back(q);
      break;
    }
    out.push_back(*d);
    q = *q.divide_exact(*d);
  }
  std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b2) {
    if (a.degree() != b2.degree()) return a.degree() < b2.degree();
    return a.coeffs() < b2.coeffs();
  });
  return out;
}

AlgNum certify_minimal_tth_root(const Int& b, std::uint32_t t,
                                const Budget& budget) {
  if (t == 0) throw input_error("root order must be positive");
  if (b == 0) return AlgNum{UniPoly(std::vector<Int>{0, 1}), 0, true};
  if (t == 1) return AlgNum{UniPoly::linear_root(b), 0, true};
  if (b > 0) {
    Int c = iroot(b, t);
    if (int_pow(c, t) == b) return AlgNum{UniPoly::linear_root(c), 0, true};
  } else if (t % 2 == 1) {
    Int c = -iroot(-b, t);
    if (int_pow(c, t) == b) return AlgNum{UniPoly::linear_root(c), 0, true};
  }

  std::vector<int> ms = circle_points(b, t);
  const int pm = principal_m(b, t);
  auto factors = factor_power_poly(b, t, budget.prime_candidates);
  if (!factors)
    return AlgNum{UniPoly::x_pow_plus(t, -b), index_among(ms, pm), false};
  if (factors->size() == 1)
    return AlgNum{(*factors)[0], index_among(ms, pm), true};

  std::vector<std::size_t> owner = assign_points(*factors, b, t, ms);
  std::size_t pi = 0;
  while (ms[pi] != pm) ++pi;
  const std::size_t fidx = owner[pi];
  std::vector<int> own_ms;
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (owner[i] == fidx) own_ms.push_back(ms[i]);
  const UniPoly& fmin = (*factors)[fidx];
  if (static_cast<int>(own_ms.size()) != fmin.degree())
    throw internal_error("root assignment count disagrees with the degree");
  if (!UniPoly::x_pow_plus(t, -b).divide_exact(fmin))
    throw internal_error("certified polynomial fails the division check");
  return AlgNum{fmin, index_among(own_ms, pm), true};
}

bool granville_holds(const UniPoly& r, std::uint32_t t, const Int& b) {
  // ||r||_2^2 <= phi^(2t) (1 + b^2) with phi^(2t) = (A + B sqrt5) / 4^t,
  // where (1 + sqrt5)^(2t) = A + B sqrt5.
  Int big_a = 0, big_b = 0;
  for (std::uint32_t j = 0; j <= 2 * t; ++j) {
    Int c = binom(2 * t, j);
    if (j % 2 == 0)
      big_a += c * int_pow(Int(5), j / 2);
    else
      big_b += c * int_pow(Int(5), (j - 1) / 2);
  }
  Int w = 1 + b * b;
  Int x = int_pow(Int(4), t) * r.norm2_sq() - big_a * w;
  if (x <= 0) return true;
  return x * x <= 5 * big_b * big_b * w * w;
}

namespace {

Int parse_strict_int(const std::string& tok) {
  if (tok.empty()) throw input_error("empty integer token");
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) throw input_error("malformed integer: " + tok);
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      throw input_error("malformed integer: " + tok);
  return Int(tok);
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

std::string format_algnum(const AlgNum& a) {
  std::string s = "poly:";
  for (std::size_t i = a.poly.coeffs().size(); i-- > 0;)
    s += " " + a.poly[i].str();
  s += " ; root: " + std::to_string(a.root_index);
  s += " ; minimal: ";
  s += a.certified_minimal ? "yes" : "no";
  return s;
}

AlgNum parse_algnum(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw input_error("algebraic number needs poly, root and minimal fields");
  auto p0 = tokens_of(parts[0]);
  auto p1 = tokens_of(parts[1]);
  auto p2 = tokens_of(parts[2]);
  if (p0.size() < 2 || p0[0] != "poly:")
    throw input_error("expected 'poly:' with coefficients");
  if (p1.size() != 2 || p1[0] != "root:")
    throw input_error("expected 'root: <index>'");
  if (p2.size() != 2 || p2[0] != "minimal:" ||
      (p2[1] != "yes" && p2[1] != "no"))
    throw input_error("expected 'minimal: yes|no'");
  std::vector<Int> coeffs;
  for (std::size_t i = p0.size(); i-- > 1;)
    coeffs.push_back(parse_strict_int(p0[i]));
  AlgNum a{UniPoly(std::move(coeffs)),
           static_cast<std::uint32_t>(
               parse_strict_int(p1[1]).convert_to<std::uint64_t>()),
           p2[1] == "yes"};
  validate_algnum_poly(a.poly);
  if (static_cast<int>(a.root_index) > a.poly.degree() - 1)
    throw input_error("root index out of range for the defining polynomial");
  return a;
}

}  // namespace freicond
