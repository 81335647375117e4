#ifndef MUMFORD_POLY_HPP
#define MUMFORD_POLY_HPP

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mumford/scalar.hpp"

namespace mumford {

/// Dense univariate polynomial over a commutative ring S, coefficients stored
/// by ascending degree with exact trailing zeros stripped. The zero
/// polynomial has an empty coefficient vector; degree() refuses to answer for
/// it instead of returning a -1 that could leak into arithmetic.
template <typename S>
class Poly {
 public:
  using traits = scalar_traits<S>;

  Poly() = default;
  explicit Poly(const S& constant) {
    if (!traits::is_zero(constant)) c_.push_back(constant);
  }
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<S> coeffs) : c_(coeffs) { normalize(); }

  static Poly monomial(int k, const S& coeff = traits::one()) {
    if (k < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
    if (traits::is_zero(coeff)) return Poly();
    std::vector<S> c(static_cast<std::size_t>(k) + 1, traits::zero());
    c.back() = coeff;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }

  int degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
  }

  /// Degree with the convention deg 0 = -1, for loop bounds only.
  int degree_or(int fallback) const {
    return c_.empty() ? fallback : static_cast<int>(c_.size()) - 1;
  }

  S coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return traits::zero();
    return c_[static_cast<std::size_t>(k)];
  }

  const S& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  const std::vector<S>& coeffs() const { return c_; }

  bool is_monic() const { return !c_.empty() && c_.back() == traits::one(); }

  bool is_constant() const { return c_.size() <= 1; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> c(std::max(a.c_.size(), b.c_.size()), traits::zero());
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k < a.c_.size()) c[k] = c[k] + a.c_[k];
      if (k < b.c_.size()) c[k] = c[k] + b.c_[k];
    }
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<S> c = c_;
    for (auto& v : c) v = -v;
    Poly r;
    r.c_ = std::move(c);
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> c(a.c_.size() + b.c_.size() - 1, traits::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  friend Poly operator*(const S& s, const Poly& p) {
    std::vector<S> c = p.c_;
    for (auto& v : c) v = s * v;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& p, const S& s) { return s * p; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Horner evaluation.
  S operator()(const S& at) const {
    S acc = traits::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<S> c(c_.size() - 1, traits::zero());
    for (std::size_t k = 1; k < c_.size(); ++k) {
      S mult = traits::zero();
      for (std::size_t t = 0; t < k; ++t) mult = mult + traits::one();
      c[k - 1] = mult * c_[k];
    }
    return Poly(std::move(c));
  }

  std::string str(const std::string& var = "x") const;

 private:
  void normalize() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

/// [p(x)/x^j]_+ : drops the coefficients below degree j and shifts down.
template <typename S>
Poly<S> truncate_div(const Poly<S>& p, int j) {
  if (j < 0) throw std::invalid_argument("truncate_div with negative shift");
  const auto& c = p.coeffs();
  if (static_cast<std::size_t>(j) >= c.size()) return Poly<S>();
  return Poly<S>(std::vector<S>(c.begin() + j, c.end()));
}

/// p mod x^j (the part dropped by truncate_div).
template <typename S>
Poly<S> low_part(const Poly<S>& p, int j) {
  if (j < 0) throw std::invalid_argument("low_part with negative cutoff");
  const auto& c = p.coeffs();
  const std::size_t n = std::min(c.size(), static_cast<std::size_t>(j));
  return Poly<S>(std::vector<S>(c.begin(), c.begin() + n));
}

template <typename S>
Poly<S> shift_up(const Poly<S>& p, int j) {
  if (p.is_zero()) return p;
  std::vector<S> c(static_cast<std::size_t>(j), scalar_traits<S>::zero());
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return Poly<S>(std::move(c));
}

template <typename S>
Poly<S> pow(const Poly<S>& p, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly<S> r{scalar_traits<S>::one()};
  for (int k = 0; k < e; ++k) r = r * p;
  return r;
}

/// Quotient and remainder, deg rem < deg divisor. Field scalars only.
template <typename S>
std::pair<Poly<S>, Poly<S>> div_rem(const Poly<S>& p, const Poly<S>& q) {
  static_assert(scalar_traits<S>::is_field, "div_rem needs a field scalar");
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return {Poly<S>(), Poly<S>()};
  const int dq = q.degree();
  if (p.degree() < dq) return {Poly<S>(), p};
  const S inv_lead = scalar_traits<S>::one() / q.leading();
  std::vector<S> rem(p.coeffs());
  std::vector<S> quot(static_cast<std::size_t>(p.degree() - dq) + 1,
                      scalar_traits<S>::zero());
  for (int k = p.degree() - dq; k >= 0; --k) {
    const S c = rem[static_cast<std::size_t>(k + dq)] * inv_lead;
    if (scalar_traits<S>::is_zero(c)) continue;
    quot[static_cast<std::size_t>(k)] = c;
    for (int t = 0; t <= dq; ++t)
      rem[static_cast<std::size_t>(k + t)] =
          rem[static_cast<std::size_t>(k + t)] - c * q.coeff(t);
  }
  return {Poly<S>(std::move(quot)), Poly<S>(std::move(rem))};
}

template <typename S>
Poly<S> exact_div(const Poly<S>& p, const Poly<S>& q) {
  auto [quot, rem] = div_rem(p, q);
  if (!rem.is_zero()) throw std::domain_error("exact_div with nonzero remainder");
  return quot;
}

template <typename S>
Poly<S> monic(const Poly<S>& p) {
  if (p.is_zero()) throw std::domain_error("monic normalization of zero");
  const S inv = scalar_traits<S>::one() / p.leading();
  return inv * p;
}

/// Monic Euclidean gcd; the oracle for all the resultant machinery.
/// Exact scalars only: float gcd is meaningless and rejected.
inline Poly<Rational> gcd(const Poly<Rational>& p, const Poly<Rational>& q) {
  Poly<Rational> a = p, b = q;
  while (!b.is_zero()) {
    auto [quot, rem] = div_rem(a, b);
    (void)quot;
    a = b;
    b = rem;
  }
  if (a.is_zero()) return a;
  return monic(a);
}

inline Poly<Rational> gcd(const std::vector<Poly<Rational>>& ps) {
  Poly<Rational> g;
  for (const auto& p : ps) g = gcd(g, p);
  return g;
}

/// Lagrange interpolation through pairwise-distinct nodes.
template <typename S>
Poly<S> lagrange_interpolate(const std::vector<std::pair<S, S>>& points) {
  static_assert(scalar_traits<S>::is_field, "interpolation needs a field scalar");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("duplicate interpolation node");
  Poly<S> result;
  for (std::size_t j = 0; j < points.size(); ++j) {
    Poly<S> basis{scalar_traits<S>::one()};
    S denom = scalar_traits<S>::one();
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k == j) continue;
      basis = basis * Poly<S>{-points[k].first, scalar_traits<S>::one()};
      denom = denom * (points[j].first - points[k].first);
    }
    result = result + (points[j].second / denom) * basis;
  }
  return result;
}

/// Yun's squarefree decomposition: p = lc * prod factor_k^mult_k with monic,
/// pairwise-coprime, squarefree factors. Exact scalars only.
inline std::vector<std::pair<Poly<Rational>, int>> squarefree_decomposition(
    const Poly<Rational>& p) {
  if (p.is_zero())
    throw std::domain_error("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<Poly<Rational>, int>> out;
  Poly<Rational> f = monic(p);
  if (f.is_constant()) return out;
  const Poly<Rational> df = f.derivative();
  Poly<Rational> a0 = gcd(f, df);
  Poly<Rational> b = exact_div(f, a0);
  Poly<Rational> c = exact_div(df, a0);
  Poly<Rational> d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    Poly<Rational> ai = gcd(b, d);
    if (!ai.is_constant()) out.emplace_back(ai, i);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
  }
  return out;
}

/// Drops float coefficients that are negligible against the largest one.
inline Poly<Cplx> trimmed(const Poly<Cplx>& p, double eps = kDefaultEpsilon) {
  double top = 0.0;
  for (const auto& c : p.coeffs()) top = std::max(top, std::abs(c));
  const double cut = eps * std::max(1.0, top);
  std::vector<Cplx> c = p.coeffs();
  while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
  return Poly<Cplx>(std::move(c));
}

template <typename S>
bool approx_equal(const Poly<S>& a, const Poly<S>& b, double eps = kDefaultEpsilon) {
  const int top = std::max(a.degree_or(-1), b.degree_or(-1));
  for (int k = 0; k <= top; ++k)
    if (!scalar_traits<S>::approx_equal(a.coeff(k), b.coeff(k), eps)) return false;
  return true;
}

template <typename S>
Poly<Cplx> to_float(const Poly<S>& p) {
  std::vector<Cplx> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    if constexpr (scalar_traits<S>::is_exact)
      c.push_back(to_cplx(v));
    else
      c.push_back(v);
  }
  return Poly<Cplx>(std::move(c));
}

template <typename S>
std::string Poly<S>::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (traits::is_zero(coeff(k))) continue;
    if (!first) os << " + ";
    first = false;
    os << "(";
    if constexpr (std::is_same_v<S, Rational>) {
      os << coeff(k).str();
    } else {
      os << coeff(k);
    }
    os << ")";
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace mumford

#endif  // MUMFORD_POLY_HPP
