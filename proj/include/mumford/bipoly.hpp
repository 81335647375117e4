#ifndef MUMFORD_BIPOLY_HPP
#define MUMFORD_BIPOLY_HPP

#include <map>
#include <stdexcept>
#include <utility>

#include "mumford/poly.hpp"

namespace mumford {

/// Sparse polynomial in two formal parameters x, y. Canonical form: no zero
/// terms stored.
template <typename S>
class BiPoly {
 public:
  using traits = scalar_traits<S>;
  using Key = std::pair<int, int>;  // (x exponent, y exponent)

  BiPoly() = default;

  static BiPoly term(int i, int j, const S& c) {
    BiPoly r;
    r.add_term(i, j, c);
    return r;
  }

  static BiPoly from_x(const Poly<S>& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree_or(-1); ++k) r.add_term(k, 0, p.coeff(k));
    return r;
  }

  static BiPoly from_y(const Poly<S>& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree_or(-1); ++k) r.add_term(0, k, p.coeff(k));
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, S>& terms() const { return terms_; }

  S coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? traits::zero() : it->second;
  }

  /// Coefficient of y^j as a polynomial in x (the formal residue
  /// Res_{y=0} f/y^{j+1} for series already reduced to polynomials).
  Poly<S> coeff_y(int j) const {
    int top = -1;
    for (const auto& [key, c] : terms_)
      if (key.second == j) top = std::max(top, key.first);
    std::vector<S> c(static_cast<std::size_t>(top + 1), traits::zero());
    for (const auto& [key, v] : terms_)
      if (key.second == j) c[static_cast<std::size_t>(key.first)] = v;
    return Poly<S>(std::move(c));
  }

  int degree_y() const {
    int top = -1;
    for (const auto& [key, c] : terms_) top = std::max(top, key.second);
    return top;
  }

  Poly<S> subst_y(const S& val) const {
    Poly<S> out;
    for (int j = 0; j <= degree_y(); ++j) {
      S p = traits::one();
      for (int t = 0; t < j; ++t) p = p * val;
      out = out + p * coeff_y(j);
    }
    return out;
  }

  /// Evaluates on the diagonal y = x.
  Poly<S> subst_y_eq_x() const {
    Poly<S> out;
    for (const auto& [key, c] : terms_)
      out = out + Poly<S>::monomial(key.first + key.second, c);
    return out;
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [key, c] : b.terms_) r.add_term(key.first, key.second, c);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend BiPoly operator*(const S& s, const BiPoly& p) {
    BiPoly r;
    for (const auto& [key, c] : p.terms_) r.add_term(key.first, key.second, s * c);
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(int i, int j, const S& c) {
    if (traits::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(Key{i, j}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  std::map<Key, S> terms_;
};

/// (p(x) - p(y)) / (x - y), computed exactly from the algebraic identity
/// (x^k - y^k)/(x - y) = sum_{a+b=k-1} x^a y^b.
template <typename S>
BiPoly<S> divided_difference(const Poly<S>& p) {
  BiPoly<S> out;
  for (int k = 1; k <= p.degree_or(-1); ++k) {
    const S c = p.coeff(k);
    if (scalar_traits<S>::is_zero(c)) continue;
    for (int a = 0; a < k; ++a) out = out + BiPoly<S>::term(a, k - 1 - a, c);
  }
  return out;
}

/// Coefficient extraction of y^i: the residue Res_{y=0} f(x,y)/y^{i+1} for f
/// already polynomial in y (any Laurent shift is the caller's job).
template <typename S>
Poly<S> formal_residue(const BiPoly<S>& f, int i) {
  if (i < 0) throw std::invalid_argument("formal_residue with negative index");
  return f.coeff_y(i);
}

/// (p(x) - p(y0)) / (x - y0) at a scalar y0: synthetic division, exact.
template <typename S>
Poly<S> divided_difference_at(const Poly<S>& p, const S& y0) {
  if (p.degree_or(-1) < 1) return Poly<S>();
  const int d = p.degree();
  std::vector<S> q(static_cast<std::size_t>(d), scalar_traits<S>::zero());
  q[static_cast<std::size_t>(d - 1)] = p.coeff(d);
  for (int k = d - 2; k >= 0; --k)
    q[static_cast<std::size_t>(k)] =
        p.coeff(k + 1) + y0 * q[static_cast<std::size_t>(k + 1)];
  return Poly<S>(std::move(q));
}

}  // namespace mumford

#endif  // MUMFORD_BIPOLY_HPP
