#ifndef MUMFORD_MUMFORD_HPP
#define MUMFORD_MUMFORD_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mumford/poly.hpp"

namespace mumford {

/// A point of the order-g phase space: the trace-free matrix
/// [[v, u], [w, -v]] with u monic of degree g, deg v <= g-1, w monic of
/// degree g+1. M_0 is the degenerate case u = 1, v = 0, w = x + w_0.
template <typename S>
struct MumfordMatrix {
  int g = 0;
  Poly<S> u, v, w;

  MumfordMatrix(int order, Poly<S> u_, Poly<S> v_, Poly<S> w_)
      : g(order), u(std::move(u_)), v(std::move(v_)), w(std::move(w_)) {
    if (g < 0) throw std::invalid_argument("MumfordMatrix: negative order");
    if (u.is_zero() || u.degree() != g || !u.is_monic())
      throw std::invalid_argument("MumfordMatrix: u must be monic of degree g");
    if (!v.is_zero() && v.degree() > g - 1)
      throw std::invalid_argument("MumfordMatrix: deg v must be < g");
    if (w.is_zero() || w.degree() != g + 1 || !w.is_monic())
      throw std::invalid_argument("MumfordMatrix: w must be monic of degree g+1");
  }
};

/// A monic spectral polynomial of odd degree 2g+1, optionally with a
/// factorization into monic pairwise-coprime blocks (irreducible for every
/// fixture this library ships).
template <typename S>
struct SpectralPoly {
  Poly<S> h;
  std::optional<std::vector<std::pair<Poly<S>, int>>> factors;

  explicit SpectralPoly(Poly<S> h_, decltype(factors) f = std::nullopt)
      : h(std::move(h_)), factors(std::move(f)) {
    if (h.is_zero() || !h.is_monic() || h.degree() % 2 == 0)
      throw std::invalid_argument("SpectralPoly: h must be monic of odd degree");
    if (factors) {
      Poly<S> prod{scalar_traits<S>::one()};
      for (const auto& [f_poly, mult] : *factors) {
        if (f_poly.is_zero() || !f_poly.is_monic() || f_poly.is_constant() || mult < 1)
          throw std::invalid_argument("SpectralPoly: bad factor");
        prod = prod * pow(f_poly, mult);
      }
      if (!(prod == h))
        throw std::invalid_argument("SpectralPoly: factorization does not reconstruct h");
    }
  }

  int genus() const { return (h.degree() - 1) / 2; }
};

/// H(A) = v^2 + u w, monic of degree 2g+1; its coefficients are the h_i.
template <typename S>
SpectralPoly<S> moment_map(const MumfordMatrix<S>& a) {
  return SpectralPoly<S>(a.v * a.v + a.u * a.w);
}

template <typename S>
bool fiber_contains(const SpectralPoly<S>& h, const MumfordMatrix<S>& a,
                    double eps = kDefaultEpsilon) {
  if (h.genus() != a.g) throw std::invalid_argument("fiber_contains: order mismatch");
  return approx_equal(moment_map(a).h, h.h, eps);
}

struct RhoResult {
  int rho;
  Poly<Rational> divisor;  // monic gcd(u, v, w)
};

/// The degree of non-regularity rho(A) = deg gcd(u, v, w), computed both by
/// Euclid and through the stacked-kernel route; any disagreement is a
/// convention bug and throws.
RhoResult rho_of_matrix(const MumfordMatrix<Rational>& a);

/// A = gcd(A) * A' with A' regular of order g - deg gcd.
std::pair<Poly<Rational>, MumfordMatrix<Rational>> regular_part(
    const MumfordMatrix<Rational>& a);

/// mu_P: A -> P*A, an affine embedding raising the order by deg P.
template <typename S>
MumfordMatrix<S> mu_P(const Poly<S>& p, const MumfordMatrix<S>& a) {
  if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("mu_P: p must be monic");
  return MumfordMatrix<S>(a.g + p.degree(), p * a.u, p * a.v, p * a.w);
}

/// All monic Q with Q^2 | h, ordered by divisibility.
struct DivisorLattice {
  std::vector<Poly<Rational>> divisors;  // sorted by (degree, coefficients)
  int rho_h = 0;                         // max degree; exactly one divisor attains it
  Poly<Rational> maximal;

  bool contains(const Poly<Rational>& q) const;
};

/// Rational roots of an exact polynomial (with multiplicities via repeated
/// division), plus the rootless remainder.
std::vector<Rational> rational_roots(const Poly<Rational>& p);

/// Factors h into rational-rooted linear factors plus one rootless block per
/// squarefree multiplicity class. Blocks are squarefree and pairwise coprime;
/// nonlinear blocks are treated as irreducible (full factorization over Q is
/// out of scope).
std::vector<std::pair<Poly<Rational>, int>> auto_factor(const Poly<Rational>& h);

/// Quadratic-divisor lattice of a factored spectral polynomial. Requires a
/// factorization (supplied and verified, or auto-derived).
DivisorLattice quadratic_divisors(const SpectralPoly<Rational>& h);

/// Ensures a factorization is present: keeps a supplied one, otherwise
/// auto-factors.
SpectralPoly<Rational> with_factorization(const SpectralPoly<Rational>& h);

}  // namespace mumford

#endif  // MUMFORD_MUMFORD_HPP
