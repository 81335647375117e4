#ifndef MUMFORD_CORPUS_HPP
#define MUMFORD_CORPUS_HPP

#include "mumford/mumford.hpp"
#include "mumford/rng.hpp"

namespace mumford {

/// Random polynomial of exact degree deg with small rational coefficients.
inline Poly<Rational> random_poly(Rng& rng, int deg, long cmax = 4, long dmax = 2) {
  if (deg < 0) return Poly<Rational>();
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = rng.rational(cmax, dmax);
  while (c.back().is_zero()) c.back() = rng.rational(cmax, dmax);
  return Poly<Rational>(std::move(c));
}

inline Poly<Rational> random_monic(Rng& rng, int deg, long cmax = 4, long dmax = 2) {
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = rng.rational(cmax, dmax);
  c.back() = Rational(1);
  return Poly<Rational>(std::move(c));
}

/// Random polynomial of degree <= bound (possibly zero when allow_zero).
inline Poly<Rational> random_poly_upto(Rng& rng, int bound, long cmax = 4,
                                       long dmax = 2, bool allow_zero = false) {
  if (bound < 0) return Poly<Rational>();
  std::vector<Rational> c(static_cast<std::size_t>(bound) + 1);
  for (auto& v : c) v = rng.rational(cmax, dmax);
  Poly<Rational> p(std::move(c));
  if (!allow_zero && p.is_zero()) return Poly<Rational>{Rational(1)};
  return p;
}

/// A random point of M_g; regular with overwhelming probability, retried
/// until it is.
inline MumfordMatrix<Rational> random_regular_point(int g, Rng& rng) {
  if (g == 0)
    return MumfordMatrix<Rational>(0, Poly<Rational>{Rational(1)}, Poly<Rational>(),
                                   Poly<Rational>{rng.rational(4, 2), Rational(1)});
  for (int attempt = 0; attempt < 64; ++attempt) {
    MumfordMatrix<Rational> a(g, random_monic(rng, g), random_poly_upto(rng, g - 1),
                              random_monic(rng, g + 1));
    if (rho_of_matrix(a).rho == 0) return a;
  }
  throw std::logic_error("random_regular_point: could not draw a regular point");
}

/// A point with prescribed non-regularity degree, built as mu_P of a regular
/// point of lower order (the gcd of p*A is exactly p when A is regular).
inline MumfordMatrix<Rational> random_point_with_rho(int g, int rho, Rng& rng) {
  if (rho < 0 || rho > g) throw std::invalid_argument("random_point_with_rho: bad rho");
  const MumfordMatrix<Rational> base = random_regular_point(g - rho, rng);
  if (rho == 0) return base;
  return mu_P(random_monic(rng, rho), base);
}

}  // namespace mumford

#endif  // MUMFORD_CORPUS_HPP
