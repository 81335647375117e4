#include "mumford/mumford.hpp"

#include <algorithm>
#include <stdexcept>

#include "mumford/resultants.hpp"

namespace mumford {

RhoResult rho_of_matrix(const MumfordMatrix<Rational>& a) {
  const Poly<Rational> d = gcd(gcd(a.u, a.v), a.w);
  const int by_euclid = d.degree();
  const int by_kernel = gcd_degree_multi({a.u, a.v, a.w});
  if (by_euclid != by_kernel)
    throw std::logic_error("rho_of_matrix: Euclid and kernel routes disagree");
  return {by_euclid, d};
}

std::pair<Poly<Rational>, MumfordMatrix<Rational>> regular_part(
    const MumfordMatrix<Rational>& a) {
  const RhoResult r = rho_of_matrix(a);
  MumfordMatrix<Rational> prime(a.g - r.rho, exact_div(a.u, r.divisor),
                                exact_div(a.v, r.divisor), exact_div(a.w, r.divisor));
  return {r.divisor, std::move(prime)};
}

bool DivisorLattice::contains(const Poly<Rational>& q) const {
  return std::find(divisors.begin(), divisors.end(), q) != divisors.end();
}

std::vector<Rational> rational_roots(const Poly<Rational>& p) {
  std::vector<Rational> roots;
  if (p.is_zero() || p.is_constant()) return roots;
  // Clear denominators to an integer polynomial, then run the rational root
  // search over divisor pairs of the trailing and leading coefficients.
  Integer common_den(1);
  for (const auto& c : p.coeffs()) common_den = lcm(common_den, denominator(c));
  std::vector<Integer> ic;
  for (const auto& c : p.coeffs())
    ic.push_back(numerator(c) * (common_den / denominator(c)));
  while (!ic.empty() && ic.back() == 0) ic.pop_back();

  int shift = 0;  // x^shift | p  <=>  0 is a root of multiplicity shift
  while (static_cast<std::size_t>(shift) < ic.size() && ic[static_cast<std::size_t>(shift)] == 0)
    ++shift;
  for (int s = 0; s < shift; ++s) roots.emplace_back(0);
  if (static_cast<std::size_t>(shift) >= ic.size() - 1) return roots;

  auto divisors_of = [](Integer n) {
    n = abs(n);
    std::vector<Integer> ds;
    for (Integer d(1); d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    return ds;
  };
  const Integer a0 = ic[static_cast<std::size_t>(shift)];
  const Integer an = ic.back();
  Poly<Rational> rem = p;
  for (const Integer& num : divisors_of(a0)) {
    for (const Integer& den : divisors_of(an)) {
      if (gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        const Rational cand(sign > 0 ? num : Integer(-num), den);
        while (!rem.is_constant() && rem(cand).is_zero()) {
          roots.push_back(cand);
          rem = exact_div(rem, Poly<Rational>{-cand, Rational(1)});
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::pair<Poly<Rational>, int>> auto_factor(const Poly<Rational>& h) {
  std::vector<std::pair<Poly<Rational>, int>> out;
  for (const auto& [sqfree, mult] : squarefree_decomposition(h)) {
    Poly<Rational> rest = sqfree;
    for (const Rational& root : rational_roots(sqfree)) {
      const Poly<Rational> lin{-root, Rational(1)};
      out.emplace_back(lin, mult);
      rest = exact_div(rest, lin);
    }
    if (!rest.is_constant()) out.emplace_back(monic(rest), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  return out;
}

SpectralPoly<Rational> with_factorization(const SpectralPoly<Rational>& h) {
  if (h.factors) return h;
  return SpectralPoly<Rational>(h.h, auto_factor(h.h));
}

DivisorLattice quadratic_divisors(const SpectralPoly<Rational>& h_in) {
  const SpectralPoly<Rational> h = with_factorization(h_in);
  const auto& factors = *h.factors;

  // Exponent budget floor(mult/2) per factor; enumerate all products.
  std::vector<int> budget;
  for (const auto& [f, mult] : factors) budget.push_back(mult / 2);

  DivisorLattice lattice;
  std::vector<int> exps(factors.size(), 0);
  while (true) {
    Poly<Rational> q{Rational(1)};
    for (std::size_t k = 0; k < factors.size(); ++k)
      q = q * pow(factors[k].first, exps[k]);
    lattice.divisors.push_back(q);
    std::size_t k = 0;
    for (; k < factors.size(); ++k) {
      if (exps[k] < budget[k]) {
        ++exps[k];
        std::fill(exps.begin(), exps.begin() + static_cast<long>(k), 0);
        break;
      }
    }
    if (k == factors.size()) break;
  }
  std::sort(lattice.divisors.begin(), lattice.divisors.end(),
            [](const Poly<Rational>& a, const Poly<Rational>& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.coeffs() < b.coeffs();
            });

  lattice.maximal = Poly<Rational>{Rational(1)};
  for (std::size_t k = 0; k < factors.size(); ++k)
    lattice.maximal = lattice.maximal * pow(factors[k].first, budget[k]);
  lattice.rho_h = lattice.maximal.is_zero() ? 0 : lattice.maximal.degree_or(0);
  return lattice;
}

}  // namespace mumford
