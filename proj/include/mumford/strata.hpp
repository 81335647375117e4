#ifndef MUMFORD_STRATA_HPP
#define MUMFORD_STRATA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mumford/dynamics.hpp"
#include "mumford/matrix.hpp"
#include "mumford/mumford.hpp"

namespace mumford {

/// Identifies the fine stratum M_{g, g-deg Q, Q}(h): the fiber points whose
/// exact gcd is q, with i = g - deg q the dimension of the span of the
/// vector fields there.
struct StratumLabel {
  int g;
  int i;
  Poly<Rational> q;
  SpectralPoly<Rational> h;

  StratumLabel(int g_, int i_, Poly<Rational> q_, SpectralPoly<Rational> h_);
};

struct StrataLattice {
  int g = 0;
  SpectralPoly<Rational> h;
  int rho_h = 0;
  std::vector<StratumLabel> labels;         // sorted by (deg q, coefficients)
  std::vector<std::pair<int, int>> edges;   // covering pairs: q_a | q_b strictly
  std::map<int, int> coarse_counts;         // i -> number of fine labels

  explicit StrataLattice(SpectralPoly<Rational> h_) : h(std::move(h_)) {}
};

/// Places a fiber point in its fine stratum; the classifier cross-checks
/// sigma against g - deg gcd and refuses to continue on disagreement.
StratumLabel classify(const MumfordMatrix<Rational>& a, const SpectralPoly<Rational>& h);

/// One label per quadratic divisor of h, covering edges along divisibility.
StrataLattice enumerate_strata(const SpectralPoly<Rational>& h);

/// The constructive sampler: u = Q prod(x - a_j), v = Q * (Lagrange), and
/// w = (h - v^2)/u. Exact mode hunts for rational nodes where h is a perfect
/// square (seeded enumeration of small rationals, bounded budget per node);
/// alternatively the caller supplies (a_j, b_j) pairs with b_j^2 = h(a_j).
MumfordMatrix<Rational> sample_stratum_exact(
    const StratumLabel& label, std::uint64_t seed, int budget = 10000,
    const std::vector<std::pair<Rational, Rational>>& supplied_nodes = {});

/// Float mode: nodes drawn from the real line, square roots taken in C.
MumfordMatrix<Cplx> sample_stratum_float(const StratumLabel& label, std::uint64_t seed,
                                         double eps = kDefaultEpsilon);

struct Decomposition {
  Poly<Rational> q;
  MumfordMatrix<Rational> aprime;
  SpectralPoly<Rational> hprime;
};

/// a = mu_q(aprime) with aprime regular on the maximal stratum of
/// M_{g - deg q}(h / q^2); recomposition is exact.
Decomposition decompose_fiber_point(const MumfordMatrix<Rational>& a,
                                    const SpectralPoly<Rational>& h);

/// The Jacobian of the moment map at a point, stacked as the multiplication
/// rows of w, 2v, u in the 2g+1 wide basis: (3g+1) x (2g+1).
template <typename S>
Mat<S> jacobian_moment(const MumfordMatrix<S>& a) {
  const int g = a.g;
  Mat<S> m = Mat<S>::Zero(3 * g + 1, 2 * g + 1);
  const S two = scalar_traits<S>::one() + scalar_traits<S>::one();
  for (int j = 0; j < g; ++j)
    for (int t = 0; t <= a.w.degree(); ++t) m(j, j + t) = a.w.coeff(t);
  for (int j = 0; j < g; ++j)
    for (int t = 0; t <= a.v.degree_or(-1); ++t) m(g + j, j + t) = two * a.v.coeff(t);
  for (int j = 0; j <= g; ++j)
    for (int t = 0; t <= a.u.degree(); ++t) m(2 * g + j, j + t) = a.u.coeff(t);
  return m;
}

struct StratumCheck {
  StratumLabel label;
  int samples = 0;
  bool rank_law_ok = true;   // rank J_H = 2g+1 - rho
  bool sigma_ok = true;      // sigma = i
  bool round_trip_ok = true; // classify(sample) = label
};

struct SmoothnessReport {
  int g = 0;
  int rho_h = 0;
  std::vector<StratumCheck> strata;
  std::vector<int> singular_label_indices;  // every non-maximal stratum
  bool ok = true;
};

/// Samples every stratum and checks the rank law and dimension statements.
SmoothnessReport smoothness_report(const SpectralPoly<Rational>& h,
                                   int samples_per_stratum, std::uint64_t seed);

}  // namespace mumford

#endif  // MUMFORD_STRATA_HPP
