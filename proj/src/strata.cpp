#include "mumford/strata.hpp"

#include <algorithm>
#include <stdexcept>

#include "mumford/rng.hpp"

namespace mumford {

namespace {

bool divides(const Poly<Rational>& a, const Poly<Rational>& b) {
  if (a.is_zero()) return b.is_zero();
  return div_rem(b, a).second.is_zero();
}

}  // namespace

StratumLabel::StratumLabel(int g_, int i_, Poly<Rational> q_, SpectralPoly<Rational> h_)
    : g(g_), i(i_), q(std::move(q_)), h(std::move(h_)) {
  if (h.genus() != g) throw std::invalid_argument("StratumLabel: order mismatch with h");
  if (q.is_zero() || !q.is_monic() || q.degree() != g - i)
    throw std::invalid_argument("StratumLabel: q must be monic of degree g - i");
  if (!divides(q * q, h.h))
    throw std::invalid_argument("StratumLabel: q^2 does not divide h");
}

StratumLabel classify(const MumfordMatrix<Rational>& a, const SpectralPoly<Rational>& h) {
  if (!fiber_contains(h, a))
    throw std::invalid_argument("classify: the point does not lie on the fiber");
  const auto [q, aprime] = regular_part(a);
  (void)aprime;
  const int i = a.g - q.degree();
  if (sigma_of_matrix(a) != i)
    throw std::logic_error("classify: sigma disagrees with g - deg gcd");
  return StratumLabel(a.g, i, q, h);
}

StrataLattice enumerate_strata(const SpectralPoly<Rational>& h_in) {
  const SpectralPoly<Rational> h = with_factorization(h_in);
  const DivisorLattice divisors = quadratic_divisors(h);
  StrataLattice lattice(h);
  lattice.g = h.genus();
  lattice.rho_h = divisors.rho_h;
  for (const auto& q : divisors.divisors) {
    const int i = lattice.g - q.degree_or(0);
    lattice.labels.emplace_back(lattice.g, i, q, h);
    lattice.coarse_counts[i] += 1;
  }
  const std::size_t n = lattice.labels.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto& qa = lattice.labels[a].q;
      const auto& qb = lattice.labels[b].q;
      if (!(qa.degree_or(0) < qb.degree_or(0) && divides(qa, qb))) continue;
      bool covering = true;
      for (std::size_t c = 0; c < n && covering; ++c) {
        if (c == a || c == b) continue;
        const auto& qc = lattice.labels[c].q;
        if (qa.degree_or(0) < qc.degree_or(0) && qc.degree_or(0) < qb.degree_or(0) &&
            divides(qa, qc) && divides(qc, qb))
          covering = false;
      }
      if (covering) lattice.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return lattice;
}

MumfordMatrix<Rational> sample_stratum_exact(
    const StratumLabel& label, std::uint64_t seed, int budget,
    const std::vector<std::pair<Rational, Rational>>& supplied_nodes) {
  const int i = label.i;
  const Poly<Rational>& big_q = label.q;
  const Poly<Rational>& h = label.h.h;
  Rng rng(seed);

  std::vector<Rational> nodes;
  std::vector<Rational> values;  // b_j with b_j^2 = h(a_j)
  if (!supplied_nodes.empty()) {
    if (static_cast<int>(supplied_nodes.size()) != i)
      throw std::invalid_argument("sample_stratum_exact: need exactly i nodes");
    for (const auto& [a, b] : supplied_nodes) {
      if (std::find(nodes.begin(), nodes.end(), a) != nodes.end())
        throw std::invalid_argument("sample_stratum_exact: duplicate node");
      if (big_q(a).is_zero() || h(a).is_zero())
        throw std::invalid_argument("sample_stratum_exact: node collides with Q*h roots");
      if (b * b != h(a))
        throw std::invalid_argument("sample_stratum_exact: b^2 != h(a)");
      nodes.push_back(a);
      values.push_back(b);
    }
  }
  while (static_cast<int>(nodes.size()) < i) {
    bool found = false;
    for (int attempt = 0; attempt < budget; ++attempt) {
      const Rational cand = rng.rational(40, 40);
      if (std::find(nodes.begin(), nodes.end(), cand) != nodes.end()) continue;
      if (big_q(cand).is_zero()) continue;
      const Rational hv = h(cand);
      if (hv.is_zero()) continue;
      const auto root = rational_sqrt(hv);
      if (!root) continue;
      nodes.push_back(cand);
      values.push_back(rng.coin() ? *root : -*root);
      found = true;
      break;
    }
    if (!found)
      throw std::runtime_error(
          "sample_stratum_exact: budget of " + std::to_string(budget) +
          " candidates exhausted hunting a rational square node; supply nodes or "
          "choose a square-friendly h");
  }

  Poly<Rational> u_prime{Rational(1)};
  for (const auto& a : nodes) u_prime = u_prime * Poly<Rational>{-a, Rational(1)};

  std::vector<std::pair<Rational, Rational>> points;
  for (std::size_t j = 0; j < nodes.size(); ++j)
    points.emplace_back(nodes[j], values[j] / big_q(nodes[j]));
  const Poly<Rational> v_prime = lagrange_interpolate(points);

  const Poly<Rational> u = big_q * u_prime;
  const Poly<Rational> v = big_q * v_prime;
  const Poly<Rational> w = exact_div(h - v * v, u);
  MumfordMatrix<Rational> a(label.g, u, v, w);

  if (!fiber_contains(label.h, a))
    throw std::logic_error("sample_stratum_exact: point misses the fiber");
  if (!(classify(a, label.h).q == big_q))
    throw std::logic_error("sample_stratum_exact: classify does not round-trip");
  return a;
}

MumfordMatrix<Cplx> sample_stratum_float(const StratumLabel& label, std::uint64_t seed,
                                         double eps) {
  const int i = label.i;
  const Poly<Cplx> big_q = to_float(label.q);
  const Poly<Cplx> h = to_float(label.h.h);
  Rng rng(seed);

  std::vector<Cplx> nodes;
  for (int attempts = 0; static_cast<int>(nodes.size()) < i; ++attempts) {
    if (attempts > 10000)
      throw std::runtime_error("sample_stratum_float: no clear nodes in range");
    const double cand = rng.real(-2.5, 2.5);
    bool clear = std::abs(big_q(Cplx(cand, 0))) > 0.05 &&
                 std::abs(h(Cplx(cand, 0))) > 1e-6;
    for (const auto& n : nodes) clear = clear && std::abs(n - Cplx(cand, 0)) > 1e-3;
    if (clear) nodes.emplace_back(cand, 0.0);
  }

  Poly<Cplx> u_prime{Cplx(1, 0)};
  for (const auto& a : nodes) u_prime = u_prime * Poly<Cplx>{-a, Cplx(1, 0)};

  std::vector<std::pair<Cplx, Cplx>> points;
  for (const auto& a : nodes) points.emplace_back(a, std::sqrt(h(a)) / big_q(a));
  const Poly<Cplx> v_prime = lagrange_interpolate(points);

  const Poly<Cplx> u = trimmed(big_q * u_prime, eps);
  const Poly<Cplx> v = trimmed(big_q * v_prime, eps);
  auto [w, rem] = div_rem(h - v * v, u);
  if (!approx_equal(rem, Poly<Cplx>(), 1e-6))
    throw std::logic_error("sample_stratum_float: division residue too large");
  MumfordMatrix<Cplx> a(label.g, u, v, trimmed(w, eps));
  if (!fiber_contains(SpectralPoly<Cplx>(h), a, 1e-6))
    throw std::logic_error("sample_stratum_float: point misses the fiber");
  return a;
}

Decomposition decompose_fiber_point(const MumfordMatrix<Rational>& a,
                                    const SpectralPoly<Rational>& h) {
  if (!fiber_contains(h, a))
    throw std::invalid_argument("decompose_fiber_point: point not on the fiber");
  auto [q, aprime] = regular_part(a);
  const Poly<Rational> reduced = exact_div(h.h, q * q);

  // Carry the factorization down when q splits over it; otherwise refactor.
  std::optional<std::vector<std::pair<Poly<Rational>, int>>> factors;
  if (h.factors) {
    std::vector<std::pair<Poly<Rational>, int>> reduced_factors;
    Poly<Rational> rest = q;
    bool split = true;
    for (const auto& [f, mult] : *h.factors) {
      int e = 0;
      while (divides(f, rest)) {
        rest = exact_div(rest, f);
        ++e;
      }
      if (mult - 2 * e < 0) split = false;
      if (mult - 2 * e > 0) reduced_factors.emplace_back(f, mult - 2 * e);
    }
    if (split && rest.is_constant())
      factors = std::move(reduced_factors);
    else
      factors = auto_factor(reduced);
  }
  SpectralPoly<Rational> hprime(reduced, std::move(factors));

  if (!(mu_P(q, aprime).u == a.u) || !fiber_contains(hprime, aprime))
    throw std::logic_error("decompose_fiber_point: recomposition failed");
  return {q, std::move(aprime), std::move(hprime)};
}

SmoothnessReport smoothness_report(const SpectralPoly<Rational>& h,
                                   int samples_per_stratum, std::uint64_t seed) {
  const StrataLattice lattice = enumerate_strata(h);
  SmoothnessReport report;
  report.g = lattice.g;
  report.rho_h = lattice.rho_h;
  for (std::size_t k = 0; k < lattice.labels.size(); ++k) {
    const StratumLabel& label = lattice.labels[k];
    StratumCheck check{label, 0, true, true, true};
    for (int s = 0; s < samples_per_stratum; ++s) {
      const MumfordMatrix<Rational> a =
          sample_stratum_exact(label, seed + 7919 * k + static_cast<std::uint64_t>(s));
      ++check.samples;
      const int rho = rank(jacobian_moment(a));
      if (rho != 2 * label.g + 1 - (label.g - label.i)) check.rank_law_ok = false;
      if (sigma_of_matrix(a) != label.i) check.sigma_ok = false;
      if (!(classify(a, lattice.h).q == label.q)) check.round_trip_ok = false;
    }
    if (label.i < label.g) report.singular_label_indices.push_back(static_cast<int>(k));
    report.ok = report.ok && check.rank_law_ok && check.sigma_ok && check.round_trip_ok;
    report.strata.push_back(std::move(check));
  }
  return report;
}

}  // namespace mumford
