// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here, in code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mumford/corpus.hpp"
#include "mumford/dynamics.hpp"
#include "mumford/flow.hpp"
#include "mumford/mumford.hpp"
#include "mumford/resultants.hpp"
#include "mumford/rng.hpp"
#include "mumford/strata.hpp"
#include "mumford/verify.hpp"

using namespace mumford;

namespace {

using P = Poly<Rational>;

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" [exception: ") + e.what() + "]";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  criterion %2d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), secs, note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::pair<P, P> planted_pair(Rng& rng, int dmax) {
  const int dc = static_cast<int>(rng.uniform(0, dmax / 2));
  const P c = random_monic(rng, dc, 3, 1);
  const int d1 = static_cast<int>(rng.uniform(std::max(1 - dc, 0), dmax - dc));
  const int d2 = static_cast<int>(rng.uniform(0, dmax - dc));
  return {random_monic(rng, d1, 3, 2) * c, random_poly(rng, d2, 3, 2) * c};
}

std::vector<MumfordMatrix<Rational>> seeded_corpus(std::uint64_t seed, int size) {
  Rng rng(seed);
  std::vector<MumfordMatrix<Rational>> corpus;
  while (static_cast<int>(corpus.size()) < size)
    for (int g = 1; g <= 3 && static_cast<int>(corpus.size()) < size; ++g)
      for (int rho = 0; rho <= g && static_cast<int>(corpus.size()) < size; ++rho)
        corpus.push_back(random_point_with_rho(g, rho, rng));
  return corpus;
}

}  // namespace

int main() {
  const auto suite_start = std::chrono::steady_clock::now();

  criterion(1, "resultant conformance on 500 pairs (exact, < 10 s)", [] {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(20260810);
    bool ok = true;
    for (int t = 0; t < 500; ++t) {
      auto [p, q] = planted_pair(rng, 8);
      const P g = gcd(p, q);
      const int d = g.degree();
      if (gcd_degree_pair(p, q) != d) ok = false;
      const SubresultantReport sub = subresultant_sequence(p, q);
      if (sub.first_nonzero != d) ok = false;
      if (!(sub.gcd_candidate == g)) ok = false;
      for (const auto& [j, rj] : sub.sequence)
        if (j < d && !rj.is_zero()) ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok && secs < 10.0;
  });

  criterion(2, "multi-gcd kernels and chain threshold on 300 tuples", [] {
    Rng rng(20260811);
    bool ok = true;
    for (int t = 0; t < 300; ++t) {
      const int k = static_cast<int>(rng.uniform(3, 4));
      const int dc = static_cast<int>(rng.uniform(0, 2));
      const P c = random_monic(rng, dc, 3, 1);
      std::vector<P> polys;
      for (int s = 0; s < k; ++s) {
        const int deg = static_cast<int>(rng.uniform(s == 0 ? 1 : 0, 6 - dc));
        P f = (s == 0 || s == 2) ? random_monic(rng, deg, 3, 2) : random_poly(rng, deg, 3, 2);
        polys.push_back(f * c);
      }
      P folded = polys.front();
      for (std::size_t s = 1; s < polys.size(); ++s) folded = gcd(folded, polys[s]);
      if (gcd_degree_multi(polys) != folded.degree()) ok = false;
      if (k == 3) {
        int threshold = 0;
        for (int i = 1; i <= std::min(polys[0].degree(), polys[2].degree()); ++i)
          if (resultant_chain_conditions(polys[0], polys[1], polys[2], i)) threshold = i;
        if (threshold != folded.degree()) ok = false;
      }
    }
    return ok;
  });

  criterion(3, "confluent Vandermonde kernels annihilate M_{P,l} (100 cases)", [] {
    Rng rng(20260812);
    bool ok = true;
    for (int t = 0; t < 100; ++t) {
      std::vector<std::pair<Rational, int>> roots;
      const int nroots = static_cast<int>(rng.uniform(1, 3));
      while (static_cast<int>(roots.size()) < nroots) {
        const Rational alpha = rng.rational(3, 2);
        bool fresh = true;
        for (const auto& [r, m] : roots) fresh = fresh && r != alpha;
        if (fresh) roots.emplace_back(alpha, static_cast<int>(rng.uniform(1, 3)));
      }
      P p{Rational(1)};
      int n = 0;
      for (const auto& [alpha, mult] : roots) {
        p = p * pow(P{-alpha, Rational(1)}, mult);
        n += mult;
      }
      const int l = static_cast<int>(rng.uniform(1, 4));
      const auto basis = confluent_vandermonde_kernel(roots, l);
      if (static_cast<int>(basis.size()) != n) ok = false;
      const RMat m = build_mult_matrix(p, l);
      for (const auto& v : basis) {
        const RVec image = m * v;
        for (Eigen::Index r = 0; r < image.size(); ++r)
          if (!image(r).is_zero()) ok = false;
      }
    }
    return ok;
  });

  criterion(4, "Jacobi identity: standard, star, and their sum, g in {1,2,3}", [] {
    bool ok = true;
    for (int g = 1; g <= 3; ++g) {
      const auto std_ps = standard_structure(g);
      const auto star_ps = star_structure(g);
      const auto sum_ps = pencil_sum(std_ps, star_ps);
      const VarTable vars = phase_vars(g);
      const int n = 3 * g + 1;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          const MPoly fa = MPoly::var(vars, a), fb = MPoly::var(vars, b);
          if (!(poisson_bracket(std_ps, fa, fb) == -poisson_bracket(std_ps, fb, fa)))
            ok = false;
          if (!(poisson_bracket(star_ps, fa, fb) == -poisson_bracket(star_ps, fb, fa)))
            ok = false;
          for (int c = b + 1; c < n; ++c) {
            const MPoly fc = MPoly::var(vars, c);
            for (const auto* ps : {&std_ps, &star_ps, &sum_ps})
              if (!jacobi_defect(*ps, fa, fb, fc).is_zero()) ok = false;
          }
        }
    }
    return ok;
  });

  criterion(5, "Lax = Hamiltonian, involutivity, tangency (g in {1,2})", [] {
    bool ok = true;
    for (int g = 1; g <= 2; ++g) {
      const auto std_ps = standard_structure(g);
      const auto star_ps = star_structure(g);
      const auto hs = symbolic_moment_coeffs(g);
      for (int i = 0; i < g; ++i)
        if (!(symbolic_field(g, i) ==
              hamiltonian_field(std_ps, hs[static_cast<std::size_t>(i)])))
          ok = false;
      for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = 0; j < hs.size(); ++j) {
          if (!poisson_bracket(std_ps, hs[i], hs[j]).is_zero()) ok = false;
          if (!poisson_bracket(star_ps, hs[i], hs[j]).is_zero()) ok = false;
        }
      for (int i = 0; i < g; ++i)
        for (const auto& hj : hs)
          if (!lie_derivative(symbolic_field(g, i), hj).is_zero()) ok = false;
    }
    return ok;
  });

  const auto corpus = seeded_corpus(20260813, 200);

  criterion(6, "sigma = g - rho on the 200-point corpus", [&corpus] {
    bool ok = corpus.size() == 200;
    for (const auto& a : corpus) {
      const RhoResult r = rho_of_matrix(a);
      if (sigma_of_matrix(a) != a.g - r.rho) ok = false;
    }
    return ok;
  });

  criterion(7, "pushforward identities (lem1, coco, p48) on 50 pairs", [] {
    Rng rng(20260814);
    bool ok = true;
    for (int t = 0; t < 50; ++t) {
      const int g = static_cast<int>(rng.uniform(1, 2));
      const auto a = random_regular_point(g, rng);
      const P p = (t % 2 == 0)
                      ? P::monomial(static_cast<int>(rng.uniform(1, 2)))
                      : random_monic(rng, static_cast<int>(rng.uniform(1, 2)), 3, 1);
      const PushforwardReport report = pushforward_identity_check(p, a, 4, rng.next());
      if (!report.ok || report.formal_checks != g + p.degree()) ok = false;
      if (t % 2 == 0 && report.shift_checks == 0) ok = false;
    }
    return ok;
  });

  criterion(8, "Jacobian rank law rank J = 2g+1-rho on the corpus", [&corpus] {
    bool ok = true;
    for (const auto& a : corpus)
      if (rank(jacobian_moment(a)) != 2 * a.g + 1 - rho_of_matrix(a).rho) ok = false;
    const MumfordMatrix<Rational> pinned(1, P::x(), P(), P::monomial(2));
    return ok && rank(jacobian_moment(pinned)) == 2;
  });

  criterion(9, "fiber stratification end-to-end on x^3 and x^3(x-1)^2", [] {
    bool ok = true;
    const P x = P::x();
    const P xm1 = x - P{Rational(1)};
    const SpectralPoly<Rational> h1(pow(x, 3));
    const SpectralPoly<Rational> h2(pow(x, 3) * pow(xm1, 2));

    const StrataLattice l1 = enumerate_strata(h1);
    ok = ok && l1.labels.size() == 2 && l1.rho_h == 1;
    ok = ok && static_cast<int>(l1.coarse_counts.size()) == l1.rho_h + 1;

    const StrataLattice l2 = enumerate_strata(h2);
    ok = ok && l2.labels.size() == 4 && l2.rho_h == 2;
    ok = ok && static_cast<int>(l2.coarse_counts.size()) == l2.rho_h + 1;
    ok = ok && l2.coarse_counts.at(2) == 1 && l2.coarse_counts.at(1) == 2 &&
         l2.coarse_counts.at(0) == 1;

    for (const StrataLattice* lattice : {&l1, &l2}) {
      for (std::size_t k = 0; k < lattice->labels.size(); ++k) {
        const StratumLabel& label = lattice->labels[k];
        const auto a = sample_stratum_exact(label, 91 + 13 * k);
        const StratumLabel back = classify(a, lattice->h);
        if (!(back.i == label.i && back.q == label.q)) ok = false;
        const Decomposition dec = decompose_fiber_point(a, lattice->h);
        const auto recomposed = mu_P(dec.q, dec.aprime);
        if (!(recomposed.u == a.u && recomposed.v == a.v && recomposed.w == a.w))
          ok = false;
        if (!(dec.hprime.h * dec.q * dec.q == lattice->h.h)) ok = false;
      }
    }

    // The deepest stratum of h2 is the single pinned point.
    for (const auto& label : l2.labels) {
      if (label.i != 0) continue;
      const auto a = sample_stratum_exact(label, 7);
      if (!(a.u == x * x - x && a.v.is_zero() && a.w == pow(x, 3) - x * x)) ok = false;
    }
    return ok;
  });

  criterion(10, "RK4 conservation: drift <= 1e-8, halving dt gains >= 12x", [] {
    // A regular rational g=2 point, taken into floats. Coefficients sized so
    // the truncation error sits well above roundoff at both step sizes.
    const MumfordMatrix<Rational> a(
        2, P{Rational(5), Rational(3), Rational(1)}, P{Rational(2), Rational(2)},
        P{Rational(7), Rational(3), Rational(2), Rational(1)});
    if (rho_of_matrix(a).rho != 0) return false;
    const MumfordMatrix<Cplx> af(a.g, to_float(a.u), to_float(a.v), to_float(a.w));
    bool ok = true;
    for (int i = 0; i < 2; ++i) {
      const FlowReport coarse = flow_integrate(af, i, 1.0, 1e-3);
      const FlowReport fine = flow_integrate(af, i, 1.0, 5e-4);
      if (!(coarse.max_rel_drift <= 1e-8)) ok = false;
      if (!(coarse.max_rel_drift >= 12.0 * fine.max_rel_drift)) ok = false;
    }
    // The zero-field fixed point stays exactly put.
    const MumfordMatrix<Cplx> fixed(1, Poly<Cplx>{Cplx(0, 0), Cplx(1, 0)}, Poly<Cplx>(),
                                    Poly<Cplx>{Cplx(0, 0), Cplx(0, 0), Cplx(1, 0)});
    const FlowReport still = flow_integrate(fixed, 0, 0.5, 1e-3);
    ok = ok && still.max_rel_drift == 0.0;
    return ok;
  });

  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  std::printf("%s: %d/10 criteria passed in %.1fs\n", failures == 0 ? "OK" : "FAILED",
              10 - failures, total);
  return failures == 0 ? 0 : 1;
}
