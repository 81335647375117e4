#include "mumford/verify.hpp"

#include <algorithm>

#include "mumford/corpus.hpp"
#include "mumford/dynamics.hpp"
#include "mumford/mumford.hpp"
#include "mumford/resultants.hpp"
#include "mumford/rng.hpp"
#include "mumford/strata.hpp"

namespace mumford {

CheckCount& VerifyReport::at(const std::string& tag) {
  for (auto& c : checks)
    if (c.tag == tag) return c;
  checks.push_back(CheckCount{tag, 0, 0});
  return checks.back();
}

void VerifyReport::tally(const std::string& tag, bool passed) {
  auto& c = at(tag);
  if (passed)
    ++c.pass;
  else
    ++c.fail;
}

void VerifyReport::merge(const VerifyReport& other) {
  for (const auto& c : other.checks) {
    auto& mine = at(c.tag);
    mine.pass += c.pass;
    mine.fail += c.fail;
  }
}

namespace {

// A pair (p monic, q) of degree <= dmax sharing a planted common factor of
// random degree (possibly trivial).
std::pair<Poly<Rational>, Poly<Rational>> planted_pair(Rng& rng, int dmax) {
  const int dc = static_cast<int>(rng.uniform(0, dmax / 2));
  const Poly<Rational> c = random_monic(rng, dc, 3, 1);
  const int d1 = static_cast<int>(rng.uniform(std::max(1 - dc, 0), dmax - dc));
  const int d2 = static_cast<int>(rng.uniform(0, dmax - dc));
  Poly<Rational> p = random_monic(rng, d1, 3, 2) * c;
  Poly<Rational> q = random_poly(rng, d2, 3, 2) * c;
  return {p, q};
}

}  // namespace

VerifyReport verify_resultants(std::uint64_t seed) {
  VerifyReport report;
  report.suite = "resultants";
  Rng rng(seed);

  // Pair conformance: kernel dimension and subresultants against Euclid.
  for (int trial = 0; trial < 500; ++trial) {
    auto [p, q] = planted_pair(rng, 8);
    const Poly<Rational> g = gcd(p, q);
    const int d = g.is_zero() ? p.degree() : g.degree();
    report.tally("d0", gcd_degree_pair(p, q) == d);
    if (!q.is_zero()) {
      const SubresultantReport sub = subresultant_sequence(p, q);
      bool ok = sub.first_nonzero == d && sub.gcd_candidate == g;
      for (const auto& [j, rj] : sub.sequence) {
        if (j < d && !rj.is_zero()) ok = false;
        if (j == d && rj.is_zero()) ok = false;
      }
      report.tally("rp", ok);
      // The resultant is nonzero exactly when the pair is coprime.
      report.tally("d0", (det(sylvester(p, q)) != 0) == (d == 0));
    }
  }

  // Multi-polynomial gcd: stacked kernels and the subresultant chain.
  for (int trial = 0; trial < 300; ++trial) {
    const int k = static_cast<int>(rng.uniform(3, 4));
    const int dc = static_cast<int>(rng.uniform(0, 2));
    const Poly<Rational> c = random_monic(rng, dc, 3, 1);
    std::vector<Poly<Rational>> polys;
    for (int t = 0; t < k; ++t) {
      const int deg = static_cast<int>(rng.uniform(std::max(1 - dc, 0), 6 - dc));
      Poly<Rational> f =
          (t == 0 || t == 2) ? random_monic(rng, deg, 3, 2) : random_poly(rng, deg, 3, 2);
      polys.push_back(f * c);
    }
    Poly<Rational> folded = polys.front();
    for (std::size_t t = 1; t < polys.size(); ++t) folded = gcd(folded, polys[t]);
    const int d = folded.degree();
    report.tally("thPG", gcd_degree_multi(polys) == d);
    if (k == 3) {
      // Chain threshold: the largest i for which the closed conditions hold.
      int threshold = 0;
      const int bound = std::min(polys[0].degree(), polys[2].degree());
      for (int i = 1; i <= bound; ++i)
        if (resultant_chain_conditions(polys[0], polys[1], polys[2], i)) threshold = i;
      report.tally("oK", threshold == d);
    }
  }

  // Confluent Vandermonde kernels of M_{P,l}.
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<Rational, int>> roots;
    const int nroots = static_cast<int>(rng.uniform(1, 3));
    for (int t = 0; t < nroots; ++t) {
      Rational alpha = rng.rational(3, 2);
      bool fresh = true;
      for (const auto& [r, m] : roots) fresh = fresh && r != alpha;
      if (!fresh) {
        --t;
        continue;
      }
      roots.emplace_back(alpha, static_cast<int>(rng.uniform(1, 3)));
    }
    Poly<Rational> p{Rational(1)};
    int n = 0;
    for (const auto& [alpha, mult] : roots) {
      p = p * pow(Poly<Rational>{-alpha, Rational(1)}, mult);
      n += mult;
    }
    const int l = static_cast<int>(rng.uniform(1, 4));
    const auto basis = confluent_vandermonde_kernel(roots, l);
    const RMat m = build_mult_matrix(p, l);
    bool ok = static_cast<int>(basis.size()) == n;
    RMat stacked(static_cast<Eigen::Index>(basis.size()), n + l);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const RVec image = m * basis[b];
      for (Eigen::Index r = 0; r < image.size(); ++r) ok = ok && image(r).is_zero();
      stacked.row(static_cast<Eigen::Index>(b)) = basis[b].transpose();
    }
    ok = ok && rank(stacked) == n;
    report.tally("dim", ok);
  }
  return report;
}

VerifyReport verify_poisson(std::uint64_t seed) {
  VerifyReport report;
  report.suite = "poisson";
  Rng rng(seed);

  for (int g = 1; g <= 3; ++g) {
    const PoissonStructure std_ps = standard_structure(g);
    const PoissonStructure star_ps = star_structure(g);
    const PoissonStructure sum_ps = pencil_sum(std_ps, star_ps);
    const int n = 3 * g + 1;
    const VarTable vars = phase_vars(g);

    // Coordinate tables must reproduce the generating-function expansions.
    {
      const auto gen_std = bracket_table_from_generating(g, false);
      const auto gen_star = bracket_table_from_generating(g, true);
      bool std_ok = true, star_ok = true;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          auto find = [&](const std::map<std::pair<int, int>, MPoly>& t) {
            auto it = t.find({a, b});
            return it == t.end() ? MPoly() : it->second;
          };
          std_ok = std_ok && std_ps.bracket_coords(a, b) == find(gen_std);
          star_ok = star_ok && star_ps.bracket_coords(a, b) == find(gen_star);
        }
      report.tally("poi", std_ok);
      report.tally("Eq11", star_ok);
    }

    // Jacobi identity for both structures and their sum, all coordinate
    // triples; antisymmetry is also exercised through random pairs.
    for (const auto* ps : {&std_ps, &star_ps, &sum_ps}) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = a + 1; b < n && ok; ++b)
          for (int c = b + 1; c < n && ok; ++c) {
            const MPoly fa = MPoly::var(vars, a), fb = MPoly::var(vars, b),
                        fc = MPoly::var(vars, c);
            if (!jacobi_defect(*ps, fa, fb, fc).is_zero()) ok = false;
          }
      report.tally("jacobi", ok);
    }
    {
      bool anti = true, leibniz = true;
      for (int trial = 0; trial < 10; ++trial) {
        auto rand_mpoly = [&]() {
          MPoly f = MPoly::constant(rng.rational(3, 1), vars);
          for (int t = 0; t < 3; ++t) {
            const int a = static_cast<int>(rng.uniform(0, n - 1));
            f = f + rng.rational(3, 1) * MPoly::var(vars, a);
            const int b = static_cast<int>(rng.uniform(0, n - 1));
            f = f + rng.rational(2, 1) * (MPoly::var(vars, a) * MPoly::var(vars, b));
          }
          return f;
        };
        const MPoly f = rand_mpoly(), h = rand_mpoly(), k = rand_mpoly();
        anti = anti && poisson_bracket(std_ps, f, h) == -poisson_bracket(std_ps, h, f);
        anti = anti && poisson_bracket(star_ps, f, h) == -poisson_bracket(star_ps, h, f);
        leibniz = leibniz && poisson_bracket(std_ps, f, h * k) ==
                                 poisson_bracket(std_ps, f, h) * k +
                                     h * poisson_bracket(std_ps, f, k);
      }
      report.tally("poi", anti && leibniz);
    }

    // The duplicated-argument defect vanishes by antisymmetry.
    {
      const MPoly f = MPoly::var(vars, 0), h = MPoly::var(vars, n - 1);
      report.tally("jacobi", jacobi_defect(std_ps, f, f, h).is_zero());
    }

    const std::vector<MPoly> hs = symbolic_moment_coeffs(g);

    // Lax fields against Hamiltonian fields of the standard structure, and
    // the vanishing D_i = X_{h_i} for g <= i <= 2g.
    if (g <= 2) {
      for (int i = 0; i < g; ++i)
        report.tally("c_prime", symbolic_field(g, i) == hamiltonian_field(std_ps, hs[static_cast<std::size_t>(i)]));
      for (int i = g; i <= 2 * g; ++i)
        report.tally("c_prime", hamiltonian_field(std_ps, hs[static_cast<std::size_t>(i)]).is_zero());

      // Involutivity in both structures.
      bool inv = true;
      for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
          inv = inv && poisson_bracket(std_ps, hs[i], hs[j]).is_zero();
          inv = inv && poisson_bracket(star_ps, hs[i], hs[j]).is_zero();
        }
      report.tally("involution", inv);

      // Tangency: every D_i kills every h_j.
      bool tangent = true;
      for (int i = 0; i < g; ++i)
        for (const auto& hj : hs)
          tangent = tangent && lie_derivative(symbolic_field(g, i), hj).is_zero();
      report.tally("tangency", tangent);
    }

    // Numeric agreement of the symbolic fields with the Lax commutator.
    for (int trial = 0; trial < (g <= 2 ? 20 : 10); ++trial) {
      const MumfordMatrix<Rational> a = random_regular_point(g, rng);
      bool ok = true;
      for (int i = 0; i < g; ++i)
        ok = ok && evaluate(symbolic_field(g, i), a) == lax_field_i(a, i);
      report.tally("c_prime", ok);

      // D_y as the generating series of the D_i at sampled y.
      for (int t = 0; t < 5; ++t) {
        const Rational y = rng.rational(5, 2);
        TangentValue<Rational> acc = TangentValue<Rational>::zero(g);
        Rational yp(1);
        for (int i = 0; i < g; ++i) {
          acc = acc + yp * lax_field_i(a, i);
          yp *= y;
        }
        report.tally("1bis", acc == lax_field_at(a, y));
      }
    }

    // mu_x is a Poisson morphism (M_{g-1}, standard) -> (M_g, star).
    if (g >= 1) {
      const int src_g = g - 1;
      const VarTable src_vars = phase_vars(src_g);
      const PoissonStructure src_std = standard_structure(src_g);
      // Pullbacks of the order-g coordinates along A -> xA.
      std::vector<MPoly> pullback(static_cast<std::size_t>(n));
      for (int k = 0; k < g; ++k)
        pullback[static_cast<std::size_t>(u_index(g, k))] = k == 0 ? MPoly() : coord_u(src_g, k - 1);
      for (int k = 0; k < g; ++k)
        pullback[static_cast<std::size_t>(v_index(g, k))] = k == 0 ? MPoly() : coord_v(src_g, k - 1);
      for (int k = 0; k <= g; ++k)
        pullback[static_cast<std::size_t>(w_index(g, k))] = k == 0 ? MPoly() : coord_w(src_g, k - 1);
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = a + 1; b < n && ok; ++b) {
          const MPoly lhs = poisson_bracket(src_std, pullback[static_cast<std::size_t>(a)],
                                            pullback[static_cast<std::size_t>(b)]);
          const MPoly rhs = star_ps.bracket_coords(a, b).substitute_vars(pullback);
          if (!(lhs == rhs)) ok = false;
        }
      report.tally("morphism", ok);
    }
  }
  return report;
}

VerifyReport verify_strata(std::uint64_t seed) {
  VerifyReport report;
  report.suite = "strata";
  Rng rng(seed);

  // sigma/rho/Jacobian laws over a corpus spanning g in {1,2,3} and every
  // reachable rho.
  int corpus_size = 0;
  for (int g = 1; g <= 3 && corpus_size < 200; ++g) {
    for (int rho = 0; rho <= g; ++rho) {
      const int per_cell = g == 3 ? 19 : 25;
      for (int t = 0; t < per_cell && corpus_size < 200; ++t, ++corpus_size) {
        const MumfordMatrix<Rational> a = random_point_with_rho(g, rho, rng);
        const RhoResult rr = rho_of_matrix(a);
        const int sigma = sigma_of_matrix(a);
        report.tally("prop1", sigma == g - rr.rho && rr.rho == rho);
        report.tally("theo1", (sigma == g) == (rr.rho == 0));
        report.tally("PG", rank(jacobian_moment(a)) == 2 * g + 1 - rr.rho);
        // rho through the subresultant chain as the third route.
        int threshold = 0;
        for (int i = 1; i <= g; ++i)
          if (resultant_chain_conditions(a.u, a.v, a.w, i)) threshold = i;
        report.tally("oK", threshold == rr.rho);
      }
    }
  }
  {
    // The pinned g=1 example: rank 2 at (x, 0, x^2).
    const MumfordMatrix<Rational> a(1, Poly<Rational>{Rational(0), Rational(1)},
                                    Poly<Rational>(),
                                    Poly<Rational>{Rational(0), Rational(0), Rational(1)});
    report.tally("PG", rank(jacobian_moment(a)) == 2);
  }

  // Pushforward identities on 50 seeded (P, A) pairs.
  for (int t = 0; t < 50; ++t) {
    const int g = static_cast<int>(rng.uniform(1, 2));
    const MumfordMatrix<Rational> a = random_regular_point(g, rng);
    Poly<Rational> p;
    if (t % 2 == 0) {
      p = Poly<Rational>::monomial(static_cast<int>(rng.uniform(1, 2)));
    } else {
      p = random_monic(rng, static_cast<int>(rng.uniform(1, 2)), 3, 1);
    }
    const PushforwardReport push = pushforward_identity_check(p, a, 4, rng.next());
    report.tally("lem1", push.ok && push.sampled_checks == 4);
    report.tally("coco", push.ok && push.formal_checks > 0);
    if (p == Poly<Rational>::monomial(p.degree()))
      report.tally("p48", push.ok && push.shift_checks > 0);
  }

  // Fiber stratification fixtures.
  const Poly<Rational> x = Poly<Rational>::x();
  const Poly<Rational> xm1 = x - Poly<Rational>{Rational(1)};
  struct Fixture {
    SpectralPoly<Rational> h;
    int expected_labels;
  };
  // The squarefree fixture is an elliptic curve with plenty of small
  // rational points, so the exact sampler's square hunt succeeds.
  const std::vector<Fixture> fixtures = {
      {SpectralPoly<Rational>(pow(x, 3)), 2},
      {SpectralPoly<Rational>(pow(x, 3) * pow(xm1, 2)), 4},
      {SpectralPoly<Rational>(pow(x, 3) - x + Poly<Rational>{Rational(1)}), 1},
  };
  for (const auto& fixture : fixtures) {
    const StrataLattice lattice = enumerate_strata(fixture.h);
    const int g = lattice.g;
    bool counts_ok = static_cast<int>(lattice.labels.size()) == fixture.expected_labels;
    // Coarse strata number rho(h)+1 (Prop p@), and each coarse stratum is the
    // union of its fine labels (t43).
    counts_ok = counts_ok && static_cast<int>(lattice.coarse_counts.size()) == lattice.rho_h + 1;
    report.tally("p@", counts_ok);

    bool unique_max = true;
    int max_deg_count = 0;
    for (const auto& label : lattice.labels)
      if (label.q.degree_or(0) == lattice.rho_h) ++max_deg_count;
    unique_max = max_deg_count == 1;
    bool edges_ok = true;
    for (const auto& [from, to] : lattice.edges) {
      const auto& la = lattice.labels[static_cast<std::size_t>(from)];
      const auto& lb = lattice.labels[static_cast<std::size_t>(to)];
      edges_ok = edges_ok && la.i > lb.i &&
                 (la.i - lb.i) == (lb.q.degree_or(0) - la.q.degree_or(0));
    }
    report.tally("n", unique_max && edges_ok);

    for (std::size_t li = 0; li < lattice.labels.size(); ++li) {
      const StratumLabel& label = lattice.labels[li];
      const MumfordMatrix<Rational> a =
          sample_stratum_exact(label, seed + 131 * li + 7);
      const StratumLabel back = classify(a, lattice.h);
      report.tally("p@", back.i == label.i && back.q == label.q);
      report.tally("coro_X", rho_of_matrix(a).rho <= lattice.rho_h);

      const Decomposition dec = decompose_fiber_point(a, lattice.h);
      bool dec_ok = dec.q == label.q && mu_P(dec.q, dec.aprime).u == a.u &&
                    mu_P(dec.q, dec.aprime).v == a.v && mu_P(dec.q, dec.aprime).w == a.w;
      dec_ok = dec_ok && rho_of_matrix(dec.aprime).rho == 0;
      dec_ok = dec_ok && exact_div(lattice.h.h, label.q * label.q) == dec.hprime.h;
      report.tally("t43", dec_ok);
    }

    const SmoothnessReport smooth = smoothness_report(lattice.h, 2, seed + 17);
    bool smooth_ok = smooth.ok;
    // The singular locus is the union of the non-maximal strata.
    for (int idx : smooth.singular_label_indices)
      smooth_ok = smooth_ok && lattice.labels[static_cast<std::size_t>(idx)].i < g;
    report.tally("SM", smooth_ok);
  }

  // The unique deepest point of the g=2 fixture.
  {
    const SpectralPoly<Rational> h(pow(x, 3) * pow(xm1, 2));
    const StrataLattice lattice = enumerate_strata(h);
    for (const auto& label : lattice.labels) {
      if (label.i != 0) continue;
      const MumfordMatrix<Rational> a = sample_stratum_exact(label, seed);
      const Poly<Rational> expect_u = x * x - x;
      const Poly<Rational> expect_w = pow(x, 3) - x * x;
      report.tally("t43", a.u == expect_u && a.v.is_zero() && a.w == expect_w);
    }
  }

  // Prop aze: mu_P preserves the stratum index, and its image inside the
  // order-(g+n) stratum is exactly the divisible locus.
  for (int t = 0; t < 20; ++t) {
    const int g = static_cast<int>(rng.uniform(1, 2));
    const int rho = static_cast<int>(rng.uniform(0, g - 1));
    const MumfordMatrix<Rational> a = random_point_with_rho(g, rho, rng);
    const Poly<Rational> p = random_monic(rng, static_cast<int>(rng.uniform(1, 2)), 3, 1);
    const MumfordMatrix<Rational> b = mu_P(p, a);
    const int i = g - rho;
    bool ok = sigma_of_matrix(b) == i;  // image lands in stratum index i
    // Membership back: order-(g+n) stratum-i points divisible by p descend.
    const RhoResult rb = rho_of_matrix(b);
    ok = ok && div_rem(rb.divisor, p).second.is_zero();
    const MumfordMatrix<Rational> down(b.g - p.degree(), exact_div(b.u, p),
                                       exact_div(b.v, p), exact_div(b.w, p));
    ok = ok && sigma_of_matrix(down) == i;
    report.tally("aze", ok);
  }

  // Degeneration smoke test: along a rational path from a regular point into
  // a non-regular limit, the classifier only ever jumps downward in i.
  for (int t = 0; t < 5; ++t) {
    const int g = 2;
    const MumfordMatrix<Rational> regular = random_regular_point(g, rng);
    const MumfordMatrix<Rational> deep = random_point_with_rho(g, g, rng);
    auto blend = [&](const Rational& s) {
      auto mix = [&](const Poly<Rational>& a, const Poly<Rational>& b) {
        return (Rational(1) - s) * a + s * b;
      };
      return MumfordMatrix<Rational>(g, mix(regular.u, deep.u), mix(regular.v, deep.v),
                                     mix(regular.w, deep.w));
    };
    const int end_i = g - rho_of_matrix(deep).rho;
    bool ok = true;
    for (int num = 0; num <= 7; ++num) {
      const Rational s = make_rational(num, 7);
      const int i = g - rho_of_matrix(blend(s)).rho;
      if (i < end_i) ok = false;  // interior may not drop below the limit
    }
    report.tally("n", ok);
  }
  return report;
}

VerifyReport verify_all(std::uint64_t seed) {
  VerifyReport report;
  report.suite = "all";
  report.merge(verify_resultants(seed));
  report.merge(verify_poisson(seed + 1));
  report.merge(verify_strata(seed + 2));
  return report;
}

}  // namespace mumford
