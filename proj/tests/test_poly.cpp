#include <doctest.h>

#include "mumford/bipoly.hpp"
#include "mumford/poly.hpp"
#include "mumford/rng.hpp"

using namespace mumford;

namespace {

using P = Poly<Rational>;

P from_ints(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return P(std::move(v));
}

Poly<Rational> random_poly_deg(Rng& rng, int deg) {
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = rng.rational(5, 3);
  while (c.back().is_zero()) c.back() = rng.rational(5, 3);
  return P(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial degree is a guarded sentinel") {
  P z;
  CHECK(z.is_zero());
  CHECK_THROWS_AS(z.degree(), std::domain_error);
  CHECK(z.degree_or(-1) == -1);
}

TEST_CASE("core ring operations") {
  const P a = from_ints({-1, 0, 1});  // x^2 - 1
  const P b = from_ints({-1, 1});     // x - 1

  SUBCASE("gcd by Euclid") { CHECK(gcd(a, b) == b); }
  SUBCASE("monomial division") {
    auto [q, r] = div_rem(P::monomial(3), P::x());
    CHECK(q == P::monomial(2));
    CHECK(r.is_zero());
  }
  SUBCASE("evaluation") { CHECK(from_ints({1, 0, 1})(Rational(2)) == Rational(5)); }
  SUBCASE("division by zero rejected") {
    CHECK_THROWS_AS(div_rem(a, P()), std::domain_error);
  }
  SUBCASE("div_rem contract on random pairs") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
      const P p = random_poly_deg(rng, static_cast<int>(rng.uniform(0, 6)));
      const P q = random_poly_deg(rng, static_cast<int>(rng.uniform(0, 4)));
      auto [quo, rem] = div_rem(p, q);
      CHECK(quo * q + rem == p);
      if (!rem.is_zero()) CHECK(rem.degree() < q.degree());
    }
  }
}

TEST_CASE("truncate_div") {
  CHECK(truncate_div(from_ints({5, 3, 1}), 1) == from_ints({3, 1}));
  CHECK(truncate_div(P::monomial(3), 2) == P::x());
  CHECK(truncate_div(from_ints({7}), 1).is_zero());
  CHECK(truncate_div(from_ints({5, 3, 1}), 0) == from_ints({5, 3, 1}));

  // x^j * [p/x^j]_+ + (p mod x^j) = p
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const P p = random_poly_deg(rng, static_cast<int>(rng.uniform(0, 7)));
    const int j = static_cast<int>(rng.uniform(0, 9));
    CHECK(shift_up(truncate_div(p, j), j) + low_part(p, j) == p);
  }
}

TEST_CASE("lagrange interpolation") {
  using Pt = std::pair<Rational, Rational>;
  CHECK(lagrange_interpolate<Rational>({Pt{Rational(0), Rational(1)},
                                        Pt{Rational(1), Rational(2)}}) ==
        from_ints({1, 1}));
  CHECK(lagrange_interpolate<Rational>({Pt{Rational(1), Rational(5)}}) == from_ints({5}));
  const P p = lagrange_interpolate<Rational>(
      {Pt{Rational(0), Rational(0)}, Pt{Rational(1), Rational(1)}, Pt{Rational(2), Rational(8)}});
  CHECK(p == from_ints({0, -2, 3}));
  CHECK(p(Rational(0)) == Rational(0));
  CHECK(p(Rational(1)) == Rational(1));
  CHECK(p(Rational(2)) == Rational(8));
  CHECK_THROWS_AS(lagrange_interpolate<Rational>(
                      {Pt{Rational(1), Rational(0)}, Pt{Rational(1), Rational(1)}}),
                  std::invalid_argument);

  // Round trip on random nodes.
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    std::vector<Pt> pts;
    for (int k = 0; k < 4; ++k) {
      Rational a = Rational(k) + rng.rational(2, 5);
      pts.emplace_back(a + Rational(10 * k), rng.rational(9, 4));
    }
    const P q = lagrange_interpolate(pts);
    CHECK(q.degree_or(0) <= 3);
    for (const auto& [a, b] : pts) CHECK(q(a) == b);
  }
}

TEST_CASE("squarefree decomposition") {
  const P x = P::x();
  const P xm1 = x - P{Rational(1)};
  const P xm2 = x - P{Rational(2)};

  SUBCASE("x^3 (x-1)^2") {
    const auto parts = squarefree_decomposition(pow(x, 3) * pow(xm1, 2));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == xm1);
    CHECK(parts[0].second == 2);
    CHECK(parts[1].first == x);
    CHECK(parts[1].second == 3);
  }
  SUBCASE("squarefree input stays whole") {
    const auto parts = squarefree_decomposition(from_ints({1, 0, 1}));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == from_ints({1, 0, 1}));
    CHECK(parts[0].second == 1);
  }
  SUBCASE("(x-2)^4") {
    const auto parts = squarefree_decomposition(pow(xm2, 4));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == xm2);
    CHECK(parts[0].second == 4);
  }
  SUBCASE("reconstruction is exact on random products") {
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
      P p{rng.rational(4, 2)};
      while (p.is_zero()) p = P{rng.rational(4, 2)};
      for (int f = 0; f < 3; ++f) {
        const P lin = x - P{rng.rational(3, 1)};
        p = p * pow(lin, static_cast<int>(rng.uniform(0, 3)));
      }
      if (p.is_constant()) continue;
      P rebuilt{p.leading()};
      for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        CHECK(factor.is_monic());
        rebuilt = rebuilt * pow(factor, mult);
      }
      CHECK(rebuilt == p);
    }
  }
}

TEST_CASE("divided differences") {
  const P x2 = P::monomial(2);
  CHECK(divided_difference(x2) ==
        BiPoly<Rational>::term(1, 0, Rational(1)) + BiPoly<Rational>::term(0, 1, Rational(1)));
  CHECK(divided_difference(P{Rational(3)}).is_zero());
  // x^3 + x -> x^2 + xy + y^2 + 1
  const BiPoly<Rational> dd = divided_difference(P::monomial(3) + P::x());
  CHECK(dd.coeff(2, 0) == Rational(1));
  CHECK(dd.coeff(1, 1) == Rational(1));
  CHECK(dd.coeff(0, 2) == Rational(1));
  CHECK(dd.coeff(0, 0) == Rational(1));
  CHECK(dd.coeff(1, 0) == Rational(0));

  SUBCASE("diagonal recovers the derivative") {
    Rng rng(19);
    for (int t = 0; t < 30; ++t) {
      const P p = random_poly_deg(rng, static_cast<int>(rng.uniform(0, 7)));
      CHECK(divided_difference(p).subst_y_eq_x() == p.derivative());
    }
  }
  SUBCASE("scalar divided difference agrees") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
      const P p = random_poly_deg(rng, static_cast<int>(rng.uniform(1, 6)));
      const Rational y0 = rng.rational(5, 3);
      const P q = divided_difference_at(p, y0);
      CHECK(q * (P::x() - P{y0}) == p - P{p(y0)});
      CHECK(divided_difference(p).subst_y(y0) == q);
    }
  }
}

TEST_CASE("formal residue extracts y coefficients") {
  // (y^2+y)/y reduced by the caller to y+1: coefficient of y^0 is 1.
  const BiPoly<Rational> f =
      BiPoly<Rational>::term(0, 1, Rational(1)) + BiPoly<Rational>::term(0, 0, Rational(1));
  CHECK(formal_residue(f, 0) == P{Rational(1)});
  CHECK(formal_residue(f, 1) == P{Rational(1)});
  CHECK(formal_residue(f, 2).is_zero());

  // Shift by one: coeff of y^1 in y*(D0 + y D1) is D0.
  const P d0 = from_ints({2, 3});
  const P d1 = from_ints({-1, 0, 5});
  const BiPoly<Rational> series = BiPoly<Rational>::from_x(d0) +
                                  BiPoly<Rational>::term(0, 1, Rational(1)) *
                                      BiPoly<Rational>::from_x(d1);
  const BiPoly<Rational> shifted = BiPoly<Rational>::term(0, 1, Rational(1)) * series;
  CHECK(formal_residue(shifted, 1) == d0);
  CHECK(formal_residue(shifted, 2) == d1);

  // P(y) = y^2 - 1 against D0 + y D1: direct product expansion.
  std::vector<Rational> pc{Rational(-1), Rational(0), Rational(1)};
  BiPoly<Rational> py;
  for (int k = 0; k < 3; ++k)
    py = py + BiPoly<Rational>::term(0, k, pc[static_cast<std::size_t>(k)]);
  const BiPoly<Rational> prod = py * series;
  CHECK(formal_residue(prod, 0) == -d0);
  CHECK(formal_residue(prod, 1) == -d1);
  CHECK(formal_residue(prod, 2) == d0);
  CHECK(formal_residue(prod, 3) == d1);
}

TEST_CASE("exact and float backends agree within tolerance") {
  Rng rng(29);
  for (int t = 0; t < 25; ++t) {
    const P a = random_poly_deg(rng, static_cast<int>(rng.uniform(0, 5)));
    const P b = random_poly_deg(rng, static_cast<int>(rng.uniform(0, 5)));
    const Rational at = rng.rational(3, 2);
    const Poly<Cplx> fa = to_float(a), fb = to_float(b);
    CHECK(approx_equal(fa * fb, to_float(a * b)));
    CHECK(approx_equal(fa + fb, to_float(a + b)));
    CHECK(scalar_traits<Cplx>::approx_equal(fa(to_cplx(at)), to_cplx(a(at))));
  }
}

// Note: gcd/squarefree are declared for the exact scalar only, so float-mode
// misuse is a compile error rather than a runtime check.
