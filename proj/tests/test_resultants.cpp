#include <doctest.h>

#include "mumford/resultants.hpp"
#include "mumford/rng.hpp"

using namespace mumford;

namespace {

using P = Poly<Rational>;

P from_ints(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return P(std::move(v));
}

}  // namespace

TEST_CASE("multiplication matrices") {
  SUBCASE("x^2 + 1, l = 2") {
    const RMat m = build_mult_matrix(from_ints({1, 0, 1}), 2);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 4);
    RMat expect(2, 4);
    expect << Rational(1), Rational(0), Rational(1), Rational(0),
              Rational(0), Rational(1), Rational(0), Rational(1);
    CHECK(m == expect);
  }
  SUBCASE("x - 1, l = 2") {
    const RMat m = build_mult_matrix(from_ints({-1, 1}), 2);
    RMat expect(2, 3);
    expect << Rational(-1), Rational(1), Rational(0),
              Rational(0), Rational(-1), Rational(1);
    CHECK(m == expect);
  }
  SUBCASE("l = 0 and zero polynomial rejected") {
    CHECK_THROWS_AS(build_mult_matrix(P::x(), 0), std::invalid_argument);
    CHECK_THROWS_AS(build_mult_matrix(P(), 1), std::invalid_argument);
  }
  SUBCASE("trailing columns of a monic block are unit upper triangular") {
    Rng rng(47);
    for (int t = 0; t < 10; ++t) {
      const int n = static_cast<int>(rng.uniform(1, 5));
      const int l = static_cast<int>(rng.uniform(1, 4));
      std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
      for (auto& x : c) x = rng.rational(4, 2);
      c.back() = Rational(1);
      const RMat m = build_mult_matrix(P(std::move(c)), l);
      const RMat block = m.block(0, n, l, l);
      CHECK(det(block) == Rational(1));
      for (int i = 0; i < l; ++i) {
        CHECK(block(i, i) == Rational(1));
        for (int j = i + 1; j < l; ++j) CHECK(block(i, j).is_zero());
      }
    }
  }
}

TEST_CASE("Sylvester matrices") {
  SUBCASE("(x^2 - 1, x - 1)") {
    const RMat s = sylvester(from_ints({-1, 0, 1}), from_ints({-1, 1}));
    RMat expect(3, 3);
    expect << Rational(-1), Rational(0), Rational(1),
              Rational(-1), Rational(1), Rational(0),
              Rational(0), Rational(-1), Rational(1);
    CHECK(s == expect);
    CHECK(det(s) == Rational(0));
  }
  SUBCASE("(x, 1) with bound m = 1") {
    const RMat s = sylvester(P::x(), from_ints({1}), 1);
    RMat expect(2, 2);
    expect << Rational(0), Rational(1), Rational(1), Rational(0);
    CHECK(s == expect);
    CHECK(det(s) == Rational(-1));
  }
  SUBCASE("non-monic first argument rejected") {
    CHECK_THROWS_AS(sylvester(from_ints({1, 2}), P::x()), std::invalid_argument);
  }
}

TEST_CASE("pair gcd degrees against the Euclid oracle") {
  CHECK(gcd_degree_pair(from_ints({-1, 0, 1}), from_ints({-1, 1})) == 1);
  CHECK(gcd_degree_pair(from_ints({-1, 0, 1}), from_ints({1})) == 0);
  const P xm2 = from_ints({-2, 1});
  const P xp1 = from_ints({1, 1});
  CHECK(gcd_degree_pair(pow(xm2, 3), pow(xm2, 2) * xp1) == 2);
  SUBCASE("zero second argument convention") {
    CHECK(gcd_degree_pair(from_ints({-1, 0, 1}), P()) == 2);
  }
  SUBCASE("random pairs") {
    Rng rng(53);
    for (int t = 0; t < 200; ++t) {
      const int dc = static_cast<int>(rng.uniform(0, 3));
      std::vector<Rational> cc(static_cast<std::size_t>(dc) + 1);
      for (auto& x : cc) x = rng.rational(3, 1);
      cc.back() = Rational(1);
      const P c(std::move(cc));
      std::vector<Rational> ac(static_cast<std::size_t>(rng.uniform(1, 4)) + 1);
      for (auto& x : ac) x = rng.rational(3, 2);
      ac.back() = Rational(1);
      std::vector<Rational> bc(static_cast<std::size_t>(rng.uniform(0, 4)) + 1);
      for (auto& x : bc) x = rng.rational(3, 2);
      while (bc.back().is_zero()) bc.back() = rng.rational(3, 2);
      const P p = P(std::move(ac)) * c;
      const P q = P(std::move(bc)) * c;
      CHECK(gcd_degree_pair(p, q) == gcd(p, q).degree());
      CHECK((det(sylvester(p, q)) != 0) == (gcd(p, q).degree() == 0));
    }
  }
}

TEST_CASE("multi gcd via stacked kernels") {
  const P x = P::x();
  const P xm1 = from_ints({-1, 1});
  CHECK(gcd_degree_multi({P::monomial(2), x, P::monomial(3)}) == 1);
  CHECK(gcd_degree_multi({pow(x, 3) * pow(xm1, 2), x * xm1, P::monomial(2) * pow(xm1, 2)}) == 2);
  SUBCASE("coprime pair that a one-row-per-block width would misreport") {
    // gcd(x^2, x^2+1) = 1: blocks must be Sylvester-wide, or the kernel
    // picks up a spurious vector.
    CHECK(gcd_degree_multi({P::monomial(2), from_ints({1, 0, 1})}) == 0);
  }
  SUBCASE("zero members are skipped") {
    CHECK(gcd_degree_multi({P::monomial(2), P(), P::monomial(3)}) == 2);
  }
  SUBCASE("single polynomial: kernel dimension is the degree") {
    CHECK(gcd_degree_multi({pow(xm1, 3)}) == 3);
  }
  SUBCASE("first polynomial must be monic and nonzero") {
    CHECK_THROWS_AS(gcd_degree_multi({from_ints({1, 2}), x}), std::invalid_argument);
    CHECK_THROWS_AS(gcd_degree_multi({}), std::invalid_argument);
  }
  SUBCASE("oracle sweep over random tuples, including caller shifts") {
    Rng rng(59);
    for (int t = 0; t < 150; ++t) {
      const int k = static_cast<int>(rng.uniform(2, 4));
      const int dc = static_cast<int>(rng.uniform(0, 2));
      std::vector<Rational> cc(static_cast<std::size_t>(dc) + 1);
      for (auto& v : cc) v = rng.rational(3, 1);
      cc.back() = Rational(1);
      const P c(std::move(cc));
      std::vector<P> polys;
      for (int s = 0; s < k; ++s) {
        const int deg = static_cast<int>(rng.uniform(s == 0 ? 1 : 0, 6 - dc));
        std::vector<Rational> fc(static_cast<std::size_t>(deg) + 1);
        for (auto& v : fc) v = rng.rational(3, 2);
        if (s == 0)
          fc.back() = Rational(1);
        else
          while (fc.back().is_zero()) fc.back() = rng.rational(3, 2);
        polys.push_back(P(std::move(fc)) * c);
      }
      P folded = polys.front();
      for (std::size_t s = 1; s < polys.size(); ++s) folded = gcd(folded, polys[s]);
      CHECK(gcd_degree_multi(polys) == folded.degree());
      // Generous caller-supplied shifts must agree.
      std::vector<int> shifts;
      int top = 0;
      for (const auto& f : polys) top = std::max(top, f.degree());
      for (const auto& f : polys) shifts.push_back(polys.front().degree() + top - f.degree() + 1);
      CHECK(gcd_degree_multi(polys, shifts) == folded.degree());
    }
  }
}

TEST_CASE("subresultant sequences") {
  SUBCASE("(x^2 - 1, x - 1)") {
    const auto report = subresultant_sequence(from_ints({-1, 0, 1}), from_ints({-1, 1}));
    CHECK(report.first_nonzero == 1);
    CHECK(report.sequence[0].second.is_zero());
    CHECK(report.gcd_candidate == from_ints({-1, 1}));
  }
  SUBCASE("coprime pair: the resultant shows up at index zero") {
    const auto report = subresultant_sequence(from_ints({1, 0, 1}), P::x());
    CHECK(report.first_nonzero == 0);
    CHECK(report.sequence[0].second == from_ints({1}));
    CHECK(report.gcd_candidate == from_ints({1}));
  }
  SUBCASE("(p, p') for p = (x-1)^3") {
    const P p = pow(from_ints({-1, 1}), 3);
    const auto report = subresultant_sequence(p, p.derivative());
    CHECK(report.first_nonzero == 2);
    CHECK(report.sequence[0].second.is_zero());
    CHECK(report.sequence[1].second.is_zero());
    CHECK(report.gcd_candidate == pow(from_ints({-1, 1}), 2));
  }
  SUBCASE("zero q rejected") {
    CHECK_THROWS_AS(subresultant_sequence(P::x(), P()), std::invalid_argument);
  }
  SUBCASE("proportional inputs bottom out") {
    const P p = from_ints({-3, 0, 1});
    const auto report = subresultant_sequence(p, Rational(5) * p);
    CHECK(report.first_nonzero == 2);
    CHECK(report.gcd_candidate == p);
  }
}

TEST_CASE("resultant chain conditions") {
  const P x = P::x();
  const P xm1 = from_ints({-1, 1});
  SUBCASE("vacuous at i = 0") {
    CHECK(resultant_chain_conditions(from_ints({1, 1}), from_ints({1}), from_ints({0, 0, 1}), 0));
  }
  SUBCASE("regular triple fails at i = 1") {
    CHECK_FALSE(resultant_chain_conditions(from_ints({1, 1}), from_ints({1}),
                                           from_ints({0, 0, 1}), 1));
  }
  SUBCASE("common factor x passes exactly up to its degree") {
    const P u = x * from_ints({1, 1});
    const P v = x * from_ints({3});
    const P w = x * from_ints({2, 0, 1});
    CHECK(resultant_chain_conditions(u, v, w, 1));
    CHECK_FALSE(resultant_chain_conditions(u, v, w, 2));
  }
  SUBCASE("zero v falls back to gcd(u, w)") {
    CHECK(resultant_chain_conditions(P::monomial(2), P(), pow(x, 3), 2));
    CHECK_FALSE(resultant_chain_conditions(P::monomial(2), P(), pow(x, 3), 3));
  }
  SUBCASE("threshold equals the multi-gcd degree on random triples") {
    Rng rng(61);
    for (int t = 0; t < 60; ++t) {
      const int dc = static_cast<int>(rng.uniform(0, 2));
      std::vector<Rational> cc(static_cast<std::size_t>(dc) + 1);
      for (auto& v : cc) v = rng.rational(2, 1);
      cc.back() = Rational(1);
      const P c(std::move(cc));
      auto monic_part = [&](int deg) {
        std::vector<Rational> fc(static_cast<std::size_t>(deg) + 1);
        for (auto& v : fc) v = rng.rational(3, 1);
        fc.back() = Rational(1);
        return P(std::move(fc));
      };
      const P u = monic_part(static_cast<int>(rng.uniform(1, 3))) * c;
      const P w = monic_part(static_cast<int>(rng.uniform(1, 3))) * c;
      std::vector<Rational> vc(static_cast<std::size_t>(rng.uniform(0, 2)) + 1);
      for (auto& v : vc) v = rng.rational(3, 1);
      while (vc.back().is_zero()) vc.back() = rng.rational(3, 1);
      const P v = P(std::move(vc)) * c;
      const int d = gcd(gcd(u, v), w).degree();
      int threshold = 0;
      for (int i = 1; i <= u.degree(); ++i)
        if (resultant_chain_conditions(u, v, w, i)) threshold = i;
      CHECK(threshold == d);
      CHECK(gcd_degree_multi({u, v, w}) == d);
    }
  }
}
