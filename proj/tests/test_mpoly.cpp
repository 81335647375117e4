#include <doctest.h>

#include "mumford/mpoly.hpp"
#include "mumford/rng.hpp"

using namespace mumford;

namespace {

MPoly random_mpoly(Rng& rng, const VarTable& vars) {
  const int n = static_cast<int>(vars->size());
  MPoly f = MPoly::constant(rng.rational(3, 1), vars);
  for (int t = 0; t < 4; ++t) {
    const int a = static_cast<int>(rng.uniform(0, n - 1));
    const int b = static_cast<int>(rng.uniform(0, n - 1));
    f = f + rng.rational(3, 1) * MPoly::var(vars, a);
    f = f + rng.rational(2, 1) * (MPoly::var(vars, a) * MPoly::var(vars, b));
  }
  return f;
}

}  // namespace

TEST_CASE("phase coordinates and arithmetic") {
  const VarTable vars = phase_vars(1);  // u_0, v_0, w_0, w_1
  REQUIRE(vars->size() == 4);
  CHECK((*vars)[0] == "u_0");
  CHECK((*vars)[u_index(1, 0)] == "u_0");
  CHECK((*vars)[v_index(1, 0)] == "v_0");
  CHECK((*vars)[w_index(1, 1)] == "w_1");

  const MPoly u0 = MPoly::var(vars, 0);
  const MPoly v0 = MPoly::var(vars, 1);
  const MPoly w0 = MPoly::var(vars, 2);
  const MPoly w1 = MPoly::var(vars, 3);

  SUBCASE("derivative of h_0") {
    const MPoly h0 = u0 * w0 + v0 * v0;
    CHECK(h0.partial_derivative(1) == Rational(2) * v0);
    CHECK(h0.partial_derivative(0) == w0);
  }
  SUBCASE("substitution") {
    const MPoly f = u0 * w1;
    CHECK(f.substitute({Rational(1), Rational(0), Rational(0), Rational(3)}) == Rational(3));
  }
  SUBCASE("difference of squares") {
    CHECK((u0 + w1) * (u0 - w1) == u0 * u0 - w1 * w1);
  }
  SUBCASE("table mismatch is rejected") {
    const VarTable other = phase_vars(2);
    CHECK_THROWS_AS(MPoly::var(vars, 0) + MPoly::var(other, 0), std::invalid_argument);
  }
  SUBCASE("universal constants combine with anything") {
    const MPoly one = MPoly::constant(Rational(1));
    CHECK(one * u0 == u0);
    CHECK((one + u0) - u0 == MPoly::constant(Rational(1), vars));
  }
}

TEST_CASE("product rule for partial derivatives") {
  Rng rng(31);
  const VarTable vars = phase_vars(2);
  for (int t = 0; t < 20; ++t) {
    const MPoly f = random_mpoly(rng, vars);
    const MPoly g = random_mpoly(rng, vars);
    const int k = static_cast<int>(rng.uniform(0, static_cast<long>(vars->size()) - 1));
    CHECK((f * g).partial_derivative(k) ==
          f.partial_derivative(k) * g + f * g.partial_derivative(k));
  }
}

TEST_CASE("composition with coordinate reindexing") {
  const VarTable big = phase_vars(2);
  const VarTable small = phase_vars(1);
  // Pull back along A -> xA: u_1 -> u_0, u_0 -> 0 (and so on).
  std::vector<MPoly> images(big->size());
  images[u_index(2, 0)] = MPoly();
  images[u_index(2, 1)] = MPoly::var(small, u_index(1, 0));
  images[v_index(2, 0)] = MPoly();
  images[v_index(2, 1)] = MPoly::var(small, v_index(1, 0));
  images[w_index(2, 0)] = MPoly();
  images[w_index(2, 1)] = MPoly::var(small, w_index(1, 0));
  images[w_index(2, 2)] = MPoly::var(small, w_index(1, 1));

  const MPoly f = MPoly::var(big, u_index(2, 1)) * MPoly::var(big, w_index(2, 2)) +
                  MPoly::var(big, u_index(2, 0));
  const MPoly pulled = f.substitute_vars(images);
  CHECK(pulled == MPoly::var(small, u_index(1, 0)) * MPoly::var(small, w_index(1, 1)));

  // Substituting numbers through the composition agrees with composing maps.
  Rng rng(37);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> pt(small->size());
    for (auto& x : pt) x = rng.rational(4, 2);
    std::vector<Rational> lifted(big->size());
    for (std::size_t k = 0; k < big->size(); ++k) lifted[k] = images[k].substitute(pt);
    const MPoly g = random_mpoly(rng, big);
    CHECK(g.substitute_vars(images).substitute(pt) == g.substitute(lifted));
  }
}
