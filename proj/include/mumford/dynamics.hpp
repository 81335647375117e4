#ifndef MUMFORD_DYNAMICS_HPP
#define MUMFORD_DYNAMICS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mumford/bipoly.hpp"
#include "mumford/matrix.hpp"
#include "mumford/mpoly.hpp"
#include "mumford/mumford.hpp"
#include "mumford/rng.hpp"

namespace mumford {

/// A tangent vector at a point of M_g: coefficientwise derivative of
/// (u, v, w) with the monic leading coefficients frozen, so deg du <= g-1,
/// deg dv <= g-1, deg dw <= g.
template <typename S>
struct TangentValue {
  int g = 0;
  Poly<S> du, dv, dw;

  TangentValue(int order, Poly<S> du_, Poly<S> dv_, Poly<S> dw_)
      : g(order), du(std::move(du_)), dv(std::move(dv_)), dw(std::move(dw_)) {
    if (du.degree_or(-1) > g - 1 || dv.degree_or(-1) > g - 1 || dw.degree_or(-1) > g)
      throw std::logic_error("TangentValue: degree bounds violated");
  }

  static TangentValue zero(int order) {
    return TangentValue(order, Poly<S>(), Poly<S>(), Poly<S>());
  }

  bool is_zero() const { return du.is_zero() && dv.is_zero() && dw.is_zero(); }

  /// Coordinates in the order u_0..u_{g-1}, v_0..v_{g-1}, w_0..w_g.
  Vec<S> flatten() const {
    Vec<S> x(3 * g + 1);
    for (int k = 0; k < g; ++k) x(k) = du.coeff(k);
    for (int k = 0; k < g; ++k) x(g + k) = dv.coeff(k);
    for (int k = 0; k <= g; ++k) x(2 * g + k) = dw.coeff(k);
    return x;
  }

  friend TangentValue operator+(const TangentValue& a, const TangentValue& b) {
    if (a.g != b.g) throw std::invalid_argument("tangent order mismatch");
    return TangentValue(a.g, a.du + b.du, a.dv + b.dv, a.dw + b.dw);
  }
  friend TangentValue operator*(const S& s, const TangentValue& t) {
    return TangentValue(t.g, s * t.du, s * t.dv, s * t.dw);
  }
  friend bool operator==(const TangentValue& a, const TangentValue& b) {
    return a.g == b.g && a.du == b.du && a.dv == b.dv && a.dw == b.dw;
  }
};

template <typename S>
bool approx_equal(const TangentValue<S>& a, const TangentValue<S>& b,
                  double eps = kDefaultEpsilon) {
  return a.g == b.g && approx_equal(a.du, b.du, eps) && approx_equal(a.dv, b.dv, eps) &&
         approx_equal(a.dw, b.dw, eps);
}

namespace detail {

/// [A, B] for A = [[v,u],[w,-v]] and trace-free B = [[b11,b12],[b21,-b11]]
/// with entries in any commutative ring of polynomials.
template <typename P>
struct CommutatorParts {
  P du, dv, dw;
};

template <typename P>
CommutatorParts<P> lax_commutator(const P& u, const P& v, const P& w, const P& b11,
                                  const P& b12, const P& b21) {
  using Ring = typename P::traits;
  P two = P(Ring::one() + Ring::one());
  return {two * (v * b12 - u * b11), u * b21 - w * b12, two * (w * b11 - v * b21)};
}

/// The top coefficients of a tangent cancel identically over an exact field;
/// in floats they only cancel to roundoff, so they are clamped against the
/// input scale before the degree-bound check.
template <typename S>
Poly<S> drop_cancelled_top(Poly<S> p, int max_deg, double scale) {
  if constexpr (scalar_traits<S>::is_exact) {
    return p;
  } else {
    std::vector<S> c = p.coeffs();
    while (static_cast<int>(c.size()) - 1 > max_deg) {
      if (std::abs(c.back()) > 1e-7 * scale)
        throw std::logic_error("tangent top coefficient failed to cancel");
      c.pop_back();
    }
    return Poly<S>(std::move(c));
  }
}

template <typename S>
TangentValue<S> commutator_to_tangent(int g, CommutatorParts<Poly<S>> parts,
                                      const MumfordMatrix<S>& a) {
  double scale = 1.0;
  if constexpr (!scalar_traits<S>::is_exact) {
    double top = 0.0;
    for (const auto* poly : {&a.u, &a.v, &a.w})
      for (const auto& c : poly->coeffs()) top = std::max(top, std::abs(c));
    scale = std::max(1.0, top * top);
  }
  return TangentValue<S>(g, drop_cancelled_top(std::move(parts.du), g - 1, scale),
                         drop_cancelled_top(std::move(parts.dv), g - 1, scale),
                         drop_cancelled_top(std::move(parts.dw), g, scale));
}

}  // namespace detail

/// D_y(A) = [A(x), -A(y)/(x-y) - [[0,0],[u(y),0]]], computed through the
/// exact divided difference (A(x)-A(y))/(x-y) so no rational function ever
/// appears. Vanishes identically when A(y) = 0.
template <typename S>
TangentValue<S> lax_field_at(const MumfordMatrix<S>& a, const S& y) {
  const Poly<S> b11 = divided_difference_at(a.v, y);
  const Poly<S> b12 = divided_difference_at(a.u, y);
  const Poly<S> b21 = divided_difference_at(a.w, y) - Poly<S>(a.u(y));
  auto parts = detail::lax_commutator(a.u, a.v, a.w, b11, b12, b21);
  return detail::commutator_to_tangent(a.g, std::move(parts), a);
}

/// D_i(A) = [A(x), [A(x)/x^{i+1}]_+ - [[0,0],[u_i,0]]]; identically zero for
/// i >= g (the formula already gives it, the remark pins it).
template <typename S>
TangentValue<S> lax_field_i(const MumfordMatrix<S>& a, int i) {
  if (i < 0) throw std::invalid_argument("lax_field_i: negative index");
  const Poly<S> b11 = truncate_div(a.v, i + 1);
  const Poly<S> b12 = truncate_div(a.u, i + 1);
  const Poly<S> b21 = truncate_div(a.w, i + 1) - Poly<S>(a.u.coeff(i));
  auto parts = detail::lax_commutator(a.u, a.v, a.w, b11, b12, b21);
  return detail::commutator_to_tangent(a.g, std::move(parts), a);
}

/// The differential of mu_P applied to a tangent vector: multiply through.
template <typename S>
TangentValue<S> mu_P_pushforward(const Poly<S>& p, const TangentValue<S>& t) {
  if (p.is_zero() || !p.is_monic())
    throw std::invalid_argument("mu_P_pushforward: p must be monic");
  return TangentValue<S>(t.g + p.degree(), p * t.du, p * t.dv, p * t.dw);
}

/// sigma(A) = dim span(D_0|_A, ..., D_{g-1}|_A), exact.
int sigma_of_matrix(const MumfordMatrix<Rational>& a);
/// Float variant with tolerance-based rank.
int sigma_of_matrix(const MumfordMatrix<Cplx>& a, double eps = kDefaultEpsilon);

// ---------------------------------------------------------------------------
// Symbolic side: polynomial vector fields and Poisson structures.
// ---------------------------------------------------------------------------

/// The coordinate functions as symbolic polynomials, with the frozen
/// conventions u_g = 1, w_{g+1} = 1 and everything beyond equal to zero.
MPoly coord_u(int g, int k);
MPoly coord_v(int g, int k);
MPoly coord_w(int g, int k);

Poly<MPoly> symbolic_u(int g);
Poly<MPoly> symbolic_v(int g);
Poly<MPoly> symbolic_w(int g);

/// h_0, ..., h_{2g} as polynomials on M_g (the coefficients of v^2 + uw).
std::vector<MPoly> symbolic_moment_coeffs(int g);

/// A polynomial vector field on M_g: one component per coordinate, in the
/// flatten order.
struct SymbolicField {
  int g = 0;
  std::vector<MPoly> comps;  // size 3g+1

  bool is_zero() const;
  friend bool operator==(const SymbolicField& a, const SymbolicField& b) {
    return a.g == b.g && a.comps == b.comps;
  }
};

/// D_i with symbolic coordinates; entries are quadratic coordinate
/// polynomials.
SymbolicField symbolic_field(int g, int i);

TangentValue<Rational> evaluate(const SymbolicField& field,
                                const MumfordMatrix<Rational>& at);

std::vector<Rational> flatten_point(const MumfordMatrix<Rational>& a);

/// Lie derivative of f along the field: sum_k field_k * df/dz_k.
MPoly lie_derivative(const SymbolicField& field, const MPoly& f);

/// A Poisson structure given by its coordinate bracket table.
struct PoissonStructure {
  std::string id;
  int g = 0;
  /// Entries for index pairs (a, b) with a < b in flatten order; the table
  /// is extended by antisymmetry and zero diagonal.
  std::map<std::pair<int, int>, MPoly> table;

  MPoly bracket_coords(int a, int b) const;
};

PoissonStructure standard_structure(int g);
PoissonStructure star_structure(int g);
/// Entrywise sum; Jacobi for the sum is the compatibility statement.
PoissonStructure pencil_sum(const PoissonStructure& a, const PoissonStructure& b);

/// Rebuilds a bracket table from the generating-function kernels (divided
/// differences in two formal parameters); used to cross-validate the
/// coordinate tables.
std::map<std::pair<int, int>, MPoly> bracket_table_from_generating(int g, bool star);

/// {f, h} extended by bilinearity and Leibniz.
MPoly poisson_bracket(const PoissonStructure& ps, const MPoly& f, const MPoly& h);

/// X_f with the orientation X_f(z) = {z, f}.
SymbolicField hamiltonian_field(const PoissonStructure& ps, const MPoly& f);

/// {{f,h},k} + {{h,k},f} + {{k,f},h}, exactly.
MPoly jacobi_defect(const PoissonStructure& ps, const MPoly& f, const MPoly& h,
                    const MPoly& k);

// ---------------------------------------------------------------------------
// Pushforward identities along mu_P.
// ---------------------------------------------------------------------------

struct PushforwardReport {
  bool ok = true;
  int formal_checks = 0;
  int sampled_checks = 0;
  int shift_checks = 0;
  std::string detail;
};

/// Verifies D^{g+n}_y|_{PA} = P(y) mu_P*(D^g_y|_A) as a formal identity in y
/// (coefficient extraction) and at sampled rational y; for P = x^n also the
/// index-shift law with vanishing below n.
PushforwardReport pushforward_identity_check(const Poly<Rational>& p,
                                             const MumfordMatrix<Rational>& a,
                                             int trials, std::uint64_t seed);

}  // namespace mumford

#endif  // MUMFORD_DYNAMICS_HPP
