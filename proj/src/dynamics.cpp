#include "mumford/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace mumford {

int sigma_of_matrix(const MumfordMatrix<Rational>& a) {
  if (a.g == 0) return 0;
  RMat m(a.g, 3 * a.g + 1);
  for (int i = 0; i < a.g; ++i) m.row(i) = lax_field_i(a, i).flatten().transpose();
  return rank(m);
}

int sigma_of_matrix(const MumfordMatrix<Cplx>& a, double eps) {
  if (a.g == 0) return 0;
  CMat m(a.g, 3 * a.g + 1);
  for (int i = 0; i < a.g; ++i) m.row(i) = lax_field_i(a, i).flatten().transpose();
  return rank(m, eps);
}

MPoly coord_u(int g, int k) {
  if (k < 0) throw std::invalid_argument("coord_u: negative index");
  if (k < g) return MPoly::var(phase_vars(g), u_index(g, k));
  if (k == g) return MPoly::constant(Rational(1), phase_vars(g));
  return MPoly::constant(Rational(0), phase_vars(g));
}

MPoly coord_v(int g, int k) {
  if (k < 0) throw std::invalid_argument("coord_v: negative index");
  if (k < g) return MPoly::var(phase_vars(g), v_index(g, k));
  return MPoly::constant(Rational(0), phase_vars(g));
}

MPoly coord_w(int g, int k) {
  if (k < 0) throw std::invalid_argument("coord_w: negative index");
  if (k <= g) return MPoly::var(phase_vars(g), w_index(g, k));
  if (k == g + 1) return MPoly::constant(Rational(1), phase_vars(g));
  return MPoly::constant(Rational(0), phase_vars(g));
}

Poly<MPoly> symbolic_u(int g) {
  std::vector<MPoly> c;
  for (int k = 0; k <= g; ++k) c.push_back(coord_u(g, k));
  return Poly<MPoly>(std::move(c));
}

Poly<MPoly> symbolic_v(int g) {
  std::vector<MPoly> c;
  for (int k = 0; k < g; ++k) c.push_back(coord_v(g, k));
  return Poly<MPoly>(std::move(c));
}

Poly<MPoly> symbolic_w(int g) {
  std::vector<MPoly> c;
  for (int k = 0; k <= g + 1; ++k) c.push_back(coord_w(g, k));
  return Poly<MPoly>(std::move(c));
}

std::vector<MPoly> symbolic_moment_coeffs(int g) {
  const Poly<MPoly> h = symbolic_v(g) * symbolic_v(g) + symbolic_u(g) * symbolic_w(g);
  if (h.degree() != 2 * g + 1 || !(h.leading() == scalar_traits<MPoly>::one()))
    throw std::logic_error("symbolic moment map is not monic of degree 2g+1");
  std::vector<MPoly> out;
  for (int i = 0; i <= 2 * g; ++i) out.push_back(h.coeff(i));
  return out;
}

bool SymbolicField::is_zero() const {
  return std::all_of(comps.begin(), comps.end(),
                     [](const MPoly& c) { return c.is_zero(); });
}

SymbolicField symbolic_field(int g, int i) {
  if (i < 0 || i >= g) throw std::invalid_argument("symbolic_field: need 0 <= i < g");
  const Poly<MPoly> u = symbolic_u(g), v = symbolic_v(g), w = symbolic_w(g);
  const Poly<MPoly> b11 = truncate_div(v, i + 1);
  const Poly<MPoly> b12 = truncate_div(u, i + 1);
  const Poly<MPoly> b21 = truncate_div(w, i + 1) - Poly<MPoly>(u.coeff(i));
  auto parts = detail::lax_commutator(u, v, w, b11, b12, b21);
  SymbolicField field;
  field.g = g;
  field.comps.resize(static_cast<std::size_t>(3 * g + 1));
  if (parts.du.degree_or(-1) > g - 1 || parts.dv.degree_or(-1) > g - 1 ||
      parts.dw.degree_or(-1) > g)
    throw std::logic_error("symbolic_field: degree bounds violated");
  for (int k = 0; k < g; ++k) field.comps[static_cast<std::size_t>(u_index(g, k))] = parts.du.coeff(k);
  for (int k = 0; k < g; ++k) field.comps[static_cast<std::size_t>(v_index(g, k))] = parts.dv.coeff(k);
  for (int k = 0; k <= g; ++k) field.comps[static_cast<std::size_t>(w_index(g, k))] = parts.dw.coeff(k);
  return field;
}

std::vector<Rational> flatten_point(const MumfordMatrix<Rational>& a) {
  std::vector<Rational> z(static_cast<std::size_t>(3 * a.g + 1));
  for (int k = 0; k < a.g; ++k) z[static_cast<std::size_t>(u_index(a.g, k))] = a.u.coeff(k);
  for (int k = 0; k < a.g; ++k) z[static_cast<std::size_t>(v_index(a.g, k))] = a.v.coeff(k);
  for (int k = 0; k <= a.g; ++k) z[static_cast<std::size_t>(w_index(a.g, k))] = a.w.coeff(k);
  return z;
}

TangentValue<Rational> evaluate(const SymbolicField& field,
                                const MumfordMatrix<Rational>& at) {
  if (field.g != at.g) throw std::invalid_argument("evaluate: order mismatch");
  const std::vector<Rational> z = flatten_point(at);
  const int g = field.g;
  std::vector<Rational> du(static_cast<std::size_t>(g)), dv(static_cast<std::size_t>(g)),
      dw(static_cast<std::size_t>(g + 1));
  for (int k = 0; k < g; ++k) du[static_cast<std::size_t>(k)] = field.comps[static_cast<std::size_t>(u_index(g, k))].substitute(z);
  for (int k = 0; k < g; ++k) dv[static_cast<std::size_t>(k)] = field.comps[static_cast<std::size_t>(v_index(g, k))].substitute(z);
  for (int k = 0; k <= g; ++k) dw[static_cast<std::size_t>(k)] = field.comps[static_cast<std::size_t>(w_index(g, k))].substitute(z);
  return TangentValue<Rational>(g, Poly<Rational>(std::move(du)),
                                Poly<Rational>(std::move(dv)),
                                Poly<Rational>(std::move(dw)));
}

MPoly lie_derivative(const SymbolicField& field, const MPoly& f) {
  MPoly acc;
  for (std::size_t k = 0; k < field.comps.size(); ++k)
    acc = acc + field.comps[k] * f.partial_derivative(static_cast<int>(k));
  return acc;
}

MPoly PoissonStructure::bracket_coords(int a, int b) const {
  if (a == b) return MPoly();
  const bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = table.find({a, b});
  MPoly val = it == table.end() ? MPoly() : it->second;
  return flip ? -val : val;
}

namespace {

enum class Family { U, V, W };

struct CoordRef {
  Family fam;
  int k;
};

CoordRef coord_ref(int g, int idx) {
  if (idx < g) return {Family::U, idx};
  if (idx < 2 * g) return {Family::V, idx - g};
  return {Family::W, idx - 2 * g};
}

/// The coordinate bracket tables. `shifted` distinguishes the two members of
/// the pencil: the phase-space structure pairs (a, b) with index a+b+1; the
/// ascending structure pairs through a+b with boundary terms out of the
/// generating kernels.
MPoly table_entry(int g, bool shifted, const CoordRef& A, const CoordRef& B) {
  const Rational two(2);
  if (A.fam == B.fam && (A.fam == Family::U || A.fam == Family::V)) return MPoly();
  if (!shifted) {
    const int s = A.k + B.k + 1;
    if (A.fam == Family::U && B.fam == Family::V) return coord_u(g, s);
    if (A.fam == Family::U && B.fam == Family::W) return Rational(-2) * coord_v(g, s);
    if (A.fam == Family::V && B.fam == Family::W) {
      MPoly r = coord_w(g, s);
      if (B.k == 0) r = r - coord_u(g, A.k);
      return r;
    }
    if (A.fam == Family::W && B.fam == Family::W) {
      MPoly r;
      if (B.k == 0) r = r + two * coord_v(g, A.k);
      if (A.k == 0) r = r - two * coord_v(g, B.k);
      return r;
    }
  } else {
    const int s = A.k + B.k;
    if (A.fam == Family::U && B.fam == Family::V) {
      if (A.k >= 1 && B.k >= 1) return coord_u(g, s);
      if (A.k == 0 && B.k == 0) return -coord_u(g, 0);
      return MPoly();
    }
    if (A.fam == Family::U && B.fam == Family::W) {
      if (A.k >= 1 && B.k >= 1) return Rational(-2) * coord_v(g, s);
      if (A.k == 0 && B.k == 0) return two * coord_v(g, 0);
      return MPoly();
    }
    if (A.fam == Family::V && B.fam == Family::W) {
      MPoly r;
      if (A.k >= 1 && B.k >= 1) r = coord_w(g, s);
      if (A.k == 0 && B.k == 0) r = -coord_w(g, 0);
      if (B.k == 1) r = r - coord_u(g, A.k);
      return r;
    }
    if (A.fam == Family::W && B.fam == Family::W) {
      MPoly r;
      if (B.k == 1) r = r + two * coord_v(g, A.k);
      if (A.k == 1) r = r - two * coord_v(g, B.k);
      return r;
    }
  }
  throw std::logic_error("table_entry: unordered family pair");
}

PoissonStructure build_structure(int g, bool shifted, const std::string& id) {
  PoissonStructure ps;
  ps.id = id;
  ps.g = g;
  const int n = 3 * g + 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      CoordRef ra = coord_ref(g, a), rb = coord_ref(g, b);
      // Families are ordered u < v < w along the flatten order.
      MPoly entry = table_entry(g, shifted, ra, rb);
      if (!entry.is_zero()) ps.table.emplace(std::make_pair(a, b), std::move(entry));
    }
  return ps;
}

}  // namespace

PoissonStructure standard_structure(int g) { return build_structure(g, false, "standard"); }
PoissonStructure star_structure(int g) { return build_structure(g, true, "star"); }

PoissonStructure pencil_sum(const PoissonStructure& a, const PoissonStructure& b) {
  if (a.g != b.g) throw std::invalid_argument("pencil_sum: order mismatch");
  PoissonStructure out;
  out.id = a.id + "+" + b.id;
  out.g = a.g;
  const int n = 3 * a.g + 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MPoly e = a.bracket_coords(i, j) + b.bracket_coords(i, j);
      if (!e.is_zero()) out.table.emplace(std::make_pair(i, j), std::move(e));
    }
  return out;
}

std::map<std::pair<int, int>, MPoly> bracket_table_from_generating(int g, bool star) {
  using BP = BiPoly<MPoly>;
  const Poly<MPoly> u = symbolic_u(g), v = symbolic_v(g), w = symbolic_w(g);
  const BP y = BP::term(0, 1, scalar_traits<MPoly>::one());
  const BP x = BP::term(1, 0, scalar_traits<MPoly>::one());
  const MPoly two = MPoly::constant(Rational(2));
  const MPoly minus_two = MPoly::constant(Rational(-2));

  BP k_uv, k_uw, k_vw, k_ww;
  if (!star) {
    k_uv = divided_difference(u);
    k_uw = minus_two * divided_difference(v);
    k_vw = divided_difference(w) - BP::from_x(u);
    k_ww = two * (BP::from_x(v) - BP::from_y(v));
  } else {
    // The kernels of the ascending bracket: (p(x)y - p(y)x)/(x-y) written as
    // y*dd(p) - p(y), and the correction -y u(x).
    k_uv = y * divided_difference(u) - BP::from_y(u);
    k_uw = minus_two * (y * divided_difference(v) - BP::from_y(v));
    k_vw = (y * divided_difference(w) - BP::from_y(w)) - y * BP::from_x(u);
    k_ww = two * (BP::from_x(v) * y - BP::from_y(v) * x);
  }

  std::map<std::pair<int, int>, MPoly> table;
  auto put = [&](int a, int b, const MPoly& val) {
    if (!val.is_zero()) table.emplace(std::make_pair(a, b), val);
  };
  for (int a = 0; a < g; ++a) {
    for (int b = 0; b < g; ++b) put(u_index(g, a), v_index(g, b), k_uv.coeff(a, b));
    for (int b = 0; b <= g; ++b) put(u_index(g, a), w_index(g, b), k_uw.coeff(a, b));
  }
  for (int a = 0; a < g; ++a)
    for (int b = 0; b <= g; ++b) put(v_index(g, a), w_index(g, b), k_vw.coeff(a, b));
  for (int a = 0; a <= g; ++a)
    for (int b = a + 1; b <= g; ++b) put(w_index(g, a), w_index(g, b), k_ww.coeff(a, b));
  return table;
}

MPoly poisson_bracket(const PoissonStructure& ps, const MPoly& f, const MPoly& h) {
  const int n = 3 * ps.g + 1;
  MPoly acc;
  for (const auto& [key, entry] : ps.table) {
    const auto [a, b] = key;
    if (a >= n || b >= n) throw std::logic_error("bracket table index out of range");
    acc = acc + entry * (f.partial_derivative(a) * h.partial_derivative(b) -
                         f.partial_derivative(b) * h.partial_derivative(a));
  }
  return acc;
}

SymbolicField hamiltonian_field(const PoissonStructure& ps, const MPoly& f) {
  const int n = 3 * ps.g + 1;
  SymbolicField field;
  field.g = ps.g;
  field.comps.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    MPoly acc;
    for (int b = 0; b < n; ++b) {
      if (b == k) continue;
      const MPoly entry = ps.bracket_coords(k, b);
      if (entry.is_zero()) continue;
      acc = acc + entry * f.partial_derivative(b);
    }
    field.comps[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return field;
}

MPoly jacobi_defect(const PoissonStructure& ps, const MPoly& f, const MPoly& h,
                    const MPoly& k) {
  return poisson_bracket(ps, poisson_bracket(ps, f, h), k) +
         poisson_bracket(ps, poisson_bracket(ps, h, k), f) +
         poisson_bracket(ps, poisson_bracket(ps, k, f), h);
}

PushforwardReport pushforward_identity_check(const Poly<Rational>& p,
                                             const MumfordMatrix<Rational>& a,
                                             int trials, std::uint64_t seed) {
  PushforwardReport report;
  if (p.is_zero() || !p.is_monic())
    throw std::invalid_argument("pushforward_identity_check: p must be monic");
  const int n = p.degree();
  const int g = a.g;
  const MumfordMatrix<Rational> pa = mu_P(p, a);

  auto fail = [&](const std::string& what) {
    report.ok = false;
    if (!report.detail.empty()) report.detail += "; ";
    report.detail += what;
  };

  // Formal identity: D^{g+n}_k|_{PA} = sum_{t+i=k} p_t * P*(D^g_i|_A).
  std::vector<TangentValue<Rational>> pushed;
  for (int i = 0; i < g; ++i) pushed.push_back(mu_P_pushforward(p, lax_field_i(a, i)));
  for (int k = 0; k < g + n; ++k) {
    TangentValue<Rational> expect = TangentValue<Rational>::zero(g + n);
    for (int i = 0; i < g; ++i) {
      const int t = k - i;
      if (t < 0 || t > n) continue;
      const Rational pt = p.coeff(t);
      if (pt.is_zero()) continue;
      expect = expect + pt * pushed[static_cast<std::size_t>(i)];
    }
    ++report.formal_checks;
    if (!(lax_field_i(pa, k) == expect)) fail("formal coefficient " + std::to_string(k));
  }

  // Sampled spectral parameters.
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Rational y = rng.rational(6, 3);
    const TangentValue<Rational> lhs = lax_field_at(pa, y);
    const TangentValue<Rational> rhs = p(y) * mu_P_pushforward(p, lax_field_at(a, y));
    ++report.sampled_checks;
    if (!(lhs == rhs)) fail("sampled y #" + std::to_string(t));
  }

  // P = x^n: the index-shift law.
  if (p == Poly<Rational>::monomial(n) && n >= 1) {
    for (int k = 0; k < n; ++k) {
      ++report.shift_checks;
      if (!lax_field_i(pa, k).is_zero()) fail("shift law: nonzero below n");
    }
    for (int i = 0; i < g; ++i) {
      ++report.shift_checks;
      if (!(lax_field_i(pa, n + i) == pushed[static_cast<std::size_t>(i)]))
        fail("shift law at index " + std::to_string(n + i));
    }
  }
  return report;
}

}  // namespace mumford
