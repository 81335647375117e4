#ifndef MUMFORD_FLOW_HPP
#define MUMFORD_FLOW_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mumford/dynamics.hpp"
#include "mumford/mumford.hpp"

namespace mumford {

struct FlowReport {
  int steps = 0;
  double t_final = 0.0;
  double dt = 0.0;
  std::vector<double> initial_h;        // |h_j(a(0))|
  std::vector<double> max_abs_drift;    // max_t |h_j(a(t)) - h_j(a(0))|
  double max_rel_drift = 0.0;
  std::vector<Cplx> final_state;
};

namespace detail {

inline MumfordMatrix<Cplx> matrix_from_state(int g, const std::vector<Cplx>& z) {
  std::vector<Cplx> uc(z.begin(), z.begin() + g);
  uc.push_back(Cplx(1, 0));
  std::vector<Cplx> vc(z.begin() + g, z.begin() + 2 * g);
  std::vector<Cplx> wc(z.begin() + 2 * g, z.begin() + 3 * g + 1);
  wc.push_back(Cplx(1, 0));
  return MumfordMatrix<Cplx>(g, Poly<Cplx>(std::move(uc)), Poly<Cplx>(std::move(vc)),
                             Poly<Cplx>(std::move(wc)));
}

inline std::vector<Cplx> state_from_matrix(const MumfordMatrix<Cplx>& a) {
  std::vector<Cplx> z;
  for (int k = 0; k < a.g; ++k) z.push_back(a.u.coeff(k));
  for (int k = 0; k < a.g; ++k) z.push_back(a.v.coeff(k));
  for (int k = 0; k <= a.g; ++k) z.push_back(a.w.coeff(k));
  return z;
}

}  // namespace detail

/// Classical fixed-step RK4 on the flattened coordinates with derivative
/// D_i; reports the worst conservation drift of every h_j over the run.
inline FlowReport flow_integrate(const MumfordMatrix<Cplx>& a0, int i, double t_final,
                                 double dt) {
  if (i < 0 || i >= a0.g) throw std::invalid_argument("flow_integrate: need 0 <= i < g");
  if (!(dt > 0.0) || !(t_final >= 0.0))
    throw std::invalid_argument("flow_integrate: need dt > 0 and t_final >= 0");
  if (dt < 1e-12 * std::max(1.0, t_final))
    throw std::invalid_argument("flow_integrate: step underflow");
  const int g = a0.g;
  const int dim = 3 * g + 1;
  const int steps = static_cast<int>(std::llround(t_final / dt));

  auto deriv = [g, i](const std::vector<Cplx>& z) {
    const auto tangent = lax_field_i(detail::matrix_from_state(g, z), i);
    const Vec<Cplx> flat = tangent.flatten();
    return std::vector<Cplx>(flat.data(), flat.data() + flat.size());
  };
  auto conserved = [g](const std::vector<Cplx>& z) {
    const Poly<Cplx> h = moment_map(detail::matrix_from_state(g, z)).h;
    std::vector<Cplx> out;
    for (int j = 0; j <= 2 * g; ++j) out.push_back(h.coeff(j));
    return out;
  };

  std::vector<Cplx> z = detail::state_from_matrix(a0);
  const std::vector<Cplx> h0 = conserved(z);

  FlowReport report;
  report.steps = steps;
  report.t_final = t_final;
  report.dt = dt;
  for (const auto& h : h0) report.initial_h.push_back(std::abs(h));
  report.max_abs_drift.assign(h0.size(), 0.0);

  std::vector<Cplx> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  for (int step = 0; step < steps; ++step) {
    k1 = deriv(z);
    for (int d = 0; d < dim; ++d) tmp[d] = z[d] + 0.5 * dt * k1[d];
    k2 = deriv(tmp);
    for (int d = 0; d < dim; ++d) tmp[d] = z[d] + 0.5 * dt * k2[d];
    k3 = deriv(tmp);
    for (int d = 0; d < dim; ++d) tmp[d] = z[d] + dt * k3[d];
    k4 = deriv(tmp);
    for (int d = 0; d < dim; ++d)
      z[d] += dt / 6.0 * (k1[d] + 2.0 * (k2[d] + k3[d]) + k4[d]);
    for (const auto& c : z)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw std::runtime_error("flow_integrate: non-finite state");
    const std::vector<Cplx> h = conserved(z);
    for (std::size_t j = 0; j < h.size(); ++j)
      report.max_abs_drift[j] = std::max(report.max_abs_drift[j], std::abs(h[j] - h0[j]));
  }
  for (std::size_t j = 0; j < h0.size(); ++j) {
    const double scale = std::max(1.0, report.initial_h[j]);
    report.max_rel_drift = std::max(report.max_rel_drift, report.max_abs_drift[j] / scale);
  }
  report.final_state = z;
  return report;
}

}  // namespace mumford

#endif  // MUMFORD_FLOW_HPP
