#include "mumford/resultants.hpp"

#include <algorithm>
#include <stdexcept>

namespace mumford {

RMat build_mult_matrix(const Poly<Rational>& r, int l, int width) {
  if (l < 1) throw std::invalid_argument("build_mult_matrix needs l >= 1");
  if (r.is_zero()) throw std::invalid_argument("build_mult_matrix of the zero polynomial");
  const int k = r.degree();
  if (width < k + l) throw std::invalid_argument("build_mult_matrix width too small");
  RMat m = RMat::Zero(l, width);
  for (int j = 0; j < l; ++j)
    for (int t = 0; t <= k; ++t) m(j, j + t) = r.coeff(t);
  return m;
}

RMat build_mult_matrix(const Poly<Rational>& r, int l) {
  if (r.is_zero()) throw std::invalid_argument("build_mult_matrix of the zero polynomial");
  return build_mult_matrix(r, l, r.degree() + l);
}

RMat sylvester(const Poly<Rational>& p, const Poly<Rational>& q,
               std::optional<int> degree_bound) {
  if (!p.is_monic()) throw std::invalid_argument("sylvester: first polynomial must be monic");
  if (q.is_zero()) throw std::invalid_argument("sylvester: second polynomial is zero");
  const int n = p.degree();
  const int m = degree_bound.value_or(std::max(1, q.degree()));
  if (m < std::max(1, q.degree()))
    throw std::invalid_argument("sylvester: degree bound below deg q");
  const int width = n + m;
  RMat s = RMat::Zero(width, width);
  if (m > 0) s.topRows(m) = build_mult_matrix(p, m, width);
  if (n > 0) s.bottomRows(n) = build_mult_matrix(q, n, width);
  return s;
}

int gcd_degree_pair(const Poly<Rational>& p, const Poly<Rational>& q) {
  if (!p.is_monic()) throw std::invalid_argument("gcd_degree_pair: p must be monic");
  if (q.is_zero()) return p.degree();
  const RMat s = sylvester(p, q);
  return static_cast<int>(s.cols()) - rank(s);
}

int gcd_degree_multi(const std::vector<Poly<Rational>>& polys,
                     const std::vector<int>& shifts) {
  if (polys.empty()) throw std::invalid_argument("gcd_degree_multi of an empty list");
  if (!shifts.empty() && shifts.size() != polys.size())
    throw std::invalid_argument("gcd_degree_multi: one shift per polynomial");
  if (polys.front().is_zero() || !polys.front().is_monic())
    throw std::invalid_argument("gcd_degree_multi: first polynomial must be monic");

  std::vector<const Poly<Rational>*> used;
  std::vector<int> used_shifts;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (polys[k].is_zero()) continue;
    used.push_back(&polys[k]);
    if (!shifts.empty()) used_shifts.push_back(shifts[k]);
  }

  const int n1 = used.front()->degree();
  if (n1 == 0) return 0;  // the gcd against a monic constant is 1
  int width;
  if (used_shifts.empty()) {
    int max_rest = 0;
    for (std::size_t k = 1; k < used.size(); ++k)
      max_rest = std::max(max_rest, used[k]->degree());
    width = std::max(n1 + 1, n1 + max_rest);
    for (const auto* p : used) used_shifts.push_back(width - p->degree());
  } else {
    width = 0;
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (used_shifts[k] < 1)
        throw std::invalid_argument("gcd_degree_multi: shifts must be >= 1");
      width = std::max(width, used[k]->degree() + used_shifts[k]);
    }
  }

  int total_rows = 0;
  for (int s : used_shifts) total_rows += s;
  RMat stacked = RMat::Zero(total_rows, width);
  int row = 0;
  for (std::size_t k = 0; k < used.size(); ++k) {
    stacked.middleRows(row, used_shifts[k]) =
        build_mult_matrix(*used[k], used_shifts[k], width);
    row += used_shifts[k];
  }
  return width - rank(stacked);
}

namespace {

// Determinant polynomial of a rows x width coefficient matrix in the
// descending basis x^{width-1}, ..., 1: sum over t >= rows-1 of
// det(columns 0..rows-2 and t) * x^{width-1-t}.
Poly<Rational> determinant_polynomial(const std::vector<Poly<Rational>>& rows, int width) {
  const int r = static_cast<int>(rows.size());
  std::vector<Rational> coeffs(static_cast<std::size_t>(width), Rational(0));
  RMat base(r, r);
  for (int t = r - 1; t < width; ++t) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r - 1; ++j) base(i, j) = rows[static_cast<std::size_t>(i)].coeff(width - 1 - j);
      base(i, r - 1) = rows[static_cast<std::size_t>(i)].coeff(width - 1 - t);
    }
    coeffs[static_cast<std::size_t>(width - 1 - t)] = det(base);
  }
  return Poly<Rational>(std::move(coeffs));
}

}  // namespace

SubresultantReport subresultant_sequence(const Poly<Rational>& p, const Poly<Rational>& q) {
  if (!p.is_monic()) throw std::invalid_argument("subresultant_sequence: p must be monic");
  if (q.is_zero()) throw std::invalid_argument("subresultant_sequence: q must be nonzero");
  const int n = p.degree();
  const int m = q.degree();
  SubresultantReport report;
  for (int j = 0; j <= std::min(n, m); ++j) {
    Poly<Rational> rj;
    if (j == n && j == m) {
      rj = q;  // the sequence bottoms out on proportional polynomials
    } else {
      std::vector<Poly<Rational>> rows;
      for (int s = m - j - 1; s >= 0; --s) rows.push_back(shift_up(p, s));
      for (int s = n - j - 1; s >= 0; --s) rows.push_back(shift_up(q, s));
      rj = determinant_polynomial(rows, n + m - j);
    }
    if (report.first_nonzero < 0 && !rj.is_zero()) report.first_nonzero = j;
    report.sequence.emplace_back(j, std::move(rj));
  }
  if (report.first_nonzero < 0)
    throw std::logic_error("subresultant sequence vanished identically");
  report.gcd_candidate =
      monic(report.sequence[static_cast<std::size_t>(report.first_nonzero)].second);
  return report;
}

bool resultant_chain_conditions(const Poly<Rational>& u, const Poly<Rational>& v,
                                const Poly<Rational>& w, int i) {
  if (!u.is_monic() || !w.is_monic())
    throw std::invalid_argument("resultant_chain_conditions: u, w must be monic");
  if (i < 0) throw std::invalid_argument("resultant_chain_conditions: negative index");
  if (i == 0) return true;

  // Stage one: R_0(u,v) = ... = R_{i-1}(u,v) = 0, i.e. deg gcd(u,v) >= i.
  Poly<Rational> stage_gcd;
  if (v.is_zero()) {
    stage_gcd = u;
  } else {
    const SubresultantReport uv = subresultant_sequence(u, v);
    for (const auto& [j, rj] : uv.sequence)
      if (j < i && !rj.is_zero()) return false;
    if (uv.first_nonzero < i) return false;
    stage_gcd = uv.gcd_candidate;
  }
  if (stage_gcd.degree() < i) return false;

  // Stage two against w, with the first-stage subresultant standing in for
  // gcd(u, v).
  const SubresultantReport wg = subresultant_sequence(w, stage_gcd);
  for (const auto& [j, rj] : wg.sequence)
    if (j < i && !rj.is_zero()) return false;
  return wg.first_nonzero >= i;
}

}  // namespace mumford
