#ifndef MUMFORD_MATRIX_HPP
#define MUMFORD_MATRIX_HPP

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <utility>
#include <vector>

#include "mumford/poly.hpp"
#include "mumford/scalar.hpp"

namespace mumford {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RMat = Mat<Rational>;
using RVec = Vec<Rational>;
using CMat = Mat<Cplx>;

namespace detail {

/// Fraction-free (Bareiss) row echelon reduction in place. Returns the pivot
/// columns. Divisions are by the previous pivot only and stay exact; no
/// normalization until back-substitution.
inline std::vector<int> bareiss_echelon(RMat& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivot_cols;
  Rational prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = Rational(0);
    }
    prev = m(r, c);
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace detail

/// Exact rank over the rationals.
inline int rank(const RMat& m) {
  RMat work = m;
  return static_cast<int>(detail::bareiss_echelon(work).size());
}

/// Exact determinant (Bareiss: the last pivot of the fraction-free sweep).
inline Rational det(const RMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Rational(1);
  RMat work = m;
  Rational prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (!work(i, k).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      work.row(pivot).swap(work.row(k));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        work(i, j) = (work(k, k) * work(i, j) - work(i, k) * work(k, j)) / prev;
      work(i, k) = Rational(0);
    }
    prev = work(k, k);
  }
  return sign > 0 ? work(n - 1, n - 1) : -work(n - 1, n - 1);
}

/// Basis of the right kernel { v : m v = 0 }. Exact mode only.
inline std::vector<RVec> kernel_basis(const RMat& m) {
  RMat work = m;
  const std::vector<int> pivot_cols = detail::bareiss_echelon(work);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RVec v = RVec::Zero(cols);
    v(free) = Rational(1);
    for (int r = static_cast<int>(pivot_cols.size()) - 1; r >= 0; --r) {
      const int pc = pivot_cols[static_cast<std::size_t>(r)];
      Rational acc(0);
      for (int j = pc + 1; j < cols; ++j) acc += work(r, j) * v(j);
      v(pc) = -acc / work(r, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Numerical rank with full pivoting; a pivot counts while its magnitude
/// exceeds eps relative to max(1, largest entry of the input).
inline int rank(const CMat& m, double eps = kDefaultEpsilon) {
  CMat work = m;
  const int rows = static_cast<int>(work.rows());
  const int cols = static_cast<int>(work.cols());
  double top = 0.0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) top = std::max(top, std::abs(work(i, j)));
  const double cut = eps * std::max(1.0, top);
  int r = 0;
  std::vector<bool> used_col(static_cast<std::size_t>(cols), false);
  while (r < rows) {
    int bi = -1, bj = -1;
    double best = cut;
    for (int i = r; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (used_col[static_cast<std::size_t>(j)]) continue;
        const double a = std::abs(work(i, j));
        if (a > best) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    if (bi != r) work.row(bi).swap(work.row(r));
    used_col[static_cast<std::size_t>(bj)] = true;
    for (int i = r + 1; i < rows; ++i) {
      const Cplx f = work(i, bj) / work(r, bj);
      for (int j = 0; j < cols; ++j) work(i, j) -= f * work(r, j);
      work(i, bj) = Cplx(0, 0);
    }
    ++r;
  }
  return r;
}

/// Falling factorial k(k-1)...(k-t+1), with ff(k,0) = 1.
inline Rational falling_factorial(int k, int t) {
  Rational acc(1);
  for (int s = 0; s < t; ++s) acc *= Rational(k - s);
  return acc;
}

/// The explicit kernel basis of M_{P,l} for P = prod (x-alpha_i)^{n_i}:
/// one derivative-evaluation vector per root and derivative order. Entry k
/// of the (alpha, j) vector is the (j-1)-th derivative of x^k at alpha, so
/// M_{P,l} v evaluates (j-1)-th derivatives of x^r P at alpha, which vanish
/// while j <= mult(alpha).
inline std::vector<RVec> confluent_vandermonde_kernel(
    const std::vector<std::pair<Rational, int>>& roots, int l) {
  if (l < 1) throw std::invalid_argument("confluent_vandermonde_kernel needs l >= 1");
  int n = 0;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    if (roots[a].second < 1)
      throw std::invalid_argument("root multiplicities must be positive");
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (roots[a].first == roots[b].first)
        throw std::invalid_argument("repeated root in confluent kernel input");
    n += roots[a].second;
  }
  const int len = n + l;
  std::vector<RVec> basis;
  for (const auto& [alpha, mult] : roots) {
    for (int j = 1; j <= mult; ++j) {
      RVec v = RVec::Zero(len);
      for (int k = j - 1; k < len; ++k) {
        Rational p(1);
        for (int t = 0; t < k - j + 1; ++t) p *= alpha;
        v(k) = falling_factorial(k, j - 1) * p;
      }
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

template <typename S>
Mat<S> matrix_from_rows(const std::vector<std::vector<S>>& rows, int cols) {
  Mat<S> m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("ragged rows in matrix_from_rows");
    for (int j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  return m;
}

}  // namespace mumford

#endif  // MUMFORD_MATRIX_HPP
