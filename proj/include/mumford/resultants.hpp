#ifndef MUMFORD_RESULTANTS_HPP
#define MUMFORD_RESULTANTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mumford/matrix.hpp"
#include "mumford/poly.hpp"

namespace mumford {

/// The multiplication matrix M_{R,l}: l rows, deg(R)+l columns; row j holds
/// the coefficients of x^j R(x) in the basis 1, x, ..., x^{deg R + l - 1}.
RMat build_mult_matrix(const Poly<Rational>& r, int l);

/// Same rows written in a wider basis (right padding with zero columns).
RMat build_mult_matrix(const Poly<Rational>& r, int l, int width);

/// Sylvester matrix S(P,Q)^t = [ M_{P,m} ; M_{Q,n} ], square of size n+m,
/// with q laid out against the degree bound m (>= max(1, deg q)).
RMat sylvester(const Poly<Rational>& p, const Poly<Rational>& q,
               std::optional<int> degree_bound = std::nullopt);

/// deg gcd(p, q) via dim Ker S(P,Q)^t. Convention gcd(p, 0) = p.
int gcd_degree_pair(const Poly<Rational>& p, const Poly<Rational>& q);

/// deg gcd(P_1, ..., P_k) via the kernel of stacked multiplication matrices.
/// Zero polynomials are skipped (they impose no condition). When shifts are
/// not supplied, every block M_{P_i, m - deg P_i} is given the common width
/// m = max(deg P_1 + 1, deg P_1 + max_{i>=2} deg P_i), which reproduces the
/// Sylvester layout for two polynomials. Caller-supplied shifts are honored
/// with right padding to the widest block.
int gcd_degree_multi(const std::vector<Poly<Rational>>& polys,
                     const std::vector<int>& shifts = {});

struct SubresultantReport {
  /// (index j, subresultant R_j) for j = 0..min(deg p, deg q).
  std::vector<std::pair<int, Poly<Rational>>> sequence;
  int first_nonzero = -1;
  Poly<Rational> gcd_candidate;
};

/// Subresultants as determinant polynomials of Sylvester submatrices:
/// R_j vanishes exactly for j < deg gcd, and R_{deg gcd} is a constant
/// multiple of the gcd.
SubresultantReport subresultant_sequence(const Poly<Rational>& p,
                                         const Poly<Rational>& q);

/// The closed conditions cutting out deg gcd(u,v,w) >= i, as the two-stage
/// subresultant chain: R_0(u,v) = ... = R_{i-1}(u,v) = 0, then the same for
/// (w, R_j(u,v)) at the first nonzero index j.
bool resultant_chain_conditions(const Poly<Rational>& u, const Poly<Rational>& v,
                                const Poly<Rational>& w, int i);

}  // namespace mumford

#endif  // MUMFORD_RESULTANTS_HPP
