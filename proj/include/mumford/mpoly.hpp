#ifndef MUMFORD_MPOLY_HPP
#define MUMFORD_MPOLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mumford/scalar.hpp"

namespace mumford {

using VarTable = std::shared_ptr<const std::vector<std::string>>;

VarTable make_var_table(std::vector<std::string> names);

/// Ordered coordinate names u_0..u_{g-1}, v_0..v_{g-1}, w_0..w_g of the
/// phase space of order g.
VarTable phase_vars(int g);
int u_index(int g, int k);
int v_index(int g, int k);
int w_index(int g, int k);

/// Sparse multivariate polynomial over the exact rationals in named
/// coordinates. No zero coefficients are stored; every exponent vector has
/// the table's length. A constant may carry a null table ("universal"
/// constant): it combines with any operand and adopts its table.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  MPoly() = default;
  static MPoly constant(const Rational& c, VarTable table = nullptr);
  static MPoly var(const VarTable& table, int index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant term (zero if absent).
  Rational constant_term() const;

  const VarTable& table() const { return table_; }
  int nvars() const { return table_ ? static_cast<int>(table_->size()) : 0; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  int total_degree() const;  // -1 for the zero polynomial

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& s, const MPoly& p);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly partial_derivative(int var) const;
  Rational substitute(const std::vector<Rational>& point) const;
  /// Composition: replaces variable k by images[k] (all over a shared new
  /// table); covers coordinate reindexing.
  MPoly substitute_vars(const std::vector<MPoly>& images) const;

  std::string str() const;

 private:
  void add_term(Exponents e, const Rational& c);
  static void align(MPoly& a, MPoly& b);

  VarTable table_;
  std::map<Exponents, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

template <>
struct scalar_traits<MPoly> {
  static constexpr bool is_exact = true;
  static constexpr bool is_field = false;
  static MPoly zero() { return MPoly(); }
  static MPoly one() { return MPoly::constant(Rational(1)); }
  static bool is_zero(const MPoly& x) { return x.is_zero(); }
  static bool approx_equal(const MPoly& a, const MPoly& b, double = 0.0) {
    return a == b;
  }
  static bool approx_zero(const MPoly& x, double = 0.0) { return x.is_zero(); }
};

}  // namespace mumford

#endif  // MUMFORD_MPOLY_HPP
