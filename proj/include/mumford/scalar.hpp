#ifndef MUMFORD_SCALAR_HPP
#define MUMFORD_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace mumford {

/// Exact coefficient field: arbitrary-precision rationals, always kept in
/// lowest terms with positive denominator (GMP canonical form).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Approximate coefficient field for the sampler's square-root mode and for
/// flow integration.
using Cplx = std::complex<double>;

inline constexpr double kDefaultEpsilon = 1e-9;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(Integer(num), Integer(den));
}

/// Parses "num/den" or "num" (base 10). The result is canonicalized.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  Rational r;
  try {
    if (slash == std::string::npos) {
      r = Rational(Integer(text), Integer(1));
    } else {
      Integer num(text.substr(0, slash));
      Integer den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      if (den < 0) {
        num = -num;
        den = -den;
      }
      r = Rational(num, den);
    }
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: \"" + text + "\"");
  }
  return r;
}

/// Canonical "num/den" form, e.g. "-1/3", "5/1".
inline std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline Cplx to_cplx(const Rational& r) { return Cplx(to_double(r), 0.0); }

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer num = numerator(r), den = denominator(r);
  const Integer sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr bool is_field = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool approx_equal(const Rational& a, const Rational& b, double = 0.0) {
    return a == b;
  }
  static bool approx_zero(const Rational& x, double = 0.0) { return x.is_zero(); }
  static double magnitude(const Rational& x) { return std::abs(to_double(x)); }
};

template <>
struct scalar_traits<Cplx> {
  static constexpr bool is_exact = false;
  static constexpr bool is_field = true;
  static Cplx zero() { return Cplx(0.0, 0.0); }
  static Cplx one() { return Cplx(1.0, 0.0); }
  static bool is_zero(const Cplx& x) { return x == Cplx(0.0, 0.0); }
  // Hybrid tolerance: absolute below magnitude 1, relative above.
  static bool approx_equal(const Cplx& a, const Cplx& b, double eps = kDefaultEpsilon) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= eps * scale;
  }
  static bool approx_zero(const Cplx& x, double eps = kDefaultEpsilon) {
    return std::abs(x) <= eps;
  }
  static double magnitude(const Cplx& x) { return std::abs(x); }
};

}  // namespace mumford

#endif  // MUMFORD_SCALAR_HPP
