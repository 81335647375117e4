#ifndef MUMFORD_RNG_HPP
#define MUMFORD_RNG_HPP

#include <cstdint>
#include <random>

#include "mumford/scalar.hpp"

namespace mumford {

/// Deterministic seeded generator. Raw mt19937_64 output is mapped to ranges
/// by modulo so that identical seeds give identical streams on every
/// platform (std::uniform_int_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform-ish integer in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  bool coin() { return (gen_() & 1) != 0; }

  /// Small rational with numerator in [-max_num, max_num], denominator in
  /// [1, max_den].
  Rational rational(long max_num, long max_den = 1) {
    return make_rational(uniform(-max_num, max_num), uniform(1, max_den));
  }

  double real(double lo, double hi) {
    const double t = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + t * (hi - lo);
  }

  Rng fork() { return Rng(gen_()); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mumford

#endif  // MUMFORD_RNG_HPP
