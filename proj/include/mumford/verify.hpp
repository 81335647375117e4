#ifndef MUMFORD_VERIFY_HPP
#define MUMFORD_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mumford {

struct CheckCount {
  std::string tag;  // stable identifier of the law being checked, e.g. "d0", "rp"
  int pass = 0;
  int fail = 0;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckCount> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c.fail != 0) return false;
    return true;
  }
  CheckCount& at(const std::string& tag);
  void tally(const std::string& tag, bool passed);
  void merge(const VerifyReport& other);
};

/// Subresultant / Sylvester / multi-gcd conformance against the Euclid
/// oracle (tags d0, rp, thPG, oK, dim).
VerifyReport verify_resultants(std::uint64_t seed);

/// Bracket tables, Jacobi, compatibility, Lax/Hamiltonian equality,
/// involutivity, tangency, the mu_x morphism (tags poi, Eq11, jacobi, c1,
/// 1bis, tangency, morphism).
VerifyReport verify_poisson(std::uint64_t seed);

/// Stratification: sigma/rho laws, pushforward identities, Jacobian rank
/// law, fiber lattices, sampler round trips, smoothness (tags theo1, prop1,
/// lem1, coco, p48, p_at, coro_X, t43, n, PG, SM, aze).
VerifyReport verify_strata(std::uint64_t seed);

VerifyReport verify_all(std::uint64_t seed);

}  // namespace mumford

#endif  // MUMFORD_VERIFY_HPP
