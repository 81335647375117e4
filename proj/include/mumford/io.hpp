#ifndef MUMFORD_IO_HPP
#define MUMFORD_IO_HPP

#include <json.hpp>

#include "mumford/dynamics.hpp"
#include "mumford/matrix.hpp"
#include "mumford/mumford.hpp"
#include "mumford/strata.hpp"

namespace mumford {

using Json = nlohmann::ordered_json;

// Exact polynomials travel as {"coeffs": ["num/den", ...]} in ascending
// degree; complex scalars as [re, im].
Json to_json(const Rational& r);
Json to_json(const Cplx& z);
Json to_json(const Poly<Rational>& p);
Json to_json(const Poly<Cplx>& p);
Json to_json(const RMat& m);
Json to_json(const CMat& m);
template <typename S>
Json to_json(const MumfordMatrix<S>& a) {
  return Json{{"g", a.g}, {"u", to_json(a.u)}, {"v", to_json(a.v)}, {"w", to_json(a.w)}};
}
template <typename S>
Json to_json(const SpectralPoly<S>& h) {
  Json j{{"h", to_json(h.h)}};
  if (h.factors) {
    Json f = Json::array();
    for (const auto& [poly, mult] : *h.factors) f.push_back(Json::array({to_json(poly), mult}));
    j["factors"] = f;
  }
  return j;
}
template <typename S>
Json to_json(const TangentValue<S>& t) {
  return Json{{"g", t.g}, {"du", to_json(t.du)}, {"dv", to_json(t.dv)}, {"dw", to_json(t.dw)}};
}
Json to_json(const StratumLabel& label);
Json to_json(const StrataLattice& lattice);

Rational rational_from_json(const Json& j);
Cplx cplx_from_json(const Json& j);
Poly<Rational> poly_from_json(const Json& j);
Poly<Cplx> cpoly_from_json(const Json& j);
MumfordMatrix<Rational> point_from_json(const Json& j);
MumfordMatrix<Cplx> cpoint_from_json(const Json& j);
SpectralPoly<Rational> spectral_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace mumford

#endif  // MUMFORD_IO_HPP
