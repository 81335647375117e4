#include "mumford/io.hpp"

#include <fstream>
#include <stdexcept>

namespace mumford {

Json to_json(const Rational& r) { return format_rational(r); }
Json to_json(const Cplx& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Poly<Rational>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(format_rational(c));
  return Json{{"coeffs", coeffs}};
}

Json to_json(const Poly<Cplx>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs}};
}

Json to_json(const RMat& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(format_rational(m(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const CMat& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(to_json(m(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const StratumLabel& label) {
  return Json{{"g", label.g},
              {"i", label.i},
              {"q", to_json(label.q)},
              {"h", to_json(label.h.h)}};
}

Json to_json(const StrataLattice& lattice) {
  Json labels = Json::array();
  for (const auto& label : lattice.labels) {
    Json j = to_json(label);
    j["dim"] = label.i;
    labels.push_back(j);
  }
  Json edges = Json::array();
  for (const auto& [a, b] : lattice.edges) edges.push_back(Json::array({a, b}));
  Json coarse = Json::object();
  for (const auto& [i, count] : lattice.coarse_counts) coarse[std::to_string(i)] = count;
  return Json{{"g", lattice.g},
              {"h", to_json(lattice.h)},
              {"rho_h", lattice.rho_h},
              {"stratum_count", lattice.labels.size()},
              {"labels", labels},
              {"edges", edges},
              {"coarse_counts", coarse}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

Cplx cplx_from_json(const Json& j) {
  if (j.is_number()) return Cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return Cplx(j[0].get<double>(), j[1].get<double>());
  if (j.is_string()) return to_cplx(parse_rational(j.get<std::string>()));
  throw std::invalid_argument("complex scalar must be [re, im]");
}

Poly<Rational> poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("polynomial must be {\"coeffs\": [...]}");
  std::vector<Rational> c;
  for (const auto& e : j["coeffs"]) c.push_back(rational_from_json(e));
  return Poly<Rational>(std::move(c));
}

Poly<Cplx> cpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("polynomial must be {\"coeffs\": [...]}");
  std::vector<Cplx> c;
  for (const auto& e : j["coeffs"]) c.push_back(cplx_from_json(e));
  return Poly<Cplx>(std::move(c));
}

MumfordMatrix<Rational> point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g"))
    throw std::invalid_argument("point must be {\"g\", \"u\", \"v\", \"w\"}");
  return MumfordMatrix<Rational>(j["g"].get<int>(), poly_from_json(j.at("u")),
                                 poly_from_json(j.at("v")), poly_from_json(j.at("w")));
}

namespace {

// Float inputs may carry a leading coefficient off 1 by roundoff; rescale
// within tolerance, reject anything worse.
Poly<Cplx> force_monic(const Poly<Cplx>& p, double eps) {
  if (p.is_zero()) return p;
  const Cplx lead = p.leading();
  if (std::abs(lead - Cplx(1, 0)) > eps)
    throw std::invalid_argument("float polynomial is not monic within tolerance");
  std::vector<Cplx> c = p.coeffs();
  for (auto& v : c) v /= lead;
  c.back() = Cplx(1, 0);
  return Poly<Cplx>(std::move(c));
}

}  // namespace

MumfordMatrix<Cplx> cpoint_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g"))
    throw std::invalid_argument("point must be {\"g\", \"u\", \"v\", \"w\"}");
  const double eps = 1e-6;
  return MumfordMatrix<Cplx>(j["g"].get<int>(),
                             force_monic(trimmed(cpoly_from_json(j.at("u")), eps), eps),
                             trimmed(cpoly_from_json(j.at("v")), eps),
                             force_monic(trimmed(cpoly_from_json(j.at("w")), eps), eps));
}

SpectralPoly<Rational> spectral_from_json(const Json& j) {
  if (j.is_object() && j.contains("h")) {
    std::optional<std::vector<std::pair<Poly<Rational>, int>>> factors;
    if (j.contains("factors")) {
      factors.emplace();
      for (const auto& f : j["factors"]) {
        if (!f.is_array() || f.size() != 2)
          throw std::invalid_argument("factor entries must be [poly, mult]");
        factors->emplace_back(poly_from_json(f[0]), f[1].get<int>());
      }
    }
    return SpectralPoly<Rational>(poly_from_json(j.at("h")), std::move(factors));
  }
  // Bare polynomial accepted as well.
  return SpectralPoly<Rational>(poly_from_json(j));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace mumford
