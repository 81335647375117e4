// Command-line front end: exact stratification of Mumford system fibers,
// conformance suites, and the RK4 flow integrator.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "mumford/corpus.hpp"
#include "mumford/flow.hpp"
#include "mumford/io.hpp"
#include "mumford/verify.hpp"

namespace {

using namespace mumford;

struct GlobalOpts {
  std::string mode = "exact";
  double epsilon = kDefaultEpsilon;
  std::uint64_t seed = 1;
  std::string out;
};

void emit(const GlobalOpts& opts, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opts.out);
    if (!f) throw std::runtime_error("cannot write " + opts.out);
    f << text;
  }
}

Json verify_to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"tag", c.tag}, {"pass", c.pass}, {"fail", c.fail}});
  return Json{{"suite", report.suite}, {"ok", report.ok()}, {"checks", checks}};
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for Mumford system fibers and their strata"};
  app.require_subcommand(1);
  // --h is a documented option, so the help flag keeps only its long form.
  app.set_help_flag("--help", "Print help");

  GlobalOpts opts;
  app.add_option("--mode", opts.mode, "Coefficient field: exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--epsilon", opts.epsilon, "Float-mode tolerance");
  app.add_option("--seed", opts.seed, "Deterministic seed");
  app.add_option("--out", opts.out, "Write the JSON result to a file instead of stdout");

  std::string point_file, h_file, q_file;
  int index = 0;
  double t_final = 1.0, dt = 1e-3;
  auto subcommand = [&app](const std::string& name, const std::string& desc) {
    auto* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "Print help");
    cmd->fallthrough();  // global flags may follow the subcommand
    return cmd;
  };

  auto* classify_cmd = subcommand("classify", "Fine stratum of a fiber point");
  classify_cmd->add_option("--point", point_file, "Point JSON file")->required();
  classify_cmd->add_option("--h", h_file, "Spectral polynomial JSON file")->required();

  auto* strata_cmd = subcommand("fiber-strata", "Stratum lattice of a fiber");
  strata_cmd->add_option("--h", h_file, "Spectral polynomial JSON file")->required();

  auto* sample_cmd = subcommand("sample", "Sample a point of a given stratum");
  sample_cmd->add_option("--h", h_file, "Spectral polynomial JSON file")->required();
  sample_cmd->add_option("--i", index, "Stratum index (dimension)")->required();
  sample_cmd->add_option("--q", q_file, "Divisor JSON file (optional when unique)");
  bool exact_flag = false;
  sample_cmd->add_flag("--exact", exact_flag, "Force exact mode");

  auto* jac_cmd = subcommand("jacobian", "Moment-map Jacobian at a point");
  jac_cmd->add_option("--point", point_file, "Point JSON file")->required();

  auto* fields_cmd = subcommand("vector-fields", "Lax fields D_i");
  fields_cmd->add_option("--point", point_file, "Point JSON file");
  int fields_g = 0;
  fields_cmd->add_option("--g", fields_g, "Order for the symbolic table");
  fields_cmd->add_option("--i", index, "Field index (default: all i < g)");

  auto* flow_cmd = subcommand("flow", "RK4 flow with conservation report");
  flow_cmd->add_option("--point", point_file, "Point JSON file")->required();
  flow_cmd->add_option("--i", index, "Field index")->required();
  flow_cmd->add_option("--t", t_final, "Final time");
  flow_cmd->add_option("--dt", dt, "Step size");

  auto* verify_cmd = subcommand("verify", "Run a conformance suite");
  std::string suite = "all";
  verify_cmd->add_option("suite", suite, "all|resultants|poisson|strata")
      ->check(CLI::IsMember({"all", "resultants", "poisson", "strata"}));

  CLI11_PARSE(app, argc, argv);

  if (classify_cmd->parsed()) {
    const auto point = point_from_json(load_json_file(point_file));
    const auto h = spectral_from_json(load_json_file(h_file));
    emit(opts, to_json(classify(point, h)));
    return 0;
  }

  if (strata_cmd->parsed()) {
    const auto h = spectral_from_json(load_json_file(h_file));
    emit(opts, to_json(enumerate_strata(h)));
    return 0;
  }

  if (sample_cmd->parsed()) {
    const auto h = with_factorization(spectral_from_json(load_json_file(h_file)));
    const int g = h.genus();
    Poly<Rational> q;
    if (!q_file.empty()) {
      q = poly_from_json(load_json_file(q_file));
    } else {
      const DivisorLattice lattice = quadratic_divisors(h);
      std::vector<Poly<Rational>> candidates;
      for (const auto& d : lattice.divisors)
        if (d.degree_or(0) == g - index) candidates.push_back(d);
      if (candidates.empty())
        throw std::runtime_error("no quadratic divisor of degree " +
                                 std::to_string(g - index) + ": the stratum is empty");
      if (candidates.size() > 1)
        throw std::runtime_error(std::to_string(candidates.size()) +
                                 " divisors of degree " + std::to_string(g - index) +
                                 "; pass --q to pick one");
      q = candidates.front();
    }
    const StratumLabel label(g, index, q, h);
    const bool exact = exact_flag || opts.mode == "exact";
    if (exact) {
      const auto a = sample_stratum_exact(label, opts.seed);
      emit(opts, to_json(a));
    } else {
      const auto a = sample_stratum_float(label, opts.seed, opts.epsilon);
      emit(opts, to_json(a));
    }
    return 0;
  }

  if (jac_cmd->parsed()) {
    const auto point = point_from_json(load_json_file(point_file));
    const RMat j = jacobian_moment(point);
    const RhoResult rho = rho_of_matrix(point);
    const int rk = rank(j);
    Json out = to_json(j);
    out["rank"] = rk;
    out["rho"] = rho.rho;
    out["rank_law_ok"] = (rk == 2 * point.g + 1 - rho.rho);
    emit(opts, out);
    if (rk != 2 * point.g + 1 - rho.rho) return 1;
    return 0;
  }

  if (fields_cmd->parsed()) {
    if (!point_file.empty()) {
      const auto point = point_from_json(load_json_file(point_file));
      Json fields = Json::array();
      const bool single = fields_cmd->count("--i") > 0;
      for (int i = single ? index : 0; i <= (single ? index : point.g - 1); ++i) {
        Json f = to_json(lax_field_i(point, i));
        f["i"] = i;
        fields.push_back(f);
      }
      emit(opts, Json{{"g", point.g}, {"sigma", sigma_of_matrix(point)}, {"fields", fields}});
      return 0;
    }
    if (fields_g <= 0) throw std::runtime_error("vector-fields needs --point or --g");
    const VarTable vars = phase_vars(fields_g);
    Json fields = Json::array();
    const bool single = fields_cmd->count("--i") > 0;
    for (int i = single ? index : 0; i <= (single ? index : fields_g - 1); ++i) {
      const SymbolicField f = symbolic_field(fields_g, i);
      Json comps = Json::object();
      for (std::size_t k = 0; k < f.comps.size(); ++k)
        comps[(*vars)[k]] = f.comps[k].str();
      fields.push_back(Json{{"i", i}, {"components", comps}});
    }
    emit(opts, Json{{"g", fields_g}, {"fields", fields}});
    return 0;
  }

  if (flow_cmd->parsed()) {
    const Json pj = load_json_file(point_file);
    const auto point = cpoint_from_json(pj);
    const FlowReport report = flow_integrate(point, index, t_final, dt);
    Json drifts = Json::array();
    for (double d : report.max_abs_drift) drifts.push_back(d);
    Json state = Json::array();
    for (const auto& z : report.final_state) state.push_back(to_json(z));
    emit(opts, Json{{"steps", report.steps},
                    {"t_final", report.t_final},
                    {"dt", report.dt},
                    {"max_abs_drift", drifts},
                    {"max_rel_drift", report.max_rel_drift},
                    {"final_state", state}});
    return 0;
  }

  if (verify_cmd->parsed()) {
    VerifyReport report;
    if (suite == "all")
      report = verify_all(opts.seed);
    else if (suite == "resultants")
      report = verify_resultants(opts.seed);
    else if (suite == "poisson")
      report = verify_poisson(opts.seed);
    else
      report = verify_strata(opts.seed);
    emit(opts, verify_to_json(report));
    return report.ok() ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cout << Json{{"error", e.what()}}.dump(2) << std::endl;
    return 1;
  }
}
