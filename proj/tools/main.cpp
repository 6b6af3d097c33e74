// Command-line front end: correlations, inequality reports, parameter scans,
// violation search, and the classical hidden-variable estimator. JSON on
// stdout (CSV for scans); exit code 0 on success, 2 on usage/parse errors,
// 3 on numerical errors.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bellcat/full_correlation.hpp"
#include "bellcat/lhv.hpp"
#include "bellcat/scs_subspace.hpp"
#include "bellcat/ubi.hpp"

namespace {

using nlohmann::json;
using namespace bellcat;

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct CommonArgs {
  std::string spin = "1/2";
  std::string pol = "anti";
  double xi = 0.0;
  double eta = 0.0;
  std::string a = "0,0";
  std::string b = "0,0";
  std::string c = "0,0";
  bool degrees = false;
  std::string out_path;
  std::string config_path;
};

// --config supplies defaults; explicitly passed flags win.
void merge_config(CLI::App* cmd, const std::string& config_path) {
  if (config_path.empty()) return;
  std::ifstream in(config_path);
  if (!in) throw std::invalid_argument("cannot open config file " + config_path);
  json cfg = json::parse(in);
  for (auto& [key, value] : cfg.items()) {
    CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    if (opt == nullptr || opt->count() > 0) continue;
    if (value.is_boolean()) {
      if (!value.get<bool>()) continue;
      opt->add_result("true");
    } else if (value.is_string()) {
      opt->add_result(value.get<std::string>());
    } else {
      std::ostringstream s;
      s << value;
      opt->add_result(s.str());
    }
    opt->run_callback();
  }
}

Direction parse_direction(const std::string& text, bool degrees) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("direction must be 'theta,phi', got '" + text +
                                "'");
  const double scale = degrees ? kDegToRad : 1.0;
  try {
    const double theta = std::stod(text.substr(0, comma));
    const double phi = std::stod(text.substr(comma + 1));
    return Direction(theta * scale, phi * scale);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot parse direction '" + text + "'");
  }
}

CatState state_from(const CommonArgs& args) {
  const double scale = args.degrees ? kDegToRad : 1.0;
  return make_cat_state(Spin::parse(args.spin), parse_polarization(args.pol),
                        args.xi * scale, args.eta * scale);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file " + out_path);
    out << text << '\n';
  }
}

json report_to_json(const CorrelationReport& rep) {
  return json{{"p_local", rep.p_local},
              {"p_nonlocal", rep.p_nonlocal},
              {"p_total", rep.p_total}};
}

struct SweepSpec {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  double value_at(int i) const {
    if (count <= 1) return start;
    return start + (stop - start) * i / (count - 1);
  }
};

SweepSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("sweep must be name=start:stop:count, got '" +
                                text + "'");
  SweepSpec spec;
  spec.name = text.substr(0, eq);
  const std::string range = text.substr(eq + 1);
  const auto c1 = range.find(':');
  const auto c2 = range.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("sweep range must be start:stop:count in '" +
                                text + "'");
  try {
    spec.start = std::stod(range.substr(0, c1));
    spec.stop = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
    spec.count = std::stoi(range.substr(c2 + 1));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot parse sweep '" + text + "'");
  }
  if (spec.count < 1) throw std::invalid_argument("sweep count must be >= 1");
  static const std::vector<std::string> known = {
      "theta_a", "phi_a", "theta_b", "phi_b", "theta_c",
      "phi_c",   "xi",    "eta",     "twice_s"};
  if (std::find(known.begin(), known.end(), spec.name) == known.end())
    throw std::invalid_argument("unknown sweep parameter '" + spec.name + "'");
  return spec;
}

int run_correlate(const CommonArgs& args, const std::string& space, bool scaled) {
  const CatState state = state_from(args);
  const Direction a = parse_direction(args.a, args.degrees);
  const Direction b = parse_direction(args.b, args.degrees);

  json out;
  out["space"] = space;
  out["scaled"] = scaled;
  if (space == "full") {
    if (scaled) throw std::invalid_argument("--scaled applies to --space scs only");
    const auto rep = full_correlation(state, a, b);
    out.update(report_to_json(rep));
    out["N"] = 1.0;
  } else if (space == "scs") {
    const auto rep = subspace_correlation(state, a, b);
    const double n = subspace_elements(state, a, b).total_probability;
    out["N"] = n;
    if (scaled) {
      if (n < 1e-300)
        throw NumericalError("captured probability N underflows");
      out["p_local"] = rep.p_local / n;
      out["p_nonlocal"] = rep.p_nonlocal / n;
      out["p_total"] = rep.p_total / n;
    } else {
      out.update(report_to_json(rep));
    }
  } else {
    throw std::invalid_argument("--space must be full or scs");
  }
  emit(out.dump(2), args.out_path);
  return 0;
}

json ubi_to_json(const UbiReport& rep) {
  return json{{"p_ab", rep.p_ab},   {"p_ac", rep.p_ac},
              {"p_bc", rep.p_bc},   {"p_s", rep.p_s},
              {"violated", rep.violated}, {"scaled", rep.scaled}};
}

int run_ubi(const CommonArgs& args, bool local, bool scaled) {
  const CatState state = state_from(args);
  const Direction a = parse_direction(args.a, args.degrees);
  const Direction b = parse_direction(args.b, args.degrees);
  const Direction c = parse_direction(args.c, args.degrees);
  const UbiReport rep = local ? ubi_local(state, a, b, c)
                              : ubi_quantum(state, a, b, c, scaled);
  emit(ubi_to_json(rep).dump(2), args.out_path);
  return 0;
}

int run_scan(const CommonArgs& args, const std::vector<std::string>& sweep_args,
             const std::string& space, bool scaled) {
  std::vector<SweepSpec> sweeps;
  for (const auto& text : sweep_args) sweeps.push_back(parse_sweep(text));
  if (sweeps.empty()) throw std::invalid_argument("scan needs at least one --sweep");

  const double scale = args.degrees ? kDegToRad : 1.0;
  Direction a0 = parse_direction(args.a, args.degrees);
  Direction b0 = parse_direction(args.b, args.degrees);
  Direction c0 = parse_direction(args.c, args.degrees);

  std::ostringstream csv;
  for (const auto& sweep : sweeps) csv << sweep.name << ',';
  csv << "p_local,p_nonlocal,p_total,p_s\n";
  csv.precision(17);

  std::vector<int> idx(sweeps.size(), 0);
  while (true) {
    double theta_a = a0.theta, phi_a = a0.phi, theta_b = b0.theta,
           phi_b = b0.phi, theta_c = c0.theta, phi_c = c0.phi;
    double xi = args.xi * scale, eta = args.eta * scale;
    int twice_s = Spin::parse(args.spin).twice_s();
    for (std::size_t k = 0; k < sweeps.size(); ++k) {
      const double v = sweeps[k].value_at(idx[k]);
      const std::string& name = sweeps[k].name;
      if (name == "theta_a") theta_a = v * scale;
      else if (name == "phi_a") phi_a = v * scale;
      else if (name == "theta_b") theta_b = v * scale;
      else if (name == "phi_b") phi_b = v * scale;
      else if (name == "theta_c") theta_c = v * scale;
      else if (name == "phi_c") phi_c = v * scale;
      else if (name == "xi") xi = v * scale;
      else if (name == "eta") eta = v * scale;
      else if (name == "twice_s") twice_s = static_cast<int>(std::lround(v));
    }

    const CatState state = make_cat_state(
        Spin(twice_s), parse_polarization(args.pol), xi, eta);
    const Direction a(theta_a, phi_a), b(theta_b, phi_b), c(theta_c, phi_c);
    CorrelationReport rep;
    double n = 1.0;
    if (space == "full") {
      rep = full_correlation(state, a, b);
    } else {
      rep = subspace_correlation(state, a, b);
      n = scaled ? subspace_elements(state, a, b).total_probability : 1.0;
      if (scaled && n < 1e-300)
        throw NumericalError("captured probability N underflows in scan");
    }
    const UbiReport ubi = ubi_quantum(state, a, b, c, scaled);

    for (std::size_t k = 0; k < sweeps.size(); ++k)
      csv << sweeps[k].value_at(idx[k]) << ',';
    csv << rep.p_local / n << ',' << rep.p_nonlocal / n << ','
        << rep.p_total / n << ',' << ubi.p_s << '\n';

    int k = static_cast<int>(sweeps.size()) - 1;
    for (; k >= 0; --k) {
      if (++idx[k] < sweeps[k].count) break;
      idx[k] = 0;
    }
    if (k < 0) break;
  }
  emit(csv.str(), args.out_path);
  return 0;
}

int run_max_violation(const CommonArgs& args, const SearchConfig& config) {
  const auto result = max_violation_search(Spin::parse(args.spin),
                                           parse_polarization(args.pol), config);
  json out{
      {"best_p_s", result.best_p_s},
      {"best_angles",
       {{"theta_a", result.best_angles[0]},
        {"phi_a", result.best_angles[1]},
        {"theta_b", result.best_angles[2]},
        {"phi_b", result.best_angles[3]},
        {"theta_c", result.best_angles[4]},
        {"phi_c", result.best_angles[5]}}},
      {"best_state_params",
       {{"xi", result.best_state_params[0]}, {"eta", result.best_state_params[1]}}},
      {"evaluations", result.evaluations},
      {"converged", result.converged}};
  emit(out.dump(2), args.out_path);
  return 0;
}

int run_lhv(const CommonArgs& args, const std::string& model_id, long samples,
            std::uint64_t seed, bool exhaustive, long grid_points) {
  LhvModel model = find_builtin_model(model_id);
  model.polarization = parse_polarization(args.pol);
  const Direction a = parse_direction(args.a, args.degrees);
  const Direction b = parse_direction(args.b, args.degrees);
  const Direction c = parse_direction(args.c, args.degrees);

  json out{{"model", model.id}, {"polarization", to_string(model.polarization)}};
  if (exhaustive) {
    out["p_s_lc"] = exhaustive_check(model, a, b, c, grid_points);
    out["grid_points"] = grid_points;
    out["exact"] = true;
  } else {
    const LhvEstimate est = estimate(model, a, b, c, samples, seed);
    auto pair = [](const PairEstimate& p) {
      return json{{"value", p.value}, {"std_error", p.std_error}};
    };
    out["p_ab"] = pair(est.p_ab);
    out["p_ac"] = pair(est.p_ac);
    out["p_bc"] = pair(est.p_bc);
    out["p_s_lc"] = est.p_s_lc;
    out["p_s_std_error"] = est.p_s_std_error;
    out["samples"] = est.samples;
    out["seed"] = est.rng_seed;
  }
  emit(out.dump(2), args.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell cat-state correlation toolkit"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string space = "full";
  bool scaled = false;
  bool local = false;
  std::vector<std::string> sweep_args;
  SearchConfig search;
  std::string model_id = "sign";
  long samples = 100000;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  long grid_points = 200000;

  auto add_common = [&](CLI::App* cmd, bool with_c) {
    cmd->add_option("--s", args.spin, "spin as 'k/2' or an integer, e.g. 3/2");
    cmd->add_option("--pol", args.pol, "polarization: anti|para");
    cmd->add_option("--xi", args.xi, "state parameter xi (radians)");
    cmd->add_option("--eta", args.eta, "state parameter eta (radians)");
    cmd->add_option("--a", args.a, "direction a as 'theta,phi' (radians)");
    cmd->add_option("--b", args.b, "direction b as 'theta,phi' (radians)");
    if (with_c) cmd->add_option("--c", args.c, "direction c as 'theta,phi'");
    cmd->add_flag("--deg", args.degrees, "interpret all angles in degrees");
    cmd->add_option("--out", args.out_path, "write output to a file");
    cmd->add_option("--config", args.config_path,
                    "JSON file supplying defaults (flags win)");
  };

  auto* correlate = app.add_subcommand("correlate", "two-direction correlation");
  add_common(correlate, false);
  correlate->add_option("--space", space, "full|scs");
  correlate->add_flag("--scaled", scaled, "divide by the captured probability N");

  auto* ubi = app.add_subcommand("ubi", "three-direction inequality report");
  add_common(ubi, true);
  ubi->add_flag("--local", local, "use the local correlations only");
  ubi->add_flag("--scaled", scaled, "scaled correlations");

  auto* scan = app.add_subcommand("scan", "grid scan, CSV output");
  add_common(scan, true);
  scan->add_option("--space", space, "full|scs");
  scan->add_flag("--scaled", scaled, "scaled correlations");
  scan->add_option("--sweep", sweep_args,
                   "swept parameter name=start:stop:count (repeatable); names: "
                   "theta_a phi_a theta_b phi_b theta_c phi_c xi eta twice_s");

  auto* maxv = app.add_subcommand("max-violation", "search the maximum p_s");
  add_common(maxv, false);
  maxv->add_option("--grid-points", search.grid_points, "equatorial grid points");
  maxv->add_option("--coarse-points", search.coarse_full_points,
                   "full-grid points per angle");
  maxv->add_option("--refine-iters", search.refine_iters, "refinement sweeps");
  maxv->add_option("--tol", search.tol, "convergence tolerance");
  maxv->add_option("--restarts", search.restarts, "seeded random restarts");
  maxv->add_option("--seed", search.seed, "restart seed");

  auto* lhv = app.add_subcommand("lhv", "classical hidden-variable estimate");
  add_common(lhv, true);
  lhv->add_option("--model", model_id, "builtin model id (see README)");
  lhv->add_option("--samples", samples, "Monte Carlo samples (>= 1000)");
  lhv->add_option("--seed", seed, "RNG seed");
  lhv->add_flag("--exhaustive", exhaustive, "exact quadrature (phase models)");
  lhv->add_option("--grid", grid_points, "quadrature grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    merge_config(cmd, args.config_path);
    if (cmd == correlate) return run_correlate(args, space, scaled);
    if (cmd == ubi) return run_ubi(args, local, scaled);
    if (cmd == scan) return run_scan(args, sweep_args, space, scaled);
    if (cmd == maxv) return run_max_violation(args, search);
    if (cmd == lhv) return run_lhv(args, model_id, samples, seed, exhaustive,
                                   grid_points);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const bellcat::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
