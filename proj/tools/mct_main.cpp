// mct: command-line front end for the Markov chain concentration toolkit.
//
// Subcommands: spectral, mixing, bounds, marton, hypothesis, simulate,
// coin-demo. Reports are JSON on stdout; validation errors go to stderr as
// machine-readable JSON with exit code 1, numeric failures exit with 2.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "markov/json_io.hpp"

namespace {

using namespace markov;

int g_digits = 6;

void emit(const json& j) {
  std::cout << (g_digits > 0 ? round_json(j, g_digits) : j).dump(2) << "\n";
}

std::string default_data_dir() {
#ifdef MCT_DATA_DIR
  return MCT_DATA_DIR;
#else
  return "data";
#endif
}

int run_spectral(const std::string& kernel_path, unsigned k_max) {
  const MarkovKernel kernel = load_kernel_file(kernel_path);
  const Distribution pi = stationary_distribution(kernel);
  json j = spectral_report_to_json(spectral_report(kernel, pi, k_max));
  j["stationary"] = pi.weights;
  emit(j);
  return 0;
}

int run_mixing(const std::string& kernel_path, std::optional<unsigned> t_max,
               const std::vector<double>& eps) {
  const MarkovKernel kernel = load_kernel_file(kernel_path);
  const Distribution pi = stationary_distribution(kernel);
  MixingOptions opts;
  if (!eps.empty()) opts.eps_values = eps;
  opts.t_max = t_max;
  const MixingReport report = mixing_profile(kernel, pi, opts);
  json j = mixing_report_to_json(report);
  try {
    const GapLowerBounds lb =
        gap_lower_bounds_from_mixing(report, is_reversible(kernel, pi));
    j["gamma_star_lb"] = lb.gamma_star_lb;
    j["gamma_ps_lb"] = lb.gamma_ps_lb;
  } catch (const Error&) {
    // chain did not mix within t_max; profile alone is still useful
  }
  emit(j);
  return 0;
}

BernsteinVariant parse_variant(const std::string& name) {
  if (name == "rev-sigma") return BernsteinVariant::RevSigma;
  if (name == "rev") return BernsteinVariant::Rev;
  if (name == "rev-general") return BernsteinVariant::RevGeneral;
  if (name == "nonrev") return BernsteinVariant::NonRev;
  if (name == "nonrev-general") return BernsteinVariant::NonRevGeneral;
  throw Error(ErrorCode::InvalidArgument, "unknown variant " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov chain concentration toolkit"};
  app.require_subcommand(1);
  bool precise = false;
  app.add_flag("--precise", precise, "full floating point precision in reports");

  std::string kernel_path, kernel_path2, data_path, out_path;
  unsigned k_max = 64;
  std::optional<unsigned> t_max;
  std::vector<double> eps_values;
  double xi = 0.0;

  auto* spectral_cmd = app.add_subcommand("spectral", "spectral gaps of a kernel");
  spectral_cmd->add_option("kernel", kernel_path, "kernel JSON file")->required();
  spectral_cmd->add_option("--kmax", k_max, "pseudo spectral gap search cap");

  auto* mixing_cmd = app.add_subcommand("mixing", "mixing profile of a kernel");
  mixing_cmd->add_option("kernel", kernel_path, "kernel JSON file")->required();
  unsigned t_max_raw = 0;
  auto* tmax_opt = mixing_cmd->add_option("--tmax", t_max_raw, "profile horizon");
  mixing_cmd->add_option("--eps", eps_values, "threshold values");

  auto* bounds_cmd = app.add_subcommand("bounds", "concentration bound evaluators");
  auto* bernstein_cmd = bounds_cmd->add_subcommand("bernstein", "Bernstein tails");
  std::string variant = "rev";
  unsigned b_n = 1;
  double b_vf = 0.0, b_c = 1.0, b_t = 0.0;
  std::optional<double> b_gamma, b_gamma_star, b_gamma_ps, b_sigma2;
  std::optional<unsigned> b_kps;
  bool one_sided = false;
  bernstein_cmd->add_option("--variant", variant,
                            "rev-sigma|rev|rev-general|nonrev|nonrev-general");
  bernstein_cmd->add_option("--n", b_n, "number of summands");
  bernstein_cmd->add_option("--vf", b_vf, "V_f or V_S'");
  bernstein_cmd->add_option("--c", b_c, "sup bound on |f - E f|");
  bernstein_cmd->add_option("--t", b_t, "threshold")->required();
  bernstein_cmd->add_option("--gamma", [&](auto& v) { b_gamma = std::stod(v[0]); return true; }, "spectral gap");
  bernstein_cmd->add_option("--gamma-star", [&](auto& v) { b_gamma_star = std::stod(v[0]); return true; }, "absolute spectral gap");
  bernstein_cmd->add_option("--gamma-ps", [&](auto& v) { b_gamma_ps = std::stod(v[0]); return true; }, "pseudo spectral gap");
  bernstein_cmd->add_option("--sigma2", [&](auto& v) { b_sigma2 = std::stod(v[0]); return true; }, "asymptotic variance");
  bernstein_cmd->add_option("--kps", [&](auto& v) { b_kps = static_cast<unsigned>(std::stoul(v[0])); return true; }, "pseudo gap maximizer");
  bernstein_cmd->add_flag("--one-sided", one_sided, "drop the factor 2");

  auto* mcd_cmd = bounds_cmd->add_subcommand("mcdiarmid", "Markov McDiarmid tail");
  std::vector<double> c_vec;
  double tau_min = 0.0, mc_t = 0.0;
  mcd_cmd->add_option("--c", c_vec, "bounded-difference vector")->required();
  mcd_cmd->add_option("--tau-min", tau_min, "tau_min")->required();
  mcd_cmd->add_option("--t", mc_t, "threshold")->required();

  auto* variance_cmd = bounds_cmd->add_subcommand("variance", "variance report");
  std::vector<double> f_values;
  unsigned var_n = 1;
  variance_cmd->add_option("kernel", kernel_path, "kernel JSON file")->required();
  variance_cmd->add_option("--f", f_values, "observable per state")->required();
  variance_cmd->add_option("--n", var_n, "number of summands");

  auto* marton_cmd = app.add_subcommand("marton", "coupling matrix machinery");
  std::size_t m_blocks = 1;
  double m_eps = 0.0;
  std::string m_kind = "markov";
  marton_cmd->add_option("--blocks", m_blocks, "number of blocks")->required();
  marton_cmd->add_option("--eps", m_eps, "contraction per two blocks");
  marton_cmd->add_option("--kind", m_kind, "markov|mdep");

  auto* hyp_cmd = app.add_subcommand("hypothesis", "likelihood ratio test");
  hyp_cmd->add_option("--p0", kernel_path, "H0 kernel JSON")->required();
  hyp_cmd->add_option("--p1", kernel_path2, "H1 kernel JSON")->required();
  hyp_cmd->add_option("--data", data_path, "observation file")->required();
  hyp_cmd->add_option("--xi", xi, "decision threshold");

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo tail experiment");
  std::uint64_t seed = 1;
  unsigned trials = 10000, sim_n = 100;
  std::vector<double> t_grid;
  sim_cmd->add_option("kernel", kernel_path, "kernel JSON file")->required();
  sim_cmd->add_option("--f", f_values, "observable per state")->required();
  sim_cmd->add_option("--n", sim_n, "trajectory length");
  sim_cmd->add_option("--trials", trials, "number of trials");
  sim_cmd->add_option("--seed", seed, "PRNG seed");
  sim_cmd->add_option("--t-grid", t_grid, "thresholds")->required();
  sim_cmd->add_option("--out", out_path, "optional CSV output path");

  auto* coin_cmd = app.add_subcommand("coin-demo", "coin tossing example");
  coin_cmd->add_option("--data", data_path, "observation file override");
  coin_cmd->add_option("--xi", xi, "decision threshold");

  CLI11_PARSE(app, argc, argv);
  g_digits = precise ? 0 : 6;

  try {
    if (*spectral_cmd) return run_spectral(kernel_path, k_max);
    if (*mixing_cmd)
      return run_mixing(kernel_path, *tmax_opt ? std::optional<unsigned>(t_max_raw)
                                               : std::nullopt,
                        eps_values);
    if (*bernstein_cmd) {
      BernsteinSpec spec;
      spec.variant = parse_variant(variant);
      spec.n = b_n;
      spec.variance = b_vf;
      spec.c = b_c;
      spec.gamma = b_gamma;
      spec.gamma_star = b_gamma_star;
      spec.gamma_ps = b_gamma_ps;
      spec.sigma_as2 = b_sigma2;
      spec.k_ps = b_kps;
      spec.one_sided = one_sided;
      if (spec.variant == BernsteinVariant::NonRevGeneral && b_kps)
        spec.v_i = residue_variances(b_vf / b_n, b_n, *b_kps);
      emit(tail_bound_to_json(bernstein_tail(spec, b_t)));
      return 0;
    }
    if (*mcd_cmd) {
      emit(tail_bound_to_json(mcdiarmid_markov_tail(c_vec, tau_min, mc_t)));
      return 0;
    }
    if (*variance_cmd) {
      const MarkovKernel kernel = load_kernel_file(kernel_path);
      const Distribution pi = stationary_distribution(kernel);
      emit(variance_report_to_json(
          variance_report(kernel, pi, ObservedFunction{f_values}, var_n)));
      return 0;
    }
    if (*marton_cmd) {
      const MixingMatrix gamma = m_kind == "mdep"
                                     ? mdep_mixing_matrix(m_blocks)
                                     : markov_mixing_matrix(m_blocks, m_eps);
      json j = mixing_matrix_to_json(gamma);
      j["operator_norm"] = operator_norm(gamma);
      emit(j);
      return 0;
    }
    if (*hyp_cmd) {
      const HypothesisTest test = build_test(load_kernel_file(kernel_path),
                                             load_kernel_file(kernel_path2), xi);
      const auto obs = parse_observations(load_text_file(data_path));
      json j = test_to_json(test);
      j["report"] = test_report_to_json(decide(test, obs));
      emit(j);
      return 0;
    }
    if (*sim_cmd) {
      const MarkovKernel kernel = load_kernel_file(kernel_path);
      const Distribution pi = stationary_distribution(kernel);
      const ObservedFunction f{f_values};
      SimConfig config;
      config.seed = seed;
      config.trials = trials;
      config.n = sim_n;
      const double v_f = stationary_variance(pi, f);
      const double sigma2 = asymptotic_variance(kernel, pi, f);
      double c = 0.0;
      {
        double mean = 0.0;
        for (std::size_t x = 0; x < pi.size(); ++x)
          mean += pi.weights[x] * f.values[x];
        for (double v : f.values) c = std::max(c, std::abs(v - mean));
      }
      const PseudoGapResult ps = pseudo_spectral_gap(kernel, pi);
      std::vector<BoundCurve> curves;
      {
        BernsteinSpec spec;
        spec.variant = BernsteinVariant::NonRev;
        spec.n = sim_n;
        spec.variance = v_f;
        spec.c = c;
        spec.gamma_ps = ps.gamma_ps;
        curves.push_back({"nonrev", [spec](double t) {
                            return bernstein_tail(spec, t).probability;
                          }});
      }
      if (is_reversible(kernel, pi)) {
        BernsteinSpec spec;
        spec.variant = BernsteinVariant::Rev;
        spec.n = sim_n;
        spec.variance = v_f;
        spec.c = c;
        spec.gamma = spectral_gap(kernel, pi);
        curves.push_back({"rev", [spec](double t) {
                            return bernstein_tail(spec, t).probability;
                          }});
        BernsteinSpec ss = spec;
        ss.variant = BernsteinVariant::RevSigma;
        ss.sigma_as2 = sigma2;
        curves.push_back({"rev-sigma", [ss](double t) {
                            return bernstein_tail(ss, t).probability;
                          }});
      }
      const TailExperimentReport report =
          tail_experiment(kernel, pi, f, config, t_grid, curves);
      if (!out_path.empty()) {
        std::FILE* csv = std::fopen(out_path.c_str(), "w");
        if (!csv) throw Error(ErrorCode::InvalidArgument, "cannot open " + out_path);
        std::fprintf(csv, "t,empirical");
        for (const auto& name : report.bound_names)
          std::fprintf(csv, ",%s", name.c_str());
        std::fprintf(csv, "\n");
        for (std::size_t ti = 0; ti < report.t_grid.size(); ++ti) {
          std::fprintf(csv, "%.17g,%.17g", report.t_grid[ti],
                       report.empirical_tail[ti]);
          for (std::size_t bi = 0; bi < report.bound_values.size(); ++bi)
            std::fprintf(csv, ",%.17g", report.bound_values[bi][ti]);
          std::fprintf(csv, "\n");
        }
        std::fclose(csv);
      }
      emit(tail_experiment_to_json(report));
      return 0;
    }
    if (*coin_cmd) {
      Matrix p0(2, 2, 0.5);
      Matrix p1(2, 2);
      p1(0, 0) = p1(1, 1) = 0.6;
      p1(0, 1) = p1(1, 0) = 0.4;
      const HypothesisTest test =
          build_test(make_kernel({"0", "1"}, std::move(p0)),
                     make_kernel({"0", "1"}, std::move(p1)), xi);
      const std::string path =
          data_path.empty() ? default_data_dir() + "/coin_tosses.txt" : data_path;
      const auto obs = parse_observations(load_text_file(path));
      json j = test_to_json(test);
      j["report"] = test_report_to_json(decide(test, obs));
      emit(j);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << json{{"error", error_code_name(e.code())}, {"message", e.what()}}
                     .dump()
              << "\n";
    switch (e.code()) {
      case ErrorCode::NoConvergence:
      case ErrorCode::SingularResolvent:
      case ErrorCode::SearchExhausted:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 1;
}
