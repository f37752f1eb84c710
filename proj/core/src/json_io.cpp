#include "markov/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace markov {

MarkovKernel kernel_from_json(const json& j) {
  if (!j.contains("states") || !j.contains("matrix"))
    throw Error(ErrorCode::InvalidArgument, "kernel JSON needs states and matrix");
  std::vector<std::string> states = j.at("states").get<std::vector<std::string>>();
  const auto& rows = j.at("matrix");
  Matrix m(rows.size(), states.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row = rows[i].get<std::vector<double>>();
    if (row.size() != states.size())
      throw Error(ErrorCode::ShapeMismatch, "matrix row length mismatch");
    for (std::size_t k = 0; k < row.size(); ++k) m(i, k) = row[k];
  }
  if (rows.size() != states.size())
    throw Error(ErrorCode::ShapeMismatch, "matrix is not square");
  return make_kernel(std::move(states), std::move(m));
}

json kernel_to_json(const MarkovKernel& kernel) {
  json rows = json::array();
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < kernel.size(); ++k) row.push_back(kernel.matrix(i, k));
    rows.push_back(std::move(row));
  }
  return json{{"states", kernel.states}, {"matrix", std::move(rows)}};
}

Distribution distribution_from_json(const json& j) {
  if (!j.contains("states") || !j.contains("weights"))
    throw Error(ErrorCode::InvalidArgument,
                "distribution JSON needs states and weights");
  return make_distribution(j.at("states").get<std::vector<std::string>>(),
                           j.at("weights").get<std::vector<double>>());
}

json distribution_to_json(const Distribution& dist) {
  return json{{"states", dist.states}, {"weights", dist.weights}};
}

json spectral_report_to_json(const SpectralReport& report) {
  json j;
  j["reversible"] = report.reversible;
  if (report.gamma) j["gamma"] = *report.gamma;
  if (report.gamma_star) j["gamma_star"] = *report.gamma_star;
  j["gamma_ps"] = report.gamma_ps;
  j["k_ps"] = report.k_ps;
  j["exhausted"] = report.exhausted;
  json by_k = json::object();
  for (const auto& [k, eig] : report.eigenvalues_by_k)
    by_k[std::to_string(k)] = eig;
  j["eigenvalues_by_k"] = std::move(by_k);
  return j;
}

json mixing_report_to_json(const MixingReport& report) {
  json j;
  j["d_table"] = json::array();
  for (const auto& [t, d] : report.d_table)
    j["d_table"].push_back(json{{"t", t}, {"d", d}});
  j["dbar_table"] = json::array();
  for (const auto& [t, d] : report.dbar_table)
    j["dbar_table"].push_back(json{{"t", t}, {"dbar", d}});
  json tm = json::object();
  for (const auto& [eps, t] : report.t_mix_eps) tm[std::to_string(eps)] = t;
  j["t_mix_eps"] = std::move(tm);
  json ta = json::object();
  for (const auto& [eps, t] : report.tau_eps) ta[std::to_string(eps)] = t;
  j["tau_eps"] = std::move(ta);
  if (report.tau_min) j["tau_min"] = *report.tau_min;
  j["t_max_scanned"] = report.t_max_scanned;
  j["t_max_too_small"] = report.t_max_too_small;
  return j;
}

json variance_report_to_json(const VarianceReport& report) {
  json j;
  j["n"] = report.n;
  j["v_f"] = report.v_f;
  j["sigma_as2"] = report.sigma_as2;
  j["exact"] = report.exact;
  if (report.bound_rev) j["bound_rev"] = *report.bound_rev;
  if (report.bound_rev_sigma) j["bound_rev_sigma"] = *report.bound_rev_sigma;
  j["bound_nonrev"] = report.bound_nonrev;
  j["bound_nonrev_sigma"] = report.bound_nonrev_sigma;
  if (report.per_coordinate_bound)
    j["per_coordinate_bound"] = *report.per_coordinate_bound;
  return j;
}

json tail_bound_to_json(const TailBound& bound) {
  return json{{"probability", bound.probability},
              {"exponent", bound.exponent},
              {"clamped", bound.clamped}};
}

json mixing_matrix_to_json(const MixingMatrix& gamma) {
  json rows = json::array();
  for (std::size_t i = 0; i < gamma.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < gamma.dim(); ++k) row.push_back(gamma.entries(i, k));
    rows.push_back(std::move(row));
  }
  return json{{"dim", gamma.dim()}, {"entries", std::move(rows)}};
}

json test_to_json(const HypothesisTest& test) {
  json j;
  j["delta0"] = test.delta0;
  j["delta1"] = test.delta1;
  j["delta"] = test.delta;
  j["J0"] = test.j0;
  j["J1"] = test.j1;
  j["V0"] = test.v0;
  j["V1"] = test.v1;
  j["gamma_ps_Q0"] = test.gamma_ps_q0;
  j["gamma_ps_Q1"] = test.gamma_ps_q1;
  j["k_ps_Q0"] = test.k_ps_q0;
  j["k_ps_Q1"] = test.k_ps_q1;
  j["xi"] = test.xi;
  j["pi0"] = test.pi0.weights;
  j["pi1"] = test.pi1.weights;
  j["Q0"] = kernel_to_json(test.q0.kernel);
  j["Q1"] = kernel_to_json(test.q1.kernel);
  j["Q0_stationary"] = test.q0.stationary.weights;
  j["Q1_stationary"] = test.q1.stationary.weights;
  return j;
}

json test_report_to_json(const TestReport& report) {
  json j;
  j["statistic"] = report.statistic.statistic;
  j["pair_statistic"] = report.statistic.pair_statistic;
  j["n"] = report.statistic.n;
  j["decision"] =
      report.decision == Decision::Reject ? "Reject" : "StandBy";
  j["type1_bound"] = report.bounds.type1;
  j["type2_bound"] = report.bounds.type2;
  j["type1_exponent"] = report.bounds.exponent1;
  j["type2_exponent"] = report.bounds.exponent2;
  return j;
}

json tail_experiment_to_json(const TailExperimentReport& report) {
  json j;
  j["t_grid"] = report.t_grid;
  j["empirical_tail"] = report.empirical_tail;
  j["standard_error"] = report.standard_error;
  j["bound_names"] = report.bound_names;
  j["bound_values"] = report.bound_values;
  json v = json::array();
  for (const auto& [curve, ti] : report.violations)
    v.push_back(json{{"bound", report.bound_names[curve]}, {"t", report.t_grid[ti]}});
  j["violations"] = std::move(v);
  return j;
}

json tv_experiment_to_json(const TvExperimentReport& report) {
  json j;
  j["mean_tv"] = report.mean_tv;
  j["mean_bound"] = report.mean_bound;
  j["mean_ok"] = report.mean_ok;
  j["t_grid"] = report.t_grid;
  j["empirical_concentration"] = report.empirical_concentration;
  j["mcdiarmid_bound"] = report.mcdiarmid_bound;
  j["violations"] = report.violations;
  return j;
}

MarkovKernel load_kernel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  json j;
  in >> j;
  return kernel_from_json(j);
}

std::string load_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json round_json(const json& j, int digits) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (x == 0.0 || !std::isfinite(x)) return j;
    const double mag = std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(x))));
    return std::round(x * mag) / mag;
  }
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it)
      out[it.key()] = round_json(it.value(), digits);
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& e : j) out.push_back(round_json(e, digits));
    return out;
  }
  return j;
}

}  // namespace markov
