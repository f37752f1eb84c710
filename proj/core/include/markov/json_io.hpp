#pragma once

#include <string>

#include "json.hpp"
#include "markov/bounds.hpp"
#include "markov/hypothesis.hpp"
#include "markov/kernel.hpp"
#include "markov/marton.hpp"
#include "markov/mixing.hpp"
#include "markov/simulate.hpp"
#include "markov/spectral.hpp"

namespace markov {

using json = nlohmann::json;

// Kernel JSON: {"states": [...], "matrix": [[...], ...]}
MarkovKernel kernel_from_json(const json& j);
json kernel_to_json(const MarkovKernel& kernel);

// Distribution JSON: {"states": [...], "weights": [...]}
Distribution distribution_from_json(const json& j);
json distribution_to_json(const Distribution& dist);

json spectral_report_to_json(const SpectralReport& report);
json mixing_report_to_json(const MixingReport& report);
json variance_report_to_json(const VarianceReport& report);
json tail_bound_to_json(const TailBound& bound);
json mixing_matrix_to_json(const MixingMatrix& gamma);
json test_to_json(const HypothesisTest& test);
json test_report_to_json(const TestReport& report);
json tail_experiment_to_json(const TailExperimentReport& report);
json tv_experiment_to_json(const TvExperimentReport& report);

MarkovKernel load_kernel_file(const std::string& path);
std::string load_text_file(const std::string& path);

/// Round every number in the tree to `digits` significant digits.
json round_json(const json& j, int digits);

}  // namespace markov
