#ifndef NPHMM_IO_HPP
#define NPHMM_IO_HPP

#include <string>

#include <Eigen/Core>
#include <json.hpp>

#include "nphmm/contrast.hpp"
#include "nphmm/evaluation.hpp"
#include "nphmm/hmm_model.hpp"
#include "nphmm/selection.hpp"
#include "nphmm/spectral.hpp"

namespace nphmm {

using json = nlohmann::json;

std::string read_file(const std::string& path);
/// Write to a sibling temporary file, then rename over `path`.
void write_file_atomic(const std::string& path, const std::string& contents);

json to_json(const Eigen::MatrixXd& m);
json to_json(const Eigen::VectorXd& v);
Eigen::MatrixXd matrix_from_json(const json& j);
Eigen::VectorXd vector_from_json(const json& j);

json to_json(const BasisFamily& b);
BasisFamily basis_from_json(const json& j);

/// {"beta": [a, b]} or {"basis": ..., "M": ..., "coefficients": [...]}.
json to_json(const DensityFn& f);
DensityFn density_from_json(const json& j);

/// {"Q": [[...]], "emissions": [{"beta": [2, 5]}, ...]}
json to_json(const HMMSpec& spec);
HMMSpec spec_from_json(const json& j);

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& s);

/// Header s,y1,y2,y3; s counts from 0.
std::string samples_to_csv(const Samples& samples);
Samples samples_from_csv(const std::string& text);

json to_json(const SpectralEstimate& est);
SpectralEstimate spectral_from_json(const json& j);

json to_json(const FitResult& fit);
/// Header M,gamma,evals,seconds.
std::string fit_trace_csv_header();
std::string fit_trace_csv_row(int M, const FitResult& fit);

json to_json(const SelectionTrace& trace);
SelectionTrace trace_from_json(const json& j);
/// Header M,gamma.
std::string trace_to_csv(const SelectionTrace& trace);
SelectionTrace trace_from_csv(const std::string& text, long N);
json to_json(const CalibrationResult& r);

json to_json(const OptimizerConfig& c);
json to_json(const PipelineConfig& c);
/// Keys present in `j` override `defaults`; unknown keys throw.
OptimizerConfig optimizer_config_from_json(const json& j, OptimizerConfig defaults = {});
PipelineConfig pipeline_config_from_json(const json& j, PipelineConfig defaults = {});
json to_json(const RiskReport& r);
/// Deterministic given the config: wall-clock times live in timing_to_json.
json to_json(const PipelineReport& rep);
json timing_to_json(const PipelineReport& rep);
/// Header M,gamma,pen,variance_spectral,variance_ls,risk_total; pen uses the
/// report's rho and risk_total is the least-squares risk.
std::string curves_to_csv(const PipelineReport& rep);

}  // namespace nphmm

#endif  // NPHMM_IO_HPP
