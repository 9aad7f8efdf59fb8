#include "nphmm/io.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "nphmm/error.hpp"

namespace nphmm {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot rename onto '" + path + "': " + ec.message());
}

json to_json(const Eigen::MatrixXd& m) {
  json j = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    j.push_back(row);
  }
  return j;
}

json to_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

Eigen::MatrixXd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw Error(ErrorKind::InvalidArgument, "expected a nonempty nested array");
  const std::size_t rows = j.size(), cols = j[0].size();
  Eigen::MatrixXd m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
  }
  return m;
}

Eigen::VectorXd vector_from_json(const json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

json to_json(const BasisFamily& b) { return {{"basis", to_string(b.kind)}, {"M", b.M}}; }

BasisFamily basis_from_json(const json& j) {
  BasisFamily b{basis_kind_from_string(j.at("basis").get<std::string>()), j.at("M").get<int>()};
  validate(b);
  return b;
}

json to_json(const DensityFn& f) {
  if (const auto* b = std::get_if<DensityFn::Beta>(&f.descriptor())) return {{"beta", {b->alpha, b->beta}}};
  if (const auto* e = std::get_if<DensityFn::Expansion>(&f.descriptor())) {
    json j = to_json(e->basis);
    j["coefficients"] = to_json(e->coefficients);
    return j;
  }
  return {{"custom", std::get<DensityFn::Custom>(f.descriptor()).name}};
}

DensityFn density_from_json(const json& j) {
  if (j.contains("beta")) {
    const auto p = j.at("beta").get<std::vector<double>>();
    if (p.size() != 2) throw Error(ErrorKind::InvalidArgument, "beta needs two parameters");
    return DensityFn::beta(p[0], p[1]);
  }
  if (j.contains("coefficients")) return DensityFn::expansion(basis_from_json(j), vector_from_json(j.at("coefficients")));
  throw Error(ErrorKind::InvalidArgument, "unknown emission description " + j.dump());
}

json to_json(const HMMSpec& spec) {
  json e = json::array();
  for (const auto& f : spec.emissions) e.push_back(to_json(f));
  return {{"Q", to_json(spec.Q.matrix())}, {"emissions", e}};
}

HMMSpec spec_from_json(const json& j) {
  try {
    HMMSpec spec{TransitionMatrix(matrix_from_json(j.at("Q"))), {}};
    for (const auto& e : j.at("emissions")) spec.emissions.push_back(density_from_json(e));
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("model spec: ") + e.what());
  }
}

std::string to_string(Scenario s) { return s == Scenario::A ? "A" : "B"; }

Scenario scenario_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Scenario::A;
  if (s == "B" || s == "b") return Scenario::B;
  throw Error(ErrorKind::InvalidArgument, "scenario must be A or B");
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

std::string samples_to_csv(const Samples& samples) {
  std::string out = "s,y1,y2,y3\n";
  for (Eigen::Index s = 0; s < samples.rows(); ++s)
    out += std::to_string(s) + "," + fmt(samples(s, 0)) + "," + fmt(samples(s, 1)) + "," + fmt(samples(s, 2)) + "\n";
  return out;
}

Samples samples_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "s,y1,y2,y3")
    throw Error(ErrorKind::IoError, "sample CSV must start with the header s,y1,y2,y3");
  std::vector<std::array<double, 3>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 4) throw Error(ErrorKind::IoError, "bad sample row '" + line + "'");
    std::array<double, 3> r{};
    for (int i = 0; i < 3; ++i) {
      r[i] = std::stod(f[i + 1]);
      if (!(r[i] >= 0.0 && r[i] <= 1.0)) throw Error(ErrorKind::DomainError, "sample outside [0, 1]: " + line);
    }
    rows.push_back(r);
  }
  Samples s(static_cast<Eigen::Index>(rows.size()), 3);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < 3; ++c) s(i, c) = rows[i][c];
  return s;
}

json to_json(const SpectralEstimate& est) {
  const auto& d = est.diagnostics;
  return {{"O_hat", to_json(est.O)},
          {"pi_tilde", to_json(est.pi_tilde)},
          {"Q_hat", to_json(est.Q)},
          {"pi_hat", to_json(est.pi)},
          {"diagnostics",
           {{"singular_values", to_json(d.singular_values)},
            {"cond_whitening", d.cond_whitening},
            {"cond_eigenvectors", d.cond_eigenvectors},
            {"cond_UO", d.cond_UO},
            {"max_imag_ratio", d.max_imag_ratio},
            {"redraws", d.redraws}}}};
}

SpectralEstimate spectral_from_json(const json& j) {
  SpectralEstimate est;
  est.O = matrix_from_json(j.at("O_hat"));
  est.pi_tilde = vector_from_json(j.at("pi_tilde"));
  est.Q = matrix_from_json(j.at("Q_hat"));
  est.pi = vector_from_json(j.at("pi_hat"));
  if (j.contains("diagnostics")) {
    const json& d = j["diagnostics"];
    est.diagnostics.singular_values = vector_from_json(d.at("singular_values"));
    est.diagnostics.cond_whitening = d.value("cond_whitening", 0.0);
    est.diagnostics.cond_eigenvectors = d.value("cond_eigenvectors", 0.0);
    est.diagnostics.cond_UO = d.value("cond_UO", 0.0);
    est.diagnostics.max_imag_ratio = d.value("max_imag_ratio", 0.0);
    est.diagnostics.redraws = d.value("redraws", 0);
  }
  return est;
}

json to_json(const FitResult& fit) {
  return {{"A_hat", to_json(fit.A)},       {"gamma_value", fit.gamma_value}, {"gamma_init", fit.gamma_init},
          {"evals_used", fit.evals},       {"converged", fit.converged},     {"seconds", fit.seconds}};
}

std::string fit_trace_csv_header() { return "M,gamma,evals,seconds\n"; }

std::string fit_trace_csv_row(int M, const FitResult& fit) {
  return std::to_string(M) + "," + fmt(fit.gamma_value) + "," + std::to_string(fit.evals) + "," + fmt(fit.seconds) +
         "\n";
}

json to_json(const SelectionTrace& trace) { return {{"N", trace.N}, {"M", trace.M}, {"gamma", trace.gamma}}; }

SelectionTrace trace_from_json(const json& j) {
  SelectionTrace t{j.at("N").get<long>(), j.at("M").get<std::vector<int>>(), j.at("gamma").get<std::vector<double>>()};
  t.validate();
  return t;
}

std::string trace_to_csv(const SelectionTrace& trace) {
  std::string out = "M,gamma\n";
  for (std::size_t i = 0; i < trace.M.size(); ++i) out += std::to_string(trace.M[i]) + "," + fmt(trace.gamma[i]) + "\n";
  return out;
}

SelectionTrace trace_from_csv(const std::string& text, long N) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::IoError, "empty trace CSV");
  const auto header = split(line, ',');
  int col_M = -1, col_g = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "M") col_M = static_cast<int>(i);
    if (header[i] == "gamma") col_g = static_cast<int>(i);
  }
  if (col_M < 0 || col_g < 0) throw Error(ErrorKind::IoError, "trace CSV needs M and gamma columns");
  SelectionTrace t;
  t.N = N;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (static_cast<int>(f.size()) <= std::max(col_M, col_g)) throw Error(ErrorKind::IoError, "short trace row");
    t.M.push_back(std::stoi(f[col_M]));
    t.gamma.push_back(std::stod(f[col_g]));
  }
  t.validate();
  return t;
}

json to_json(const CalibrationResult& r) {
  json j = {{"method", to_string(r.method)}, {"rho_hat", r.rho_hat}, {"M_hat", r.M_hat}};
  if (r.method == CalibrationMethod::DimensionJump) {
    j["rho_jump"] = r.rho_jump;
    j["jump_size"] = r.jump_size;
  } else {
    j["window"] = {r.window_lo, r.window_hi};
    j["slope"] = r.slope;
    j["r_squared"] = r.r_squared;
  }
  return j;
}

json to_json(const OptimizerConfig& c) {
  return {{"sigma0", c.sigma0},   {"max_evals", c.max_evals}, {"seed", c.seed},
          {"population", c.population}, {"tol_fun", c.tol_fun}, {"stagnation_generations", c.stagnation_generations}};
}

json to_json(const PipelineConfig& c) {
  json j = {{"N", c.N},
            {"scenario", to_string(c.scenario)},
            {"basis", to_string(c.basis)},
            {"M_min", c.M_min},
            {"M_max", c.M_max},
            {"calibration", to_string(c.calibration)},
            {"optimizer", to_json(c.optimizer)},
            {"seed", c.seed},
            {"least_squares", c.least_squares}};
  j["rho"] = c.rho ? json(*c.rho) : json(nullptr);
  return j;
}

OptimizerConfig optimizer_config_from_json(const json& j, OptimizerConfig c) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "optimizer config must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "sigma0") c.sigma0 = v.get<double>();
    else if (key == "max_evals") c.max_evals = v.get<long>();
    else if (key == "seed") c.seed = v.get<std::uint64_t>();
    else if (key == "population") c.population = v.get<int>();
    else if (key == "tol_fun") c.tol_fun = v.get<double>();
    else if (key == "stagnation_generations") c.stagnation_generations = v.get<int>();
    else throw Error(ErrorKind::InvalidArgument, "unknown optimizer key: " + key);
  }
  return c;
}

PipelineConfig pipeline_config_from_json(const json& j, PipelineConfig c) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "pipeline config must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "N") c.N = v.get<long>();
    else if (key == "scenario") c.scenario = scenario_from_string(v.get<std::string>());
    else if (key == "basis") c.basis = basis_kind_from_string(v.get<std::string>());
    else if (key == "M_min") c.M_min = v.get<int>();
    else if (key == "M_max") c.M_max = v.get<int>();
    else if (key == "calibration") c.calibration = calibration_method_from_string(v.get<std::string>());
    else if (key == "rho") c.rho = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
    else if (key == "optimizer") c.optimizer = optimizer_config_from_json(v, c.optimizer);
    else if (key == "seed") c.seed = v.get<std::uint64_t>();
    else if (key == "least_squares") c.least_squares = v.get<bool>();
    else throw Error(ErrorKind::InvalidArgument, "unknown pipeline key: " + key);
  }
  return c;
}

json to_json(const RiskReport& r) {
  return {{"perm", r.perm},
          {"bias_sq", to_json(r.bias_sq)},
          {"variance_sq", to_json(r.variance_sq)},
          {"risk", to_json(r.risk)},
          {"total", r.total()}};
}

json to_json(const PipelineReport& rep) {
  json models = json::array();
  for (const auto& m : rep.models)
    models.push_back({{"M", m.M},
                      {"gamma_spectral", m.gamma_spectral},
                      {"gamma_ls", m.fit.gamma_value},
                      {"evals", m.fit.evals},
                      {"converged", m.fit.converged},
                      {"variance_spectral", m.variance_spectral},
                      {"variance_ls", m.variance_ls},
                      {"risk_spectral", m.risk_spectral},
                      {"risk_ls", m.risk_ls},
                      {"Q_error", m.Q_error}});
  json skipped = json::array();
  for (const auto& s : rep.skipped) skipped.push_back({{"M", s.M}, {"reason", s.reason}});
  const PerModel& sel = rep.selected();
  json j = {{"config", to_json(rep.config)},
            {"K", rep.K},
            {"trace", to_json(rep.trace)},
            {"rho", rep.rho_used},
            {"M_hat", rep.M_hat},
            {"rho_grid", rep.rho_grid},
            {"M_of_rho", rep.M_of_rho},
            {"models", models},
            {"skipped", skipped},
            {"selected",
             {{"A_spectral", to_json(sel.A_spectral)},
              {"A_ls", to_json(sel.fit.A)},
              {"Q_hat", to_json(sel.Q_spectral)},
              {"pi_hat", to_json(sel.pi_spectral)},
              {"variance_spectral", rep.variance_spectral},
              {"variance_ls", rep.variance_ls},
              {"Q_error", rep.Q_error},
              {"risk_spectral", to_json(rep.risk_spectral)},
              {"risk_ls", to_json(rep.risk_ls)}}}};
  j["calibration"] = rep.calibration ? to_json(*rep.calibration) : json(nullptr);
  return j;
}

json timing_to_json(const PipelineReport& rep) {
  json per_model = json::array();
  for (const auto& m : rep.models) per_model.push_back({{"M", m.M}, {"seconds", m.fit.seconds}, {"evals", m.fit.evals}});
  return {{"seconds", rep.seconds}, {"models", per_model}};
}

std::string curves_to_csv(const PipelineReport& rep) {
  std::string out = "M,gamma,pen,variance_spectral,variance_ls,risk_total\n";
  for (const auto& m : rep.models)
    out += std::to_string(m.M) + "," + fmt(m.fit.gamma_value) + "," + fmt(penalty(rep.trace.N, m.M, rep.rho_used)) +
           "," + fmt(m.variance_spectral) + "," + fmt(m.variance_ls) + "," + fmt(m.risk_ls) + "\n";
  return out;
}

}  // namespace nphmm
