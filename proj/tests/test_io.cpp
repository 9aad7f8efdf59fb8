#include <doctest.h>

#include <filesystem>

#include "nphmm/error.hpp"
#include "nphmm/io.hpp"
#include "nphmm/moments.hpp"
#include "support.hpp"

using namespace nphmm;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path p = fs::temp_directory_path() / "nphmm_test_io";
  fs::create_directories(p);
  return p;
}

HMMSpec two_state_spec() {
  Eigen::MatrixXd q(2, 2);
  q << 0.7, 0.3, 0.4, 0.6;
  return HMMSpec{TransitionMatrix(q), {DensityFn::beta(2, 5), DensityFn::beta(4, 2)}};
}

}  // namespace

TEST_CASE("matrix round trip is exact") {
  Rng rng(1);
  Eigen::MatrixXd m(3, 4);
  for (int i = 0; i < m.size(); ++i) m.data()[i] = rng.normal() * 1e-7 + 1.0 / 3.0;
  const json j = json::parse(to_json(m).dump());
  CHECK(matrix_from_json(j) == m);
  Eigen::VectorXd v = m.col(2);
  CHECK(vector_from_json(json::parse(to_json(v).dump())) == v);
}

TEST_CASE("spec round trip") {
  const auto spec = two_state_spec();
  const HMMSpec back = spec_from_json(json::parse(to_json(spec).dump()));
  CHECK(back.Q.matrix() == spec.Q.matrix());
  REQUIRE(back.emissions.size() == 2);
  for (double y : {0.1, 0.5, 0.93}) CHECK(back.emissions[1](y) == spec.emissions[1](y));

  const auto b = BasisFamily::trigonometric(5);
  Eigen::VectorXd a(5);
  a << 1.0, 0.2, -0.1, 0.05, 0.0;
  const DensityFn e = density_from_json(json::parse(to_json(DensityFn::expansion(b, a)).dump()));
  CHECK(e(0.3) == doctest::Approx(evaluate_expansion(b, a, 0.3)).epsilon(1e-15));

  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"Q": [[0.5, 0.6], [0.5, 0.5]], "emissions": [{"beta": [2, 5]}, {"beta": [4, 2]}]})")),
                  Error);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"Q": [[1.0]], "emissions": []})")), Error);
}

TEST_CASE("samples csv round trip is exact") {
  const Samples s = sample_chain(two_state_spec(), 200, Scenario::B, 3);
  const Samples back = samples_from_csv(samples_to_csv(s));
  CHECK(back == s);
  CHECK(samples_to_csv(s).rfind("s,y1,y2,y3\n", 0) == 0);
  CHECK_THROWS_AS(samples_from_csv("s,y1,y2,y3\n0,0.1,0.2\n"), Error);
  CHECK_THROWS_AS(samples_from_csv("s,y1,y2,y3\n0,0.1,0.2,1.5\n"), Error);
}

TEST_CASE("moments binary round trip is exact") {
  const auto b = BasisFamily::trigonometric(5);
  const MomentSet m = empirical_moments(sample_chain(two_state_spec(), 500, Scenario::B, 4), b);
  const auto path = (scratch_dir() / "m.bin").string();
  write_moments(m, path);
  const MomentSet r = read_moments(path);
  CHECK(r.M == m.M);
  CHECK(r.n_samples == m.n_samples);
  CHECK(r.L == m.L);
  CHECK(r.N == m.N);
  CHECK(r.P == m.P);
  CHECK(r.T == m.T);
  write_file_atomic(path, "garbage");
  CHECK_THROWS_AS(read_moments(path), Error);
}

TEST_CASE("atomic write leaves no temporary") {
  const fs::path dir = scratch_dir() / "atomic";
  fs::remove_all(dir);
  fs::create_directories(dir);
  write_file_atomic((dir / "a.txt").string(), "one");
  write_file_atomic((dir / "a.txt").string(), "two");
  CHECK(read_file((dir / "a.txt").string()) == "two");
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);
  CHECK_THROWS_AS(read_file((dir / "missing").string()), Error);
}

TEST_CASE("spectral estimate round trip") {
  const auto b = BasisFamily::histogram(6);
  const JointModel model = JointModel::from(two_state_spec().Q, project_all(two_state_spec().emissions, b), b);
  const SpectralEstimate est = spectral_estimate(population_moments(model), 2, 9);
  const SpectralEstimate back = spectral_from_json(json::parse(to_json(est).dump()));
  CHECK(back.O == est.O);
  CHECK(back.Q == est.Q);
  CHECK(back.pi == est.pi);
}

TEST_CASE("trace round trips") {
  SelectionTrace t{5000, {2, 3, 5}, {-1.25, -1.5, -1.5625}};
  const SelectionTrace j = trace_from_json(json::parse(to_json(t).dump()));
  CHECK(j.N == t.N);
  CHECK(j.M == t.M);
  CHECK(j.gamma == t.gamma);
  const SelectionTrace c = trace_from_csv(trace_to_csv(t), t.N);
  CHECK(c.M == t.M);
  CHECK(c.gamma == t.gamma);
}

TEST_CASE("pipeline config overrides") {
  PipelineConfig c;
  c.N = 1234;
  c.rho = 2.5;
  c.basis = BasisKind::Trigonometric;
  c.optimizer.max_evals = 77;
  const PipelineConfig back = pipeline_config_from_json(json::parse(to_json(c).dump()));
  CHECK(to_json(back) == to_json(c));

  const PipelineConfig partial = pipeline_config_from_json(json::parse(R"({"N": 10, "optimizer": {"seed": 3}})"), c);
  CHECK(partial.N == 10);
  CHECK(partial.optimizer.seed == 3);
  CHECK(partial.optimizer.max_evals == 77);
  CHECK(partial.rho == 2.5);
  CHECK_THROWS_AS(pipeline_config_from_json(json::parse(R"({"Nn": 10})")), Error);
}
