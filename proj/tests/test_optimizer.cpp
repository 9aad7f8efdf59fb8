#include <doctest.h>

#include <cmath>
#include <limits>

#include "nphmm/error.hpp"
#include "nphmm/optimizer.hpp"

using namespace nphmm;

TEST_CASE("sphere") {
  OptimizerConfig cfg;
  cfg.max_evals = 5000;
  const auto r = cmaes_minimize([](const Eigen::VectorXd& x) { return x.squaredNorm(); }, Eigen::VectorXd::Ones(10), cfg);
  CHECK(r.f <= 1e-8);
  CHECK(r.evals <= 5000);
}

TEST_CASE("constant objective stops on stagnation at the start point") {
  OptimizerConfig cfg;
  cfg.max_evals = 100000;
  const Eigen::VectorXd x0 = Eigen::VectorXd::LinSpaced(4, 0.0, 1.0);
  const auto r = cmaes_minimize([](const Eigen::VectorXd&) { return 3.0; }, x0, cfg);
  CHECK(r.x == x0);
  CHECK(r.f == 3.0);
  CHECK(r.converged);
  CHECK(r.evals < 100000);
}

TEST_CASE("Rosenbrock in five dimensions") {
  auto rosen = [](const Eigen::VectorXd& x) {
    double s = 0.0;
    for (int i = 0; i + 1 < x.size(); ++i) s += 100.0 * std::pow(x[i + 1] - x[i] * x[i], 2) + std::pow(1.0 - x[i], 2);
    return s;
  };
  int solved = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    OptimizerConfig cfg;
    cfg.max_evals = 20000;
    cfg.seed = seed;
    const auto r = cmaes_minimize(rosen, Eigen::VectorXd::Zero(5), cfg);
    solved += r.f <= 1e-6;
  }
  CHECK(solved >= 8);
}

TEST_CASE("best-ever value never exceeds the start and runs are reproducible") {
  auto f = [](const Eigen::VectorXd& x) { return std::sin(3.0 * x[0]) + x.squaredNorm(); };
  OptimizerConfig cfg;
  cfg.max_evals = 600;
  cfg.seed = 5;
  const Eigen::VectorXd x0 = Eigen::VectorXd::Constant(3, 0.7);
  const auto a = cmaes_minimize(f, x0, cfg), b = cmaes_minimize(f, x0, cfg);
  CHECK(a.f <= f(x0));
  CHECK(a.x == b.x);
  CHECK(a.f == b.f);
  CHECK(a.evals == b.evals);
  CHECK(f(a.x) == a.f);
}

TEST_CASE("non-finite objective") {
  OptimizerConfig cfg;
  cfg.max_evals = 100000;
  const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(3);
  auto nan_away = [&](const Eigen::VectorXd& x) {
    return x == x0 ? 1.0 : std::numeric_limits<double>::quiet_NaN();
  };
  try {
    cmaes_minimize(nan_away, x0, cfg);
    FAIL("expected NonFiniteObjective");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFiniteObjective);
  }
  // Occasional non-finite values are tolerated and rank last.
  auto holes = [](const Eigen::VectorXd& x) {
    return x[0] > 0.5 ? std::numeric_limits<double>::infinity() : (x.array() + 0.3).square().sum();
  };
  const auto r = cmaes_minimize(holes, x0, cfg);
  CHECK(r.f < 1e-8);
  CHECK_THROWS_AS(cmaes_minimize(nan_away, Eigen::VectorXd::Ones(3), cfg), Error);
}

TEST_CASE("configuration checks") {
  OptimizerConfig cfg;
  cfg.max_evals = 3;
  CHECK_THROWS_AS(cmaes_minimize([](const Eigen::VectorXd& x) { return x.sum(); }, Eigen::VectorXd::Zero(2), cfg), Error);
  cfg.max_evals = 100;
  CHECK_THROWS_AS(cmaes_minimize([](const Eigen::VectorXd& x) { return x.sum(); }, Eigen::VectorXd(), cfg), Error);
}
