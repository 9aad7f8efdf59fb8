#include "nphmm/hmm_model.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/QR>

#include "nphmm/error.hpp"
#include "nphmm/rng.hpp"

namespace nphmm {

namespace {

using Pattern = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

Pattern bool_product(const Pattern& a, const Pattern& b) {
  const Eigen::Index n = a.rows();
  Pattern c = Pattern::Constant(n, n, false);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      if (a(i, k))
        for (Eigen::Index j = 0; j < n; ++j) c(i, j) = c(i, j) || b(k, j);
  return c;
}

Pattern bool_power(Pattern a, long e) {
  Pattern r = Pattern::Identity(a.rows(), a.cols());
  while (e > 0) {
    if (e & 1) r = bool_product(r, a);
    a = bool_product(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace

TransitionMatrix::TransitionMatrix(Eigen::MatrixXd Q, double tol) : Q_(std::move(Q)) {
  if (Q_.rows() == 0 || Q_.rows() != Q_.cols())
    throw Error(ErrorKind::InvalidArgument, "transition matrix must be square and nonempty");
  if (!Q_.allFinite()) throw Error(ErrorKind::InvalidArgument, "transition matrix has non-finite entries");
  if ((Q_.array() < 0.0).any() || (Q_.array() > 1.0).any())
    throw Error(ErrorKind::InvalidArgument, "transition matrix entries must lie in [0, 1]");
  for (Eigen::Index i = 0; i < Q_.rows(); ++i) {
    const double s = Q_.row(i).sum();
    if (std::abs(s - 1.0) > tol) {
      std::ostringstream os;
      os << "row " << i << " sums to " << s;
      throw Error(ErrorKind::InvalidArgument, os.str());
    }
  }
}

bool TransitionMatrix::is_primitive() const {
  const long K = this->K();
  const Pattern p = (Q_.array() > 0.0).matrix();
  return bool_power(p, (K - 1) * (K - 1) + 1).all();
}

bool TransitionMatrix::has_unique_stationary() const {
  // Exactly one closed communicating class: states reachable from every state
  // form one class.
  const int K = this->K();
  const Pattern p = (Q_.array() > 0.0).matrix();
  const Pattern reach = bool_power((p.array() || Pattern::Identity(K, K).array()).matrix(), K);
  for (int j = 0; j < K; ++j)
    if (reach.col(j).all()) return true;
  return false;
}

Eigen::VectorXd stationary(const TransitionMatrix& Q, ErgodicCheck check) {
  const bool ok = check == ErgodicCheck::Primitive ? Q.is_primitive() : Q.has_unique_stationary();
  if (!ok)
    throw Error(ErrorKind::NotErgodic, check == ErgodicCheck::Primitive
                                           ? "transition matrix is not irreducible and aperiodic"
                                           : "transition matrix has no unique stationary law");
  const int K = Q.K();
  Eigen::MatrixXd sys(K + 1, K);
  sys.topRows(K) = Q.matrix().transpose() - Eigen::MatrixXd::Identity(K, K);
  sys.row(K).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(K + 1);
  rhs[K] = 1.0;
  Eigen::VectorXd pi = sys.colPivHouseholderQr().solve(rhs);
  pi = pi.cwiseMax(0.0);
  return pi / pi.sum();
}

void HMMSpec::validate() const {
  if (static_cast<int>(emissions.size()) != K()) {
    std::ostringstream os;
    os << "spec has K = " << K() << " states but " << emissions.size() << " emission densities";
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

Samples sample_chain(const HMMSpec& spec, long N, Scenario scenario, std::uint64_t seed,
                     std::vector<int>* states) {
  spec.validate();
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be positive");
  std::vector<DensityFn::Beta> params;
  for (const auto& f : spec.emissions) {
    const auto* b = std::get_if<DensityFn::Beta>(&f.descriptor());
    if (!b) throw Error(ErrorKind::InvalidArgument, "sampling requires Beta emission densities");
    params.push_back(*b);
  }
  const Eigen::VectorXd pi = stationary(spec.Q);
  const Eigen::MatrixXd& Q = spec.Q.matrix();
  Rng rng(seed);
  auto emit = [&](int k) { return rng.beta(params[k].alpha, params[k].beta); };

  Samples out(N, 3);
  if (states) states->clear();
  if (scenario == Scenario::A) {
    for (long s = 0; s < N; ++s) {
      int x = rng.categorical(pi);
      for (int i = 0; i < 3; ++i) {
        if (i > 0) x = rng.categorical(Q.row(x));
        out(s, i) = emit(x);
        if (states) states->push_back(x);
      }
    }
    return out;
  }
  std::vector<double> y(N + 2);
  int x = rng.categorical(pi);
  for (long t = 0; t < N + 2; ++t) {
    if (t > 0) x = rng.categorical(Q.row(x));
    y[t] = emit(x);
    if (states) states->push_back(x);
  }
  for (long s = 0; s < N; ++s)
    for (int i = 0; i < 3; ++i) out(s, i) = y[s + i];
  return out;
}

Eigen::VectorXd triple_weights(const Eigen::MatrixXd& Q, const Eigen::VectorXd& pi) {
  const int K = static_cast<int>(Q.rows());
  Eigen::VectorXd w(K * K * K);
  for (int k3 = 0; k3 < K; ++k3)
    for (int k2 = 0; k2 < K; ++k2)
      for (int k1 = 0; k1 < K; ++k1) w[k1 + K * (k2 + K * k3)] = pi[k1] * Q(k1, k2) * Q(k2, k3);
  return w;
}

JointModel JointModel::from(const TransitionMatrix& Q, Eigen::MatrixXd A, const BasisFamily& b) {
  validate(b);
  if (A.rows() != b.M || A.cols() != Q.K())
    throw Error(ErrorKind::InvalidArgument, "coefficient matrix must be M x K");
  return JointModel{Q.matrix(), stationary(Q, ErgodicCheck::UniqueStationary), std::move(A), b};
}

double joint_density(const JointModel& model, double y1, double y2, double y3) {
  // f_k(y_i) for each coordinate, then sum_k w(k) f(y1) f(y2) f(y3) as a
  // sequence of K x K contractions.
  const Eigen::VectorXd f1 = model.A.transpose() * evaluate_all(model.basis, y1);
  const Eigen::VectorXd f2 = model.A.transpose() * evaluate_all(model.basis, y2);
  const Eigen::VectorXd f3 = model.A.transpose() * evaluate_all(model.basis, y3);
  const Eigen::VectorXd v3 = model.Q * f3;
  const Eigen::VectorXd v2 = model.Q * f2.cwiseProduct(v3);
  return model.pi.dot(f1.cwiseProduct(v2));
}

double joint_norm_sq(const Eigen::MatrixXd& Q, const Eigen::VectorXd& pi, const Eigen::MatrixXd& G) {
  const Eigen::MatrixXd inner = Q * G * Q.transpose();
  const Eigen::MatrixXd mid = Q * G.cwiseProduct(inner) * Q.transpose();
  return pi.dot(G.cwiseProduct(mid) * pi);
}

double joint_norm_sq(const JointModel& model) {
  return joint_norm_sq(model.Q, model.pi, model.A.transpose() * model.A);
}

}  // namespace nphmm
