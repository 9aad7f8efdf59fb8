#include "nphmm/moments.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "nphmm/error.hpp"
#include "nphmm/io.hpp"
#include "nphmm/parallel.hpp"

namespace nphmm {

namespace {

constexpr long kChunk = 4096;
constexpr int kBatch = 64;

void add_into(MomentSet& acc, const MomentSet& x) {
  acc.n_samples += x.n_samples;
  acc.L += x.L;
  acc.N += x.N;
  acc.P += x.P;
  for (std::size_t i = 0; i < acc.T.size(); ++i) acc.T[i] += x.T[i];
}

void scale(MomentSet& m, double s) {
  m.L *= s;
  m.N *= s;
  m.P *= s;
  for (double& v : m.T) v *= s;
}

// Unnormalized sums over rows [begin, end) for a smooth basis.
MomentSet chunk_sums(const Samples& samples, const BasisFamily& b, long begin, long end) {
  const int M = b.M;
  const long n = end - begin;
  Eigen::MatrixXd phi1(n, M), phi2(n, M), phi3(n, M);
  Eigen::VectorXd phi(M);
  for (long s = 0; s < n; ++s) {
    evaluate_all(b, samples(begin + s, 0), phi);
    phi1.row(s) = phi.transpose();
    evaluate_all(b, samples(begin + s, 1), phi);
    phi2.row(s) = phi.transpose();
    evaluate_all(b, samples(begin + s, 2), phi);
    phi3.row(s) = phi.transpose();
  }
  MomentSet m = MomentSet::zeros(M);
  m.n_samples = n;
  m.L = phi1.colwise().sum().transpose();
  m.N.noalias() = phi1.transpose() * phi2;
  m.P.noalias() = phi1.transpose() * phi3;
  Eigen::MatrixXd weighted(n, M);
  for (int bb = 0; bb < M; ++bb) {
    weighted = phi1.array().colwise() * phi2.col(bb).array();
    m.slice(bb).noalias() = weighted.transpose() * phi3;
  }
  return m;
}

// Counts are exact integers, so the histogram path needs no careful
// reduction order.
MomentSet histogram_moments(const Samples& samples, int M) {
  const long n = samples.rows();
  std::vector<std::int64_t> cL(M, 0), cN(M * M, 0), cP(M * M, 0);
  std::vector<std::int64_t> cT(static_cast<std::size_t>(M) * M * M, 0);
  for (long s = 0; s < n; ++s) {
    const int a = histogram_bin(M, samples(s, 0));
    const int bb = histogram_bin(M, samples(s, 1));
    const int c = histogram_bin(M, samples(s, 2));
    ++cL[a];
    ++cN[a + M * bb];
    ++cP[a + M * c];
    ++cT[a + M * (c + static_cast<std::size_t>(M) * bb)];
  }
  MomentSet m = MomentSet::zeros(M);
  m.n_samples = n;
  const double r = std::sqrt(double(M));
  const double inv = 1.0 / double(n);
  for (int i = 0; i < M; ++i) m.L[i] = r * cL[i] * inv;
  for (int i = 0; i < M * M; ++i) {
    m.N.data()[i] = M * (cN[i] * inv);
    m.P.data()[i] = M * (cP[i] * inv);
  }
  for (std::size_t i = 0; i < cT.size(); ++i) m.T[i] = M * r * (cT[i] * inv);
  return m;
}

}  // namespace

MomentSet MomentSet::zeros(int M) {
  MomentSet m;
  m.M = M;
  m.L = Eigen::VectorXd::Zero(M);
  m.N = Eigen::MatrixXd::Zero(M, M);
  m.P = Eigen::MatrixXd::Zero(M, M);
  m.T.assign(static_cast<std::size_t>(M) * M * M, 0.0);
  return m;
}

MomentSet MomentSet::truncate(int M_new) const {
  if (M_new < 1 || M_new > M) throw Error(ErrorKind::InvalidArgument, "truncation outside [1, M]");
  MomentSet m = zeros(M_new);
  m.n_samples = n_samples;
  m.L = L.head(M_new);
  m.N = N.topLeftCorner(M_new, M_new);
  m.P = P.topLeftCorner(M_new, M_new);
  for (int b = 0; b < M_new; ++b) m.slice(b) = slice(b).topLeftCorner(M_new, M_new);
  return m;
}

MomentSet empirical_moments(const Samples& samples, const BasisFamily& b) {
  validate(b);
  const long n = samples.rows();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "empty sample set");
  if (b.kind == BasisKind::Histogram) return histogram_moments(samples, b.M);

  // Binary-counter pairwise reduction: chunk partials are merged with their
  // equal-level neighbour as they arrive, in chunk order.
  const long chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::pair<int, MomentSet>> stack;
  for (long first = 0; first < chunks; first += kBatch) {
    const int count = static_cast<int>(std::min<long>(kBatch, chunks - first));
    std::vector<MomentSet> part(count);
    parallel_for(count, [&](int i) {
      const long begin = (first + i) * kChunk;
      part[i] = chunk_sums(samples, b, begin, std::min(n, begin + kChunk));
    });
    for (auto& p : part) {
      int level = 0;
      while (!stack.empty() && stack.back().first == level) {
        add_into(stack.back().second, p);
        p = std::move(stack.back().second);
        stack.pop_back();
        ++level;
      }
      stack.emplace_back(level, std::move(p));
    }
  }
  MomentSet total = std::move(stack.back().second);
  stack.pop_back();
  while (!stack.empty()) {
    add_into(stack.back().second, total);
    total = std::move(stack.back().second);
    stack.pop_back();
  }
  scale(total, 1.0 / double(n));
  return total;
}

MomentSet population_moments(const JointModel& model) {
  const int M = model.M();
  const Eigen::MatrixXd& A = model.A;
  const Eigen::MatrixXd& Q = model.Q;
  const Eigen::MatrixXd ADQ = A * model.pi.asDiagonal() * Q;
  MomentSet m = MomentSet::zeros(M);
  m.L = A * model.pi;
  m.N = ADQ * A.transpose();
  m.P = ADQ * Q * A.transpose();
  const Eigen::MatrixXd V = A * Q.transpose();
  for (int b = 0; b < M; ++b) m.slice(b) = ADQ * A.row(b).asDiagonal() * V.transpose();
  return m;
}

MomentSet combine(const MomentSet& a, const MomentSet& b) {
  if (a.M != b.M) throw Error(ErrorKind::InvalidArgument, "moment sets differ in M");
  const double n = double(a.n_samples + b.n_samples);
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "moment sets carry no samples");
  const double wa = a.n_samples / n, wb = b.n_samples / n;
  MomentSet m = MomentSet::zeros(a.M);
  m.n_samples = a.n_samples + b.n_samples;
  m.L = wa * a.L + wb * b.L;
  m.N = wa * a.N + wb * b.N;
  m.P = wa * a.P + wb * b.P;
  for (std::size_t i = 0; i < m.T.size(); ++i) m.T[i] = wa * a.T[i] + wb * b.T[i];
  return m;
}

namespace {

constexpr char kMagic[8] = {'N', 'P', 'H', 'M', 'M', '-', 'M', '1'};

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(const std::string& in, std::size_t& pos) {
  if (pos + 8 > in.size()) throw Error(ErrorKind::IoError, "truncated moment file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  pos += 8;
  return v;
}

void put_doubles(std::string& out, const double* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) put_u64(out, std::bit_cast<std::uint64_t>(p[i]));
}

void get_doubles(const std::string& in, std::size_t& pos, double* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) p[i] = std::bit_cast<double>(get_u64(in, pos));
}

}  // namespace

void write_moments(const MomentSet& m, const std::string& path) {
  std::string out(kMagic, 8);
  const std::size_t M = m.M;
  out.reserve(24 + 8 * (M + 2 * M * M + M * M * M));
  put_u64(out, M);
  put_u64(out, static_cast<std::uint64_t>(m.n_samples));
  put_doubles(out, m.L.data(), M);
  put_doubles(out, m.N.data(), M * M);
  put_doubles(out, m.P.data(), M * M);
  put_doubles(out, m.T.data(), m.T.size());
  write_file_atomic(path, out);
}

MomentSet read_moments(const std::string& path) {
  const std::string in = read_file(path);
  if (in.size() < 8 || std::memcmp(in.data(), kMagic, 8) != 0)
    throw Error(ErrorKind::IoError, path + ": not a moment file");
  std::size_t pos = 8;
  const std::uint64_t M = get_u64(in, pos);
  const std::uint64_t n = get_u64(in, pos);
  if (M == 0 || M > 4096 || in.size() != 24 + 8 * (M + 2 * M * M + M * M * M))
    throw Error(ErrorKind::IoError, path + ": moment file size does not match its header");
  MomentSet m = MomentSet::zeros(static_cast<int>(M));
  m.n_samples = static_cast<long>(n);
  get_doubles(in, pos, m.L.data(), M);
  get_doubles(in, pos, m.N.data(), M * M);
  get_doubles(in, pos, m.P.data(), M * M);
  get_doubles(in, pos, m.T.data(), m.T.size());
  return m;
}

}  // namespace nphmm
