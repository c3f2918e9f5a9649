#include "filab/chain.hpp"

#include <deque>
#include <limits>

namespace filab {

namespace {

// BFS over the positive-entry graph; returns hop counts, -1 if unreachable.
std::vector<int> bfs(const Eigen::MatrixXd& T, int source, bool transpose) {
  const int n = static_cast<int>(T.rows());
  std::vector<int> dist(n, -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y = 0; y < n; ++y) {
      double p = transpose ? T(y, x) : T(x, y);
      if (p > 0.0 && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

void check_strongly_connected(const Eigen::MatrixXd& T) {
  auto fwd = bfs(T, 0, false);
  auto bwd = bfs(T, 0, true);
  for (size_t x = 0; x < fwd.size(); ++x) {
    if (fwd[x] < 0 || bwd[x] < 0)
      throw NotIrreducible("positive-entry graph is not strongly connected "
                           "(state " + std::to_string(x) + ")");
  }
}

}  // namespace

Eigen::MatrixXi graph_distance(const Eigen::MatrixXd& T) {
  const int n = static_cast<int>(T.rows());
  Eigen::MatrixXi dist(n, n);
  for (int x = 0; x < n; ++x) {
    auto row = bfs(T, x, false);
    for (int y = 0; y < n; ++y) {
      if (row[y] < 0)
        throw NotIrreducible("state " + std::to_string(y) +
                             " unreachable from " + std::to_string(x));
      dist(x, y) = row[y];
    }
  }
  return dist;
}

double sparsity_d(const Eigen::MatrixXd& T, bool include_diagonal) {
  const int n = static_cast<int>(T.rows());
  double d = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!include_diagonal && x == y) continue;
      if (T(x, y) > 0.0) d = std::max(d, 1.0 / T(x, y));
    }
  return d;
}

Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& T) {
  const int n = static_cast<int>(T.rows());
  if (n == 1) return Eigen::VectorXd::Ones(1);
  check_strongly_connected(T);
  // (T' - I) pi = 0 with a normalization row appended; least-squares solve.
  Eigen::MatrixXd A(n + 1, n);
  A.topRows(n) = T.transpose() - Eigen::MatrixXd::Identity(n, n);
  A.bottomRows(1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
  b(n) = 1.0;
  Eigen::VectorXd pi = A.colPivHouseholderQr().solve(b);
  if ((pi.array() <= 0.0).any())
    throw NotIrreducible("stationary solve produced a non-positive entry");
  return pi / pi.sum();
}

ChainSpec validate_chain(const Eigen::MatrixXd& T,
                         std::vector<std::string> labels,
                         const Eigen::VectorXd* pi,
                         const ValidateOptions& opts) {
  const int n = static_cast<int>(T.rows());
  if (n == 0 || T.cols() != n) throw InvalidParams("T must be square and non-empty");
  if (!T.allFinite()) throw NegativeEntry("T contains NaN or Inf");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (T(x, y) < 0.0)
        throw NegativeEntry("T(" + std::to_string(x) + "," + std::to_string(y) +
                            ") = " + std::to_string(T(x, y)) + " is negative");
  for (int x = 0; x < n; ++x) {
    double s = T.row(x).sum();
    if (std::abs(s - 1.0) > opts.tol_row)
      throw RowSumError("row " + std::to_string(x) + " sums to " +
                        std::to_string(s));
  }
  check_strongly_connected(T);

  Eigen::VectorXd stat;
  if (pi) {
    if (pi->size() != n) throw InvalidParams("pi has wrong length");
    if ((pi->array() <= 0.0).any())
      throw InvalidParams("pi must be strictly positive");
    if (std::abs(pi->sum() - 1.0) > 1e-10)
      throw InvalidParams("pi does not sum to 1");
    stat = *pi;
  } else {
    stat = stationary_distribution(T);
  }

  // detailed balance, relative to the largest flux
  Eigen::MatrixXd flux = stat.asDiagonal() * T;
  double scale = flux.maxCoeff();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (std::abs(flux(x, y) - flux(y, x)) > opts.tol_rev * scale)
        throw NotReversible("detailed balance fails at (" + std::to_string(x) +
                            "," + std::to_string(y) + "): " +
                            std::to_string(flux(x, y)) + " vs " +
                            std::to_string(flux(y, x)));

  ChainSpec chain;
  chain.n = n;
  if (labels.empty()) {
    labels.reserve(n);
    for (int x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  } else if (static_cast<int>(labels.size()) != n) {
    throw InvalidParams("label count does not match state count");
  }
  chain.labels = std::move(labels);
  chain.T = T;
  chain.pi = stat;
  chain.pi_star = stat.minCoeff();
  chain.d = sparsity_d(T, opts.d_includes_diagonal);
  chain.dist = graph_distance(T);
  chain.diam = chain.dist.maxCoeff();
  return chain;
}

ChainSpec validate_chain(const Eigen::MatrixXd& T, const Eigen::VectorXd* pi,
                         const ValidateOptions& opts) {
  return validate_chain(T, std::vector<std::string>{}, pi, opts);
}

Eigen::MatrixXd reversibilize(const Eigen::MatrixXd& T,
                              const Eigen::VectorXd& pi, double tol) {
  const int n = static_cast<int>(T.rows());
  if (pi.size() != n) throw InvalidParams("pi has wrong length");
  double err = (T.transpose() * pi - pi).lpNorm<Eigen::Infinity>();
  if (err > tol)
    throw StationarityError("pi is not stationary for T (residual " +
                            std::to_string(err) + ")");
  Eigen::MatrixXd R(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      R(x, y) = (pi(x) * T(x, y) + pi(y) * T(y, x)) / (2.0 * pi(x));
  return R;
}

}  // namespace filab
