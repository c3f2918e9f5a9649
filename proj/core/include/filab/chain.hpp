#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "filab/errors.hpp"

namespace filab {

/// A validated finite reversible Markov chain. Immutable after construction;
/// safe to share across threads.
struct ChainSpec {
  int n = 0;
  std::vector<std::string> labels;
  Eigen::MatrixXd T;     // row-stochastic transition matrix
  Eigen::VectorXd pi;    // stationary measure, fully supported
  double pi_star = 0.0;  // min_x pi(x)
  double d = 0.0;        // max 1/T(x,y) over positive entries
  Eigen::MatrixXi dist;  // hop-count graph distance
  int diam = 0;
};

/// Real-valued function on the state space of a chain.
struct Observable {
  Eigen::VectorXd values;
  bool positive = false;  // strict entrywise positivity

  static Observable of(Eigen::VectorXd v) {
    Observable o;
    o.positive = v.size() > 0 && (v.array() > 0.0).all();
    o.values = std::move(v);
    return o;
  }
};

struct ValidateOptions {
  double tol_row = 1e-12;  // absolute, per row sum
  double tol_rev = 1e-10;  // relative to max flux entry
  bool d_includes_diagonal = true;
};

/// Validate a transition matrix and assemble the full ChainSpec. When pi is
/// null the stationary vector is obtained by a direct linear solve.
/// Throws NegativeEntry, RowSumError, NotIrreducible, NotReversible.
ChainSpec validate_chain(const Eigen::MatrixXd& T,
                         const Eigen::VectorXd* pi = nullptr,
                         const ValidateOptions& opts = {});
ChainSpec validate_chain(const Eigen::MatrixXd& T,
                         std::vector<std::string> labels,
                         const Eigen::VectorXd* pi = nullptr,
                         const ValidateOptions& opts = {});

/// Hop-count distances of the positive-entry graph, by BFS from every state.
/// Unreachable pairs throw NotIrreducible.
Eigen::MatrixXi graph_distance(const Eigen::MatrixXd& T);

/// Sparsity parameter: max{1/T(x,y) : T(x,y) > 0}.
double sparsity_d(const Eigen::MatrixXd& T, bool include_diagonal = true);

/// Unique stationary probability vector of an irreducible chain.
Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& T);

/// Additive reversibilization w.r.t. pi. Throws StationarityError when pi is
/// not stationary for T.
Eigen::MatrixXd reversibilize(const Eigen::MatrixXd& T,
                              const Eigen::VectorXd& pi, double tol = 1e-10);

inline void require_length(const Eigen::VectorXd& f, const ChainSpec& chain,
                           const char* what) {
  if (f.size() != chain.n)
    throw DimensionMismatch(std::string(what) + ": observable has length " +
                            std::to_string(f.size()) + ", chain has " +
                            std::to_string(chain.n) + " states");
}

}  // namespace filab
