#pragma once

#include <Eigen/Dense>

#include "filab/chain.hpp"

namespace filab {

/// E[f] = sum_x pi(x) f(x).
double expectation(const Eigen::VectorXd& f, const ChainSpec& chain);

/// Ent(f) = E[f log f] - E[f] log E[f], convention 0 log 0 = 0.
/// Requires f >= 0 entrywise.
double entropy(const Eigen::VectorXd& f, const ChainSpec& chain);

/// Carre du champ: Gamma(f,g)(x) = (1/2) sum_y T(x,y)(f(y)-f(x))(g(y)-g(x)).
Eigen::VectorXd gamma(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                      const ChainSpec& chain);
inline Eigen::VectorXd gamma(const Eigen::VectorXd& f, const ChainSpec& chain) {
  return gamma(f, f, chain);
}

/// Iterated form: Gamma2(f) = (1/2) L Gamma(f,f) - Gamma(f, Lf), pointwise.
Eigen::VectorXd gamma2(const Eigen::VectorXd& f, const ChainSpec& chain);

/// Dirichlet form E(f,g) = E[Gamma(f,g)].
double dirichlet(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                 const ChainSpec& chain);
inline double dirichlet(const Eigen::VectorXd& f, const ChainSpec& chain) {
  return dirichlet(f, f, chain);
}

struct LipschitzResult {
  double value = 0.0;
  int x = -1;  // maximizing ordered pair, lexicographically smallest
  int y = -1;
};

/// Lip(f) = max{|f(x)-f(y)| : T(x,y) > 0} with a deterministic witness pair.
LipschitzResult lipschitz(const Eigen::VectorXd& f, const ChainSpec& chain);

/// Lip(log f) for strictly positive f; throws NonPositive otherwise.
LipschitzResult log_lipschitz(const Eigen::VectorXd& f, const ChainSpec& chain);

/// Cost function phi(r) = r (e^{r/2}+1)/(e^{r/2}-1), phi(0) = 4.
double phi_cost(double r);

}  // namespace filab
