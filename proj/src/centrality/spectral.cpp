// Matrix-based measures: Katz, eigenvector, information and subgraph centrality.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "centralitylab/centrality.hpp"
#include "common.hpp"

namespace centralitylab {

namespace {

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) a(u, v) = 1.0;
  }
  return a;
}

std::vector<double> to_vector(const Eigen::VectorXd& x) {
  return {x.data(), x.data() + x.size()};
}

}  // namespace

double spectral_radius(const Graph& g) {
  if (g.node_count() == 0) throw InvalidArgument("spectral_radius: empty graph");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed");
  return solver.eigenvalues().maxCoeff();
}

ScoreVector katz(const Graph& g, std::optional<double> alpha, std::size_t ceiling) {
  detail::require_nodes(g);
  detail::require_dense_ok(g, ceiling, "Katz");
  const double lambda1 = spectral_radius(g);
  const double a = alpha.value_or(0.85 / lambda1);
  if (!(a > 0.0 && a < 1.0)) throw InvalidArgument("Katz alpha must lie in (0, 1)");
  if (a * lambda1 >= 1.0) {
    throw NumericalError("Katz series diverges: alpha >= 1/lambda_1 (lambda_1 = " +
                         std::to_string(lambda1) + ")");
  }
  const Eigen::MatrixXd adj = adjacency_matrix(g);
  const auto n = adj.rows();
  // I - alpha A is positive definite once alpha < 1 / lambda_1.
  const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - a * adj;
  const Eigen::VectorXd rhs = a * (adj * Eigen::VectorXd::Ones(n));
  Eigen::LLT<Eigen::MatrixXd> llt(system);
  if (llt.info() != Eigen::Success) throw NumericalError("Katz system is not positive definite");
  return make_score_vector(Measure::Katz, to_vector(llt.solve(rhs)));
}

ScoreVector eigenvector_centrality(const Graph& g, double tolerance, int max_iterations) {
  detail::require_nodes(g);
  if (!(tolerance > 0.0) || max_iterations < 1) {
    throw InvalidArgument("eigenvector centrality: bad tolerance or iteration cap");
  }
  const std::size_t n = g.node_count();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double residual = 0.0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    double norm = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      double acc = x[u];
      for (NodeId v : g.neighbors(u)) acc += x[v];
      y[u] = acc;
      norm += acc * acc;
    }
    norm = std::sqrt(norm);
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] /= norm;
      residual = std::max(residual, std::abs(y[i] - x[i]));
    }
    x.swap(y);
    if (residual < tolerance) return make_score_vector(Measure::EC, std::move(x));
  }
  throw NumericalError("eigenvector centrality did not converge in " +
                       std::to_string(max_iterations) +
                       " iterations (last residual " + std::to_string(residual) + ")");
}

ScoreVector information_centrality(const Graph& g, std::size_t ceiling) {
  detail::require_connected(g);
  detail::require_dense_ok(g, ceiling, "information centrality");
  const auto n = static_cast<Eigen::Index>(g.node_count());
  // D - A + U, U all ones.
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(n, n) - adjacency_matrix(g);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) += static_cast<double>(g.degree(static_cast<NodeId>(i)));
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) throw NumericalError("information centrality: singular matrix");
  const Eigen::MatrixXd b = llt.solve(Eigen::MatrixXd::Identity(n, n));
  const double trace = b.trace();
  const double nd = static_cast<double>(n);
  std::vector<double> scores(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double row = b.row(i).sum();
    scores[static_cast<std::size_t>(i)] = 1.0 / (b(i, i) + (trace - 2.0 * row) / nd);
  }
  return make_score_vector(Measure::IC, std::move(scores));
}

ScoreVector subgraph_centrality(const Graph& g, bool shift, std::size_t ceiling) {
  detail::require_nodes(g);
  detail::require_dense_ok(g, ceiling, "subgraph centrality");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g));
  if (solver.info() != Eigen::Success) throw NumericalError("subgraph centrality: eigensolver failed");
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const Eigen::MatrixXd& v = solver.eigenvectors();
  const double offset = shift ? lambda.maxCoeff() : 0.0;
  const Eigen::VectorXd weights = (lambda.array() - offset).exp().matrix();
  const Eigen::VectorXd sc = v.array().square().matrix() * weights;
  return make_score_vector(Measure::SC, to_vector(sc));
}

}  // namespace centralitylab
