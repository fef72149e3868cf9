#pragma once

#include <cstdint>

#include "linkpred/graph.hpp"
#include "linkpred/score_matrix.hpp"

namespace linkpred {

// Dense square matrix, row-major. Small helper type so the public surface
// does not depend on the linear-algebra backend.
struct DenseMatrix {
  NodeId n = 0;
  std::vector<double> data;  // n*n, row-major

  explicit DenseMatrix(NodeId size = 0)
      : n(size), data(static_cast<std::size_t>(size) * size, 0.0) {}
  double at(NodeId i, NodeId j) const {
    return data[static_cast<std::size_t>(i) * n + j];
  }
  double& at(NodeId i, NodeId j) {
    return data[static_cast<std::size_t>(i) * n + j];
  }
};

// All three baselines run dense O(N^3) kernels; graphs above `dense_cap`
// nodes are refused with a ResourceError to keep memory desk-scale.
inline constexpr NodeId kDefaultDenseCap = 10000;

// Largest adjacency eigenvalue, estimated by shifted power iteration on the
// sparse graph (deterministic start vector). Exact enough for parameter
// validation; the dense solvers are the backstop.
double spectral_radius(const Graph& g);

// Katz beta default: min(0.01, 0.5 / lambda_max).
double default_katz_beta(double lambda_max);

// Katz index: S = (I - beta*A)^{-1} - I, via Cholesky solve. Requires
// beta > 0 and beta * lambda_max < 1; a divergent beta raises ParameterError
// naming the 1/lambda_max bound.
ScoreMatrix katz_scores(const Graph& g, double beta,
                        NodeId dense_cap = kDefaultDenseCap);

// Linear-optimization similarity: S = alpha*A*(alpha*A^2 + I)^{-1}*A^2,
// symmetrized as (S + S^T)/2 to absorb solver round-off. alpha > 0.
ScoreMatrix lo_scores(const Graph& g, double alpha,
                      NodeId dense_cap = kDefaultDenseCap);

// One structural-perturbation pass: remove `delta_edges` from g, take the
// full eigendecomposition of the remainder, shift each eigenvalue by the
// first-order correction x^T dA x, and reassemble. Exposed separately so the
// zero-perturbation reconstruction can be verified directly. If
// `degenerate_gaps` is given, it receives the number of eigenvalue gaps
// below 1e-8 (first-order theory is unreliable there).
DenseMatrix spm_single_selection(const Graph& g, const EdgeList& delta_edges,
                                 int* degenerate_gaps = nullptr);

// Structural perturbation method: average spm_single_selection over
// `selections` random draws of round(perturb_fraction * M) edges, sampled
// from g's own edges (g is the training graph; the probe never enters).
// Selection s uses the deterministic sub-seed derive_seed(seed, s).
ScoreMatrix spm_scores(const Graph& g, double perturb_fraction, int selections,
                       std::uint64_t seed, NodeId dense_cap = kDefaultDenseCap);

}  // namespace linkpred
