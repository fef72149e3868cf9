#pragma once

#include "linkpred/graph.hpp"
#include "linkpred/score_matrix.hpp"

namespace linkpred {

// Collaborative-filtering enhancement of an arbitrary similarity matrix:
//
//   cf_enhance:  S' = A S + (A S)^T
//   scf_enhance: S' = (A + I) S + [(A + I) S]^T   (self-included variant)
//
// restricted off-diagonal, with S treated as zero on the diagonal. Both cost
// O(nnz(S) * <k>) and add one adjacency hop to the support; pairs that sum to
// exactly zero are dropped. A must be the training graph's adjacency -- probe
// information never enters a score.
//
// Off-diagonal the two transforms obey scf = cf + 2*S; scf_enhance
// nevertheless evaluates the (A + I) product directly so the identity stays
// a meaningful cross-check rather than a definition.
//
// Throws ParameterError when s is not defined over g's node set.

ScoreMatrix cf_enhance(const Graph& g, const ScoreMatrix& s);
ScoreMatrix scf_enhance(const Graph& g, const ScoreMatrix& s);

}  // namespace linkpred
