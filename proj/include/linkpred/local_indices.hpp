#pragma once

#include "linkpred/graph.hpp"
#include "linkpred/score_matrix.hpp"

namespace linkpred {

// Local similarity indices over the training graph. All three materialize
// scores exactly on the pairs at distance 2 (the natural support of the
// indices); every other off-diagonal pair scores 0 implicitly. Observed
// pairs are scored as well: the enhancement transforms consume them.
//
// Complexity is O(sum_z k_z^2) for CN/RA and one factor of <k> more for CRA;
// no all-pairs loop is ever taken.

// Number of common neighbors per pair.
ScoreMatrix score_cn(const Graph& g);

// Sum of 1/k_z over common neighbors z.
ScoreMatrix score_ra(const Graph& g);

// Sum of |gamma_z|/k_z over common neighbors z, where gamma_z is the part of
// z's neighborhood lying inside the common-neighbor set of the pair. Pairs
// whose common neighbors induce no internal links score 0 and are dropped.
ScoreMatrix score_cra(const Graph& g);

}  // namespace linkpred
