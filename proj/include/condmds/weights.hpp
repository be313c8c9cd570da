#pragma once

#include "condmds/stress.hpp"

namespace condmds {

/// w_ij = 1 for all i != j.
WeightMatrix weights_uniform(Eigen::Index n);

/// Sammon weights w_ij = 1 / (delta_ij * S), S = sum_{i<j} delta_ij.
/// A zero off-diagonal dissimilarity is an error unless `allow_zero`, in
/// which case that pair gets weight 0.
WeightMatrix weights_sammon(const DissimilarityMatrix& d, bool allow_zero = false);

/// A named scheme to be evaluated against some dissimilarity matrix.
struct WeightSpec {
  WeightScheme scheme = WeightScheme::uniform;
  bool allow_zero = false;
};

/// Evaluates a uniform or Sammon spec; custom has no data-free construction.
WeightMatrix make_weights(const WeightSpec& spec, const DissimilarityMatrix& d);

}  // namespace condmds
