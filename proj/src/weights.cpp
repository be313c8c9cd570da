#include "condmds/weights.hpp"

#include <string>

#include "condmds/errors.hpp"

namespace condmds {

WeightMatrix weights_uniform(Eigen::Index n) {
  if (n < 2) throw InputError("weights_uniform: n >= 2 required");
  Matrix w = Matrix::Ones(n, n);
  w.diagonal().setZero();
  return WeightMatrix(std::move(w), WeightScheme::uniform);
}

WeightMatrix weights_sammon(const DissimilarityMatrix& d, bool allow_zero) {
  const Eigen::Index n = d.n();
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (d(i, j) == 0.0 && !allow_zero) {
        throw InputError("weights_sammon: zero dissimilarity at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + "); Sammon weight is undefined");
      }
      total += d(i, j);
    }
  }
  if (!(total > 0.0)) throw InputError("weights_sammon: all dissimilarities are zero");

  Matrix w = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (d(i, j) > 0.0) {
        const double wij = 1.0 / (d(i, j) * total);
        w(i, j) = wij;
        w(j, i) = wij;
      }
    }
  }
  return WeightMatrix(std::move(w), WeightScheme::sammon);
}

WeightMatrix make_weights(const WeightSpec& spec, const DissimilarityMatrix& d) {
  switch (spec.scheme) {
    case WeightScheme::uniform: return weights_uniform(d.n());
    case WeightScheme::sammon: return weights_sammon(d, spec.allow_zero);
    case WeightScheme::custom: break;
  }
  throw InputError("make_weights: custom weights must be supplied as a matrix");
}

}  // namespace condmds
