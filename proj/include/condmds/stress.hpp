#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "condmds/numeric.hpp"

namespace condmds {

/// Symmetric, nonnegative N x N dissimilarities with a zero diagonal.
class DissimilarityMatrix {
public:
  /// Validates the invariants. Entries may differ from their transpose by at
  /// most `symmetry_tol` (relative to max(1, |delta|)); the stored matrix is
  /// the exact symmetric average.
  explicit DissimilarityMatrix(Matrix delta, double symmetry_tol = 1e-9);

  Eigen::Index n() const noexcept { return delta_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return delta_(i, j); }
  const Matrix& matrix() const noexcept { return delta_; }

private:
  Matrix delta_;
};

enum class WeightScheme { uniform, sammon, custom };

const char* to_string(WeightScheme scheme) noexcept;

/// Symmetric nonnegative pair weights with a zero diagonal and at least one
/// positive entry.
class WeightMatrix {
public:
  explicit WeightMatrix(Matrix w, WeightScheme scheme = WeightScheme::custom);

  Eigen::Index n() const noexcept { return w_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return w_(i, j); }
  const Matrix& matrix() const noexcept { return w_; }
  WeightScheme scheme() const noexcept { return scheme_; }

  /// True when every off-diagonal weight is exactly 1.
  bool all_ones() const noexcept;

private:
  Matrix w_;
  WeightScheme scheme_;
};

/// N x q known manifold coordinates. Column names are optional metadata.
class AuxiliaryMatrix {
public:
  explicit AuxiliaryMatrix(Matrix v, std::vector<std::string> names = {});

  Eigen::Index n() const noexcept { return v_.rows(); }
  Eigen::Index q() const noexcept { return v_.cols(); }
  const Matrix& matrix() const noexcept { return v_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Columns rescaled to unit standard deviation (constant columns are left
  /// as is). Only useful for conditioning; B absorbs the scale either way.
  AuxiliaryMatrix standardized() const;

private:
  Matrix v_;
  std::vector<std::string> names_;
};

/// The iterate (U, B). When `diag_b` is set, B must be diagonal.
struct Embedding {
  Matrix u;
  Matrix b;
  bool diag_b = false;

  Embedding() = default;
  Embedding(Matrix u_, Matrix b_, bool diag = false);

  Eigen::Index n() const noexcept { return u.rows(); }
  Eigen::Index p() const noexcept { return u.cols(); }
  Eigen::Index q() const noexcept { return b.rows(); }
};

/// Only the identity transform of the dissimilarities is supported.
enum class DissimilarityTransform { identity };

/// Fixed quantities of one problem: H, H+, G = V'HV and G+V'.
struct Operators {
  Matrix h;
  Matrix h_plus;
  Matrix g;
  Matrix g_plus_vt;
  bool uniform = false;  // all weights are 1, so H+ C Z == C Z / N

  static Operators build(const WeightMatrix& w, const AuxiliaryMatrix& v,
                         double pinv_tol = kDefaultPinvTolerance);
};

/// The three terms of the stress expansion and their combination.
struct StressReport {
  double eta_delta_sq = 0.0;  // sum w delta^2
  double eta_sq = 0.0;        // sum w d^2
  double rho = 0.0;           // sum w delta d
  double stress = 0.0;        // direct sum w (delta - d)^2
};

Matrix build_h(const WeightMatrix& w);
Matrix build_g(const AuxiliaryMatrix& v, const Matrix& h);

/// sqrt(|u_i - u_j|^2 + |B'(v_i - v_j)|^2)
double conditional_distance(const Embedding& e, const AuxiliaryMatrix& v, Eigen::Index i,
                            Eigen::Index j);

/// All pairwise conditional distances as a symmetric N x N matrix.
Matrix conditional_distances(const Embedding& e, const AuxiliaryMatrix& v);

/// Throws InputError if the shapes of the problem do not conform.
void check_problem(const DissimilarityMatrix& d, const WeightMatrix& w, const AuxiliaryMatrix& v);
void check_embedding(const Embedding& e, const AuxiliaryMatrix& v);

double conditional_stress(const DissimilarityMatrix& d, const WeightMatrix& w, const Embedding& e,
                          const AuxiliaryMatrix& v);

/// Stress from a precomputed distance matrix; pairs summed row-major over i < j.
double stress_from_distances(const DissimilarityMatrix& d, const WeightMatrix& w,
                             const Matrix& dist);

StressReport stress_terms(const DissimilarityMatrix& d, const WeightMatrix& w, const Embedding& e,
                          const AuxiliaryMatrix& v);

/// Majorizer matrix C evaluated at `e`. Off-diagonal c_ij = -w_ij delta_ij / d_ij
/// (0 where d_ij = 0); the diagonal makes every row sum to zero.
Matrix build_c(const DissimilarityMatrix& d, const WeightMatrix& w, const Embedding& e,
               const AuxiliaryMatrix& v);
Matrix c_from_distances(const DissimilarityMatrix& d, const WeightMatrix& w, const Matrix& dist);

/// Value of the quadratic majorizer at `e` with C and (Z_u, Z_b) taken from `anchor`.
double majorizer_tau(const DissimilarityMatrix& d, const WeightMatrix& w, const Embedding& e,
                     const Embedding& anchor, const AuxiliaryMatrix& v, const Operators& ops);

}  // namespace condmds
