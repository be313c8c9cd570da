#pragma once

#include <Eigen/Dense>

namespace condmds {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kDefaultPinvTolerance = 1e-12;

/// Throws InputError unless m is non-empty and every entry is finite.
void require_finite(const Matrix& m, const char* what);

/// Moore-Penrose pseudoinverse by SVD. Singular values at or below
/// `tol * sigma_max` are treated as zero.
Matrix pseudo_inverse(const Matrix& m, double tol = kDefaultPinvTolerance);

/// Pseudoinverse of a weighted graph Laplacian via (H + 1)^-1 - N^-2 1.
/// Requires the weight graph to be connected; otherwise H + 1 is singular
/// and a NumericError is thrown.
Matrix h_plus_closed_form(const Matrix& h);

}  // namespace condmds
