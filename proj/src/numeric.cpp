#include "condmds/numeric.hpp"

#include <cmath>
#include <string>

#include "condmds/errors.hpp"

namespace condmds {

void require_finite(const Matrix& m, const char* what) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw InputError(std::string(what) + ": matrix must have at least one row and one column");
  }
  if (!m.allFinite()) {
    throw InputError(std::string(what) + ": matrix contains non-finite entries");
  }
}

Matrix pseudo_inverse(const Matrix& m, double tol) {
  if (!(tol >= 0.0)) throw InputError("pseudo_inverse: tolerance must be nonnegative");
  if (!m.allFinite()) throw NumericError("pseudo_inverse: non-finite input");
  if (m.size() == 0) return Matrix(m.cols(), m.rows());

  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  const double cutoff = tol * (s.size() > 0 ? s(0) : 0.0);

  Vector s_inv = Vector::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff && s(i) > 0.0) s_inv(i) = 1.0 / s(i);
  }
  Matrix out = svd.matrixV() * s_inv.asDiagonal() * svd.matrixU().transpose();
  if (!out.allFinite()) throw NumericError("pseudo_inverse: decomposition produced non-finite values");
  return out;
}

namespace {

void require_laplacian(const Matrix& h) {
  const Eigen::Index n = h.rows();
  if (n < 1 || h.cols() != n) throw InputError("h_plus_closed_form: H must be square");
  if (!h.allFinite()) throw NumericError("h_plus_closed_form: non-finite input");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  const double eps = 1e-10 * scale;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(h.row(i).sum()) > eps) {
      throw InputError("h_plus_closed_form: row " + std::to_string(i + 1) + " of H does not sum to zero");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (std::abs(h(i, j) - h(j, i)) > eps) throw InputError("h_plus_closed_form: H is not symmetric");
      if (h(i, j) > eps) throw InputError("h_plus_closed_form: H has a positive off-diagonal entry");
    }
  }
}

}  // namespace

Matrix h_plus_closed_form(const Matrix& h) {
  require_laplacian(h);
  const Eigen::Index n = h.rows();
  const Matrix ones = Matrix::Ones(n, n);
  Eigen::FullPivLU<Matrix> lu(h + ones);
  if (!lu.isInvertible()) {
    throw NumericError("h_plus_closed_form: H + 1 is singular (weight graph is disconnected)");
  }
  return lu.inverse() - ones / static_cast<double>(n * n);
}

}  // namespace condmds
