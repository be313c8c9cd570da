#include "condmds/stress.hpp"

#include <cmath>
#include <string>

#include "condmds/errors.hpp"

namespace condmds {

namespace {

std::string cell(Eigen::Index i, Eigen::Index j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void require_square_symmetric(const Matrix& m, const char* what, double symmetry_tol) {
  if (m.rows() != m.cols()) throw InputError(std::string(what) + ": matrix must be square");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double x = m(i, j);
      if (!std::isfinite(x)) throw InputError(std::string(what) + ": non-finite entry at " + cell(i, j));
      if (x < 0.0) throw InputError(std::string(what) + ": negative entry at " + cell(i, j));
      if (i == j && x != 0.0) throw InputError(std::string(what) + ": nonzero diagonal entry at " + cell(i, j));
      if (j > i) {
        const double tol = symmetry_tol * std::max({1.0, std::abs(x), std::abs(m(j, i))});
        if (std::abs(x - m(j, i)) > tol) {
          throw InputError(std::string(what) + ": asymmetric entry at " + cell(i, j));
        }
      }
    }
  }
}

}  // namespace

DissimilarityMatrix::DissimilarityMatrix(Matrix delta, double symmetry_tol) : delta_(std::move(delta)) {
  if (delta_.rows() < 2) throw InputError("dissimilarity: N >= 2 required");
  require_square_symmetric(delta_, "dissimilarity", symmetry_tol);
  delta_ = 0.5 * (delta_ + delta_.transpose()).eval();
}

const char* to_string(WeightScheme scheme) noexcept {
  switch (scheme) {
    case WeightScheme::uniform: return "uniform";
    case WeightScheme::sammon: return "sammon";
    case WeightScheme::custom: return "custom";
  }
  return "custom";
}

WeightMatrix::WeightMatrix(Matrix w, WeightScheme scheme) : w_(std::move(w)), scheme_(scheme) {
  if (w_.rows() < 2) throw InputError("weights: N >= 2 required");
  require_square_symmetric(w_, "weights", 0.0);
  if (!(w_.maxCoeff() > 0.0)) throw InputError("weights: at least one weight must be positive");
}

bool WeightMatrix::all_ones() const noexcept {
  for (Eigen::Index i = 0; i < w_.rows(); ++i)
    for (Eigen::Index j = 0; j < w_.cols(); ++j)
      if (i != j && w_(i, j) != 1.0) return false;
  return true;
}

AuxiliaryMatrix::AuxiliaryMatrix(Matrix v, std::vector<std::string> names)
    : v_(std::move(v)), names_(std::move(names)) {
  require_finite(v_, "auxiliary");
  if (!names_.empty() && static_cast<Eigen::Index>(names_.size()) != v_.cols()) {
    throw InputError("auxiliary: number of column names does not match q");
  }
}

AuxiliaryMatrix AuxiliaryMatrix::standardized() const {
  Matrix out = v_;
  const double n = static_cast<double>(v_.rows());
  for (Eigen::Index c = 0; c < out.cols(); ++c) {
    const double mean = out.col(c).mean();
    const double sd = std::sqrt((out.col(c).array() - mean).square().sum() / n);
    if (sd > 0.0) out.col(c) /= sd;
  }
  return AuxiliaryMatrix(std::move(out), names_);
}

Embedding::Embedding(Matrix u_, Matrix b_, bool diag) : u(std::move(u_)), b(std::move(b_)), diag_b(diag) {
  require_finite(u, "embedding U");
  require_finite(b, "embedding B");
  if (b.rows() != b.cols()) throw InputError("embedding: B must be square");
  if (diag_b) {
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (i != j && b(i, j) != 0.0) throw InputError("embedding: diagonal B has an off-diagonal entry");
  }
}

Operators Operators::build(const WeightMatrix& w, const AuxiliaryMatrix& v, double pinv_tol) {
  if (w.n() != v.n()) throw InputError("operators: weight and auxiliary row counts differ");
  Operators ops;
  ops.h = build_h(w);
  ops.uniform = w.all_ones();
  const Eigen::Index n = w.n();
  if (ops.uniform) {
    // H = N (I - 1/N), whose pseudoinverse is N^-1 (I - 1/N).
    const double nd = static_cast<double>(n);
    ops.h_plus = (Matrix::Identity(n, n) - Matrix::Constant(n, n, 1.0 / nd)) / nd;
  } else {
    ops.h_plus = pseudo_inverse(ops.h, pinv_tol);
  }
  ops.g = build_g(v, ops.h);
  ops.g_plus_vt = pseudo_inverse(ops.g, pinv_tol) * v.matrix().transpose();
  return ops;
}

Matrix build_h(const WeightMatrix& w) {
  Matrix h = -w.matrix();
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < h.cols(); ++j)
      if (j != i) sum += w(i, j);
    h(i, i) = sum;
  }
  return h;
}

Matrix build_g(const AuxiliaryMatrix& v, const Matrix& h) {
  if (h.rows() != v.n() || h.cols() != v.n()) throw InputError("build_g: H and V shapes do not conform");
  Matrix g = v.matrix().transpose() * h * v.matrix();
  return 0.5 * (g + g.transpose());
}

double conditional_distance(const Embedding& e, const AuxiliaryMatrix& v, Eigen::Index i, Eigen::Index j) {
  if (i == j) return 0.0;
  const double du = (e.u.row(i) - e.u.row(j)).squaredNorm();
  const Vector diff = (v.matrix().row(i) - v.matrix().row(j)).transpose();
  const double dv = (e.b.transpose() * diff).squaredNorm();
  return std::sqrt(du + dv);
}

Matrix conditional_distances(const Embedding& e, const AuxiliaryMatrix& v) {
  const Eigen::Index n = e.n();
  Matrix x(n, e.p() + e.q());
  x << e.u, v.matrix() * e.b;
  Matrix dist = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = (x.row(i) - x.row(j)).norm();
      dist(i, j) = d;
      dist(j, i) = d;
    }
  }
  return dist;
}

void check_problem(const DissimilarityMatrix& d, const WeightMatrix& w, const AuxiliaryMatrix& v) {
  if (w.n() != d.n()) {
    throw InputError("dimension mismatch: weights are " + std::to_string(w.n()) + "x" + std::to_string(w.n()) +
                     " but dissimilarities are " + std::to_string(d.n()) + "x" + std::to_string(d.n()));
  }
  if (v.n() != d.n()) {
    throw InputError("dimension mismatch: auxiliary matrix has " + std::to_string(v.n()) + " rows but N = " +
                     std::to_string(d.n()));
  }
}

void check_embedding(const Embedding& e, const AuxiliaryMatrix& v) {
  if (e.n() != v.n()) throw InputError("dimension mismatch: U rows differ from N");
  if (e.q() != v.q()) throw InputError("dimension mismatch: B is not q x q");
}

double stress_from_distances(const DissimilarityMatrix& d, const WeightMatrix& w, const Matrix& dist) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < d.n(); ++i) {
    for (Eigen::Index j = i + 1; j < d.n(); ++j) {
      const double r = d(i, j) - dist(i, j);
      sum += w(i, j) * r * r;
    }
  }
  return sum;
}

double conditional_stress(const DissimilarityMatrix& d, const WeightMatrix& w, const Embedding& e,
                          const AuxiliaryMatrix& v) {
  check_problem(d, w, v);
  check_embedding(e, v);
  return stress_from_distances(d, w, conditional_distances(e, v));
}

StressReport stress_terms(const DissimilarityMatrix& d, const WeightMatrix& w, const Embedding& e,
                          const AuxiliaryMatrix& v) {
  check_problem(d, w, v);
  check_embedding(e, v);
  const Matrix dist = conditional_distances(e, v);
  StressReport r;
  for (Eigen::Index i = 0; i < d.n(); ++i) {
    for (Eigen::Index j = i + 1; j < d.n(); ++j) {
      r.eta_delta_sq += w(i, j) * d(i, j) * d(i, j);
      r.eta_sq += w(i, j) * dist(i, j) * dist(i, j);
      r.rho += w(i, j) * d(i, j) * dist(i, j);
    }
  }
  r.stress = stress_from_distances(d, w, dist);
  return r;
}

Matrix c_from_distances(const DissimilarityMatrix& d, const WeightMatrix& w, const Matrix& dist) {
  const Eigen::Index n = d.n();
  Matrix c = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (dist(i, j) > 0.0) {
        const double cij = -w(i, j) * d(i, j) / dist(i, j);
        c(i, j) = cij;
        c(j, i) = cij;
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) sum += c(i, j);
    c(i, i) = -sum;
  }
  return c;
}

Matrix build_c(const DissimilarityMatrix& d, const WeightMatrix& w, const Embedding& e,
               const AuxiliaryMatrix& v) {
  check_problem(d, w, v);
  check_embedding(e, v);
  return c_from_distances(d, w, conditional_distances(e, v));
}

double majorizer_tau(const DissimilarityMatrix& d, const WeightMatrix& w, const Embedding& e,
                     const Embedding& anchor, const AuxiliaryMatrix& v, const Operators& ops) {
  check_problem(d, w, v);
  check_embedding(e, v);
  check_embedding(anchor, v);
  if (e.p() != anchor.p()) throw InputError("majorizer_tau: embedding and anchor differ in p");

  double eta_delta_sq = 0.0;
  for (Eigen::Index i = 0; i < d.n(); ++i)
    for (Eigen::Index j = i + 1; j < d.n(); ++j) eta_delta_sq += w(i, j) * d(i, j) * d(i, j);

  const Matrix c = build_c(d, w, anchor, v);
  const Matrix& vm = v.matrix();
  return eta_delta_sq + (e.u.transpose() * ops.h * e.u).trace() + (e.b.transpose() * ops.g * e.b).trace() -
         2.0 * (e.u.transpose() * c * anchor.u).trace() -
         2.0 * (e.b.transpose() * vm.transpose() * c * vm * anchor.b).trace();
}

}  // namespace condmds
