#pragma once

// Seeded generators and independent reference computations shared by the
// test binaries. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "condmds/stress.hpp"

namespace condmds::testing {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

  Matrix matrix(Eigen::Index r, Eigen::Index c, double lo = -1.0, double hi = 1.0) {
    Matrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  /// Symmetric weights in [0.1, 2] with zero diagonal; some pairs zeroed when `sparse`.
  Matrix weights(Eigen::Index n, bool sparse = false) {
    Matrix w = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double x = (sparse && coin(0.2)) ? 0.0 : uniform(0.1, 2.0);
        w(i, j) = w(j, i) = x;
      }
    w(0, 1) = w(1, 0) = 1.0;
    return w;
  }

  /// Symmetric positive dissimilarities (not necessarily metric).
  Matrix dissimilarities(Eigen::Index n, double lo = 0.5, double hi = 5.0) {
    Matrix d = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) d(i, j) = d(j, i) = uniform(lo, hi);
    return d;
  }

  std::mt19937_64& engine() { return gen_; }

private:
  std::mt19937_64 gen_;
};

/// Euclidean distances between rows.
inline Matrix row_distances(const Matrix& x) {
  Matrix d = Matrix::Zero(x.rows(), x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.rows(); ++j) {
      double s = 0.0;
      for (Eigen::Index k = 0; k < x.cols(); ++k) s += (x(i, k) - x(j, k)) * (x(i, k) - x(j, k));
      d(i, j) = std::sqrt(s);
    }
  return d;
}

/// Pairwise distance of the concatenated coordinates [U, V B], summed term by term.
inline double pair_distance(const Matrix& u, const Matrix& b, const Matrix& v, Eigen::Index i, Eigen::Index j) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < u.cols(); ++k) s += (u(i, k) - u(j, k)) * (u(i, k) - u(j, k));
  for (Eigen::Index c = 0; c < b.cols(); ++c) {
    double proj = 0.0;
    for (Eigen::Index r = 0; r < b.rows(); ++r) proj += b(r, c) * (v(i, r) - v(j, r));
    s += proj * proj;
  }
  return std::sqrt(s);
}

inline double oracle_stress(const Matrix& delta, const Matrix& w, const Matrix& u, const Matrix& b, const Matrix& v) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < delta.rows(); ++i)
    for (Eigen::Index j = i + 1; j < delta.rows(); ++j) {
      const double r = delta(i, j) - pair_distance(u, b, v, i, j);
      s += w(i, j) * r * r;
    }
  return s;
}

/// Majorizer in pairwise form: eta_delta^2 + sum w d^2(X) - 2 sum (w delta / d(Z)) <x_i - x_j, z_i - z_j>,
/// with X = [U, VB] and Z = [Z_u, V Z_b].
inline double oracle_tau(const Matrix& delta, const Matrix& w, const Matrix& u, const Matrix& b, const Matrix& zu,
                         const Matrix& zb, const Matrix& v) {
  Matrix x(u.rows(), u.cols() + b.cols()), z(u.rows(), u.cols() + b.cols());
  x << u, v * b;
  z << zu, v * zb;
  double tau = 0.0;
  for (Eigen::Index i = 0; i < delta.rows(); ++i)
    for (Eigen::Index j = i + 1; j < delta.rows(); ++j) {
      const double dx = (x.row(i) - x.row(j)).squaredNorm();
      const double dz = (z.row(i) - z.row(j)).norm();
      tau += w(i, j) * delta(i, j) * delta(i, j) + w(i, j) * dx;
      if (dz > 0.0) tau -= 2.0 * w(i, j) * delta(i, j) / dz * (x.row(i) - x.row(j)).dot(z.row(i) - z.row(j));
    }
  return tau;
}

/// Shortest path lengths by enumerating every simple path (small graphs only).
inline Matrix brute_force_paths(const Matrix& adjacency_weight, const std::vector<std::vector<bool>>& edge) {
  const std::size_t n = edge.size();
  Matrix best = Matrix::Constant(Eigen::Index(n), Eigen::Index(n), std::numeric_limits<double>::infinity());
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t src, std::size_t at, double len) {
    best(Eigen::Index(src), Eigen::Index(at)) = std::min(best(Eigen::Index(src), Eigen::Index(at)), len);
    on_path[at] = true;
    for (std::size_t nxt = 0; nxt < n; ++nxt)
      if (edge[at][nxt] && !on_path[nxt]) walk(src, nxt, len + adjacency_weight(Eigen::Index(at), Eigen::Index(nxt)));
    on_path[at] = false;
  };
  for (std::size_t s = 0; s < n; ++s) walk(s, s, 0.0);
  return best;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline double median(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  const std::size_t m = x.size() / 2;
  return x.size() % 2 ? x[m] : 0.5 * (x[m - 1] + x[m]);
}

}  // namespace condmds::testing
