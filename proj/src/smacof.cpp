#include "condmds/smacof.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "condmds/errors.hpp"

namespace condmds {

void FitConfig::validate() const {
  if (p < 1) throw InputError("config: p must be >= 1 (got " + std::to_string(p) + ")");
  if (!(gamma >= 0.0)) throw InputError("config: gamma must be >= 0");
  if (l_max < 1) throw InputError("config: max iterations must be >= 1");
  if (restarts < 1) throw InputError("config: restarts must be >= 1");
}

const char* to_string(Termination t) noexcept {
  return t == Termination::converged ? "converged" : "max_iterations";
}

Embedding initialize(Eigen::Index n, const FitConfig& cfg, Eigen::Index q) {
  if (n < 2) throw InputError("initialize: n >= 2 required");
  if (q < 1) throw InputError("initialize: q >= 1 required");
  cfg.validate();
  // Fixed mapping from 53 random bits so the start is the same on every platform.
  std::mt19937_64 rng(cfg.seed);
  Matrix u(n, cfg.p);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < cfg.p; ++k) {
      const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      u(i, k) = 2.0 * unit - 1.0;
    }
  }
  return Embedding(std::move(u), Matrix::Identity(q, q), cfg.diag_b);
}

Matrix update_u(const Operators& ops, const Matrix& c, const Matrix& anchor_u, bool uniform) {
  if (uniform) return c * anchor_u / static_cast<double>(c.rows());
  return ops.h_plus * (c * anchor_u);
}

Matrix update_b_full(const Operators& ops, const Matrix& c, const AuxiliaryMatrix& v, const Matrix& anchor_b) {
  return ops.g_plus_vt * (c * (v.matrix() * anchor_b));
}

Matrix update_b_diag(const Operators& ops, const Matrix& c, const AuxiliaryMatrix& v, const Matrix& anchor_b) {
  const Matrix& vm = v.matrix();
  const Eigen::Index q = vm.cols();
  Matrix b = Matrix::Zero(q, q);
  for (Eigen::Index k = 0; k < q; ++k) {
    const double g = ops.g(k, k);
    if (g <= 0.0) continue;
    const double t = vm.col(k).dot(c * vm.col(k));
    b(k, k) = t / g * anchor_b(k, k);
  }
  return b;
}

FitReport fit_from(const DissimilarityMatrix& d, const AuxiliaryMatrix& v, const WeightMatrix& w,
                   const FitConfig& cfg, const Operators& ops, Embedding start) {
  cfg.validate();
  check_problem(d, w, v);
  check_embedding(start, v);
  if (start.p() != cfg.p) throw InputError("fit: starting U does not have p columns");

  const bool fast = cfg.uniform_fast_path && ops.uniform;
  FitReport report;
  report.seed = cfg.seed;
  report.final = std::move(start);

  Matrix dist = conditional_distances(report.final, v);
  double prev = stress_from_distances(d, w, dist);
  report.stress_trace.push_back(prev);

  while (report.iterations < cfg.l_max) {
    const Matrix c = c_from_distances(d, w, dist);
    Matrix u = update_u(ops, c, report.final.u, fast);
    Matrix b = cfg.diag_b ? update_b_diag(ops, c, v, report.final.b) : update_b_full(ops, c, v, report.final.b);
    if (!u.allFinite() || !b.allFinite()) {
      throw NumericError("fit: iterate became non-finite at iteration " + std::to_string(report.iterations + 1));
    }
    report.final.u = std::move(u);
    report.final.b = std::move(b);
    ++report.iterations;

    dist = conditional_distances(report.final, v);
    const double cur = stress_from_distances(d, w, dist);
    report.stress_trace.push_back(cur);
    if (prev - cur <= cfg.gamma) {
      report.termination = Termination::converged;
      return report;
    }
    prev = cur;
  }
  report.termination = Termination::max_iterations;
  return report;
}

FitReport fit(const DissimilarityMatrix& d, const AuxiliaryMatrix& v, const WeightMatrix& w,
              const FitConfig& cfg) {
  cfg.validate();
  check_problem(d, w, v);
  const Operators ops = Operators::build(w, v);

  FitReport best;
  std::vector<RestartSummary> summaries;
  for (int r = 0; r < cfg.restarts; ++r) {
    FitConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
    FitReport rep = fit_from(d, v, w, run_cfg, ops, initialize(d.n(), run_cfg, v.q()));
    summaries.push_back({run_cfg.seed, rep.final_stress(), rep.iterations});
    // Strict comparison keeps the lowest seed on ties.
    if (r == 0 || rep.final_stress() < best.final_stress()) best = std::move(rep);
  }
  best.restarts = std::move(summaries);
  return best;
}

}  // namespace condmds
