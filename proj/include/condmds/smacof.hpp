#pragma once

#include <cstdint>
#include <vector>

#include "condmds/stress.hpp"

namespace condmds {

struct FitConfig {
  int p = 2;
  double gamma = 1e-6;   // stop once an iteration improves stress by no more than this
  int l_max = 1000;
  std::uint64_t seed = 42;
  bool diag_b = false;
  bool uniform_fast_path = true;  // used only when all weights are exactly 1
  int restarts = 1;               // seeds seed, seed + 1, ...

  /// Throws InputError on p < 1, gamma < 0 (or NaN), l_max < 1 or restarts < 1.
  void validate() const;
};

enum class Termination { converged, max_iterations };

const char* to_string(Termination t) noexcept;

struct RestartSummary {
  std::uint64_t seed = 0;
  double final_stress = 0.0;
  int iterations = 0;
};

struct FitReport {
  std::vector<double> stress_trace;  // sigma[0], ..., sigma[iterations]
  int iterations = 0;
  Termination termination = Termination::max_iterations;
  Embedding final;
  std::uint64_t seed = 0;                // seed of the reported run
  std::vector<RestartSummary> restarts;  // one entry per restart, in seed order

  double final_stress() const { return stress_trace.back(); }
};

/// B = I_q, U uniform on [-1, 1] drawn from a generator seeded with cfg.seed.
Embedding initialize(Eigen::Index n, const FitConfig& cfg, Eigen::Index q);

/// Guttman-type update H+ C Z_u, or C Z_u / N on the uniform-weight path.
Matrix update_u(const Operators& ops, const Matrix& c, const Matrix& anchor_u, bool uniform);

/// B = G+ V' C V Z_b.
Matrix update_b_full(const Operators& ops, const Matrix& c, const AuxiliaryMatrix& v, const Matrix& anchor_b);

/// Diagonal B: b_i = (t_ii / g_ii) z_b,i with T = V' C V; b_i = 0 when g_ii = 0.
Matrix update_b_diag(const Operators& ops, const Matrix& c, const AuxiliaryMatrix& v, const Matrix& anchor_b);

/// Runs conditional SMACOF from a given starting point. The trace starts at
/// the stress of `start`.
FitReport fit_from(const DissimilarityMatrix& d, const AuxiliaryMatrix& v, const WeightMatrix& w,
                   const FitConfig& cfg, const Operators& ops, Embedding start);

/// Runs cfg.restarts random starts and returns the one with the lowest final
/// stress (ties go to the lowest seed).
FitReport fit(const DissimilarityMatrix& d, const AuxiliaryMatrix& v, const WeightMatrix& w,
              const FitConfig& cfg);

}  // namespace condmds
