#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "condmds/geodesic.hpp"
#include "condmds/smacof.hpp"
#include "condmds/weights.hpp"

namespace condmds::cli {

enum class Command { condmds, condisomap, kinship_demo };

const char* to_string(Command c) noexcept;

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidInput = 2, kDisconnected = 3 };

struct RunSpec {
  Command command = Command::condmds;
  std::string dissimilarity_path;
  std::string auxiliary_path;
  bool use_kinship = false;  // implied by kinship-demo
  std::vector<std::string> cond;
  WeightSpec weights;
  std::optional<NeighborhoodSpec> neighborhood;
  bool largest_component = false;
  FitConfig cfg;
  std::string out_dir = "condmds_out";
  bool plot = false;

  /// condisomap needs a neighborhood, file input needs both paths.
  void validate() const;
};

/// Executes a validated spec, writing embedding.csv, b_matrix.csv,
/// report.json and (with plot) embedding.svg under spec.out_dir.
/// Messages go to `log`, errors to `err`; returns an ExitCode.
int run(const RunSpec& spec, std::ostream& log, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int main_entry(const std::vector<std::string>& args, std::ostream& log, std::ostream& err);

}  // namespace condmds::cli
