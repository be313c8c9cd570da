#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "condmds/stress.hpp"

namespace condmds {

struct LabeledDissimilarity {
  DissimilarityMatrix delta;
  std::vector<std::string> labels;
};

/// Header `,<l1>,...,<lN>`, then one row `<label>,<v1>,...,<vN>` per label in
/// the same order. Errors name the offending cell.
LabeledDissimilarity parse_dissimilarity_csv(std::string_view text);

/// Header `label,<var1>,...,<varq>`, one row per label in any order. Rows are
/// reordered to follow `labels`; column names are kept on the result.
AuxiliaryMatrix parse_auxiliary_csv(std::string_view text, const std::vector<std::string>& labels);

/// Keeps the named columns, in the order given.
AuxiliaryMatrix select_columns(const AuxiliaryMatrix& v, const std::vector<std::string>& names);

/// Shortest round-trip decimal representation.
std::string format_number(double x);

std::string write_dissimilarity_csv(const DissimilarityMatrix& d, const std::vector<std::string>& labels);
std::string write_auxiliary_csv(const AuxiliaryMatrix& v, const std::vector<std::string>& labels);

/// Reads a whole file; throws InputError naming the path if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace condmds
