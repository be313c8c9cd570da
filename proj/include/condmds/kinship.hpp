#pragma once

#include <array>
#include <string>
#include <vector>

#include "condmds/stress.hpp"

namespace condmds::kinship {

inline constexpr int kTerms = 14;

/// The 14 kinship terms (Cousin excluded), with the percentage of students
/// who did not group each pair together as dissimilarity, and the coded
/// auxiliary variables.
struct Fixture {
  std::array<std::string, kTerms> labels;
  Matrix delta;
  std::array<int, kTerms> gender;                 // 1 male, 2 female
  std::array<int, kTerms> kinship_degree;         // 1, 2 or 3
  std::array<int, kTerms> generation;             // -2 grandparent ... 2 grandchild
  std::array<int, kTerms> generation_difference;  // |generation|
};

const Fixture& fixture();

std::vector<std::string> labels();
DissimilarityMatrix dissimilarities();

/// Variable names accepted by `auxiliary`.
const std::vector<std::string>& variable_names();

/// Columns chosen from gender, kinship_degree, generation_difference, generation.
AuxiliaryMatrix auxiliary(const std::vector<std::string>& variables);

/// Pairs of terms that differ only in gender, as label indices.
std::vector<std::pair<int, int>> gender_pairs();

}  // namespace condmds::kinship
