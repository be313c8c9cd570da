#include "condmds/kinship.hpp"

#include <algorithm>
#include <cstdlib>

#include "condmds/errors.hpp"

namespace condmds::kinship {

namespace {

// Percentages of students who did not group the two terms together
// (Rosenberg & Kim, 1975), Cousin removed.
constexpr int kDelta[kTerms][kTerms] = {
    {0, 79, 59, 73, 57, 77, 55, 79, 51, 56, 32, 58, 80, 27},
    {79, 0, 62, 38, 75, 57, 80, 51, 63, 53, 76, 28, 38, 57},
    {59, 62, 0, 57, 46, 77, 54, 72, 31, 74, 52, 37, 29, 80},
    {73, 38, 57, 0, 79, 51, 70, 54, 29, 59, 81, 63, 32, 51},
    {57, 75, 46, 79, 0, 57, 32, 29, 56, 74, 51, 50, 72, 80},
    {77, 57, 77, 51, 57, 0, 29, 31, 75, 58, 79, 79, 55, 55},
    {55, 80, 54, 70, 32, 29, 0, 57, 50, 79, 58, 57, 78, 77},
    {79, 51, 72, 54, 29, 31, 57, 0, 79, 51, 74, 75, 47, 58},
    {51, 63, 31, 29, 56, 75, 50, 79, 0, 81, 60, 39, 57, 73},
    {56, 53, 74, 59, 74, 58, 79, 51, 81, 0, 27, 76, 52, 33},
    {32, 76, 52, 81, 51, 79, 58, 74, 60, 27, 0, 53, 74, 56},
    {58, 28, 37, 63, 50, 79, 57, 75, 39, 76, 53, 0, 62, 79},
    {80, 38, 29, 32, 72, 55, 78, 47, 57, 52, 74, 62, 0, 59},
    {27, 57, 80, 51, 80, 55, 77, 58, 73, 33, 56, 79, 59, 0},
};

Fixture make_fixture() {
  Fixture f{
      {"Aunt", "Brother", "Daughter", "Father", "Granddaughter", "Grandfather", "Grandmother", "Grandson", "Mother",
       "Nephew", "Niece", "Sister", "Son", "Uncle"},
      Matrix(kTerms, kTerms),
      {2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 1},
      {3, 2, 1, 1, 2, 2, 2, 2, 1, 3, 3, 2, 1, 3},
      // Aunt/Uncle and Father/Mother -1, siblings 0, Daughter/Son and Niece/Nephew 1,
      // grandparents -2, grandchildren 2.
      {-1, 0, 1, -1, 2, -2, -2, 2, -1, 1, 1, 0, 1, -1},
      {},
  };
  for (int i = 0; i < kTerms; ++i) {
    for (int j = 0; j < kTerms; ++j) f.delta(i, j) = kDelta[i][j];
    f.generation_difference[i] = std::abs(f.generation[i]);
  }
  return f;
}

}  // namespace

const Fixture& fixture() {
  static const Fixture f = make_fixture();
  return f;
}

std::vector<std::string> labels() { return {fixture().labels.begin(), fixture().labels.end()}; }

DissimilarityMatrix dissimilarities() { return DissimilarityMatrix(fixture().delta); }

const std::vector<std::string>& variable_names() {
  static const std::vector<std::string> names{"gender", "kinship_degree", "generation_difference", "generation"};
  return names;
}

AuxiliaryMatrix auxiliary(const std::vector<std::string>& variables) {
  if (variables.empty()) throw InputError("kinship: at least one conditioning variable is required");
  const Fixture& f = fixture();
  Matrix v(kTerms, Eigen::Index(variables.size()));
  for (std::size_t c = 0; c < variables.size(); ++c) {
    const std::array<int, kTerms>* col = nullptr;
    if (variables[c] == "gender") col = &f.gender;
    else if (variables[c] == "kinship_degree") col = &f.kinship_degree;
    else if (variables[c] == "generation_difference") col = &f.generation_difference;
    else if (variables[c] == "generation") col = &f.generation;
    else throw InputError("kinship: unknown conditioning variable '" + variables[c] + "'");
    for (int i = 0; i < kTerms; ++i) v(i, Eigen::Index(c)) = (*col)[std::size_t(i)];
  }
  return AuxiliaryMatrix(std::move(v), variables);
}

std::vector<std::pair<int, int>> gender_pairs() {
  static const std::pair<const char*, const char*> names[] = {
      {"Sister", "Brother"},           {"Mother", "Father"}, {"Daughter", "Son"},   {"Grandmother", "Grandfather"},
      {"Granddaughter", "Grandson"}, {"Niece", "Nephew"},  {"Aunt", "Uncle"},
  };
  const auto& l = fixture().labels;
  auto index = [&](const char* s) { return int(std::find(l.begin(), l.end(), s) - l.begin()); };
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : names) out.emplace_back(index(a), index(b));
  return out;
}

}  // namespace condmds::kinship
