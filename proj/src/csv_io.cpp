#include "condmds/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "condmds/errors.hpp"

namespace condmds {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::vector<std::string>> split_rows(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    if (!trim(line).empty()) rows.push_back(split_fields(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return rows;
}

double parse_number(const std::string& s, const std::string& where) {
  double x = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (!s.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, x);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw InputError(where + ": '" + s + "' is not a number");
  }
  if (!std::isfinite(x)) throw InputError(where + ": value is not finite");
  return x;
}

std::string cell_name(std::size_t row, std::size_t col) {
  return "cell (" + std::to_string(row) + "," + std::to_string(col) + ")";
}

}  // namespace

LabeledDissimilarity parse_dissimilarity_csv(std::string_view text) {
  const auto rows = split_rows(text);
  if (rows.empty()) throw InputError("dissimilarity CSV: file is empty");
  const auto& header = rows.front();
  if (header.size() < 2) throw InputError("dissimilarity CSV: N >= 2 required");
  std::vector<std::string> labels(header.begin() + 1, header.end());
  const std::size_t n = labels.size();
  if (n < 2) throw InputError("dissimilarity CSV: N >= 2 required");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
    throw InputError("dissimilarity CSV: duplicate column labels");
  }
  if (rows.size() - 1 != n) {
    throw InputError("dissimilarity CSV: expected " + std::to_string(n) + " data rows, found " +
                     std::to_string(rows.size() - 1));
  }

  Matrix delta(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[r + 1];
    if (row.size() != n + 1) {
      throw InputError("dissimilarity CSV: row " + std::to_string(r + 1) + " ('" + row.front() + "') has " +
                       std::to_string(row.size() - 1) + " values, expected " + std::to_string(n));
    }
    if (row.front() != labels[r]) {
      throw InputError("dissimilarity CSV: row " + std::to_string(r + 1) + " label '" + row.front() +
                       "' does not match column label '" + labels[r] + "'");
    }
    for (std::size_t c = 0; c < n; ++c) {
      delta(Eigen::Index(r), Eigen::Index(c)) =
          parse_number(row[c + 1], "dissimilarity CSV " + cell_name(r + 1, c + 1));
    }
  }
  return {DissimilarityMatrix(std::move(delta)), std::move(labels)};
}

AuxiliaryMatrix parse_auxiliary_csv(std::string_view text, const std::vector<std::string>& labels) {
  const auto rows = split_rows(text);
  if (rows.empty()) throw InputError("auxiliary CSV: file is empty");
  const auto& header = rows.front();
  if (header.size() < 2) throw InputError("auxiliary CSV: at least one variable column required");
  std::vector<std::string> names(header.begin() + 1, header.end());
  const std::size_t q = names.size();

  std::map<std::string, std::size_t> wanted;
  for (std::size_t i = 0; i < labels.size(); ++i) wanted.emplace(labels[i], i);

  Matrix v(static_cast<Eigen::Index>(labels.size()), static_cast<Eigen::Index>(q));
  std::vector<bool> seen(labels.size(), false);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const auto it = wanted.find(row.front());
    if (it == wanted.end()) {
      throw InputError("auxiliary CSV: label '" + row.front() + "' is not in the dissimilarity matrix");
    }
    if (seen[it->second]) throw InputError("auxiliary CSV: label '" + row.front() + "' appears twice");
    if (row.size() != q + 1) {
      throw InputError("auxiliary CSV: row '" + row.front() + "' has " + std::to_string(row.size() - 1) +
                       " values, expected " + std::to_string(q));
    }
    seen[it->second] = true;
    for (std::size_t c = 0; c < q; ++c) {
      v(Eigen::Index(it->second), Eigen::Index(c)) =
          parse_number(row[c + 1], "auxiliary CSV row '" + row.front() + "' column '" + names[c] + "'");
    }
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen[i]) throw InputError("auxiliary CSV: label '" + labels[i] + "' is missing");
  }
  return AuxiliaryMatrix(std::move(v), std::move(names));
}

AuxiliaryMatrix select_columns(const AuxiliaryMatrix& v, const std::vector<std::string>& names) {
  if (names.empty()) throw InputError("conditioning: at least one column is required");
  Matrix out(v.n(), Eigen::Index(names.size()));
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto& all = v.names();
    const auto it = std::find(all.begin(), all.end(), names[k]);
    if (it == all.end()) throw InputError("conditioning column '" + names[k] + "' does not exist");
    out.col(Eigen::Index(k)) = v.matrix().col(it - all.begin());
  }
  return AuxiliaryMatrix(std::move(out), names);
}

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string write_dissimilarity_csv(const DissimilarityMatrix& d, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += "," + l;
  out += "\n";
  for (Eigen::Index i = 0; i < d.n(); ++i) {
    out += labels[std::size_t(i)];
    for (Eigen::Index j = 0; j < d.n(); ++j) out += "," + format_number(d(i, j));
    out += "\n";
  }
  return out;
}

std::string write_auxiliary_csv(const AuxiliaryMatrix& v, const std::vector<std::string>& labels) {
  std::string out = "label";
  for (Eigen::Index c = 0; c < v.q(); ++c) {
    out += "," + (v.names().empty() ? "v" + std::to_string(c + 1) : v.names()[std::size_t(c)]);
  }
  out += "\n";
  for (Eigen::Index i = 0; i < v.n(); ++i) {
    out += labels[std::size_t(i)];
    for (Eigen::Index c = 0; c < v.q(); ++c) out += "," + format_number(v.matrix()(i, c));
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace condmds
