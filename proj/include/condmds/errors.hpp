#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace condmds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (shapes, CSV cells, configuration).
class InputError : public Error {
public:
  using Error::Error;
};

/// A decomposition or solve failed, usually because of non-finite values.
class NumericError : public Error {
public:
  using Error::Error;
};

/// The neighborhood graph has more than one connected component.
class DisconnectedGraphError : public Error {
public:
  DisconnectedGraphError(std::string what, std::vector<std::vector<std::size_t>> components)
      : Error(std::move(what)), components_(std::move(components)) {}

  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }

private:
  std::vector<std::vector<std::size_t>> components_;
};

}  // namespace condmds
