#pragma once

#include <stdexcept>
#include <string>

namespace geocover {

/// Malformed input document (graph, cover, path-system file).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured budget or size guard was hit; the instance is too large
/// for the requested exhaustive computation.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well-formed but violates an operation's contract.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace geocover
