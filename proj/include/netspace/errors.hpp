#pragma once

#include <stdexcept>
#include <string>

namespace netspace {

/// Malformed or out-of-range input (bad ids, weights, thresholds, files).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string &what) : std::invalid_argument(what) {}
};

/// A caller broke an operation's precondition, e.g. seeding an unlabeled node.
class ContractViolation : public std::logic_error {
public:
  explicit ContractViolation(const std::string &what) : std::logic_error(what) {}
};

/// Exhaustive search refused because the instance is over its size guard.
class GuardExceeded : public std::length_error {
public:
  explicit GuardExceeded(const std::string &what) : std::length_error(what) {}
};

} // namespace netspace
