#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indcover {

/// Malformed interchange data (graph6 lines, certificate JSON).
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_ = 0;
};

/// A precondition on the arguments does not hold.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input exceeds the exhaustive-search ceiling of an oracle.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A statistic that has no value on this input (e.g. Ore-degree of an edgeless graph).
class UndefinedStatistic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// extract_reducible was called with (G, f, A) failing the counting hypothesis.
class HypothesisNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace indcover
