#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hc3 {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input: singular bases, unknown catalog entries,
/// parse failures. Maps to exit code 2 in the command-line tool.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A well-formed request that violates a domain rule, e.g. an inadmissible
/// configuration or a period lattice shorter than the exclusion distance.
/// Maps to exit code 1.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

/// The period lattice has a nonzero vector shorter than the exclusion
/// distance, so a particle would conflict with its own images.
class PeriodTooShort : public DomainViolation {
 public:
  using DomainViolation::DomainViolation;
};

/// A search ran out of its node budget before proving its result.
/// Maps to exit code 3.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t nodes)
      : Error(what), nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// 64-bit integer arithmetic left its representable range.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace hc3
