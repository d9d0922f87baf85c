#pragma once

#include <stdexcept>
#include <string>

namespace vcell {

/// An operation was called outside its mathematical domain
/// (log of a series without unit constant term, odd marked-vertex distance, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A coefficient or table entry was requested beyond what was computed.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Parameters that the algorithm refuses to run with (e.g. too few label levels).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A document could not be read (syntax, missing fields, wrong types).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Never expected on valid input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vcell
