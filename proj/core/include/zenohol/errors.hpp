// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace zenohol {

/// Compact rendering of a double for error messages ("1e-08", not "0.000000").
inline std::string message_number(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

/// Caller supplied something outside an operation's contract.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax or continuity error in a path program. `position()` is a byte
/// offset into the source text for syntax errors; for continuity errors it is
/// the offset of the offending segment.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t position, long segment = -1)
      : InvalidArgument(what), position_(position), segment_(segment) {}

  std::size_t position() const noexcept { return position_; }
  /// Index of the offending segment, or -1 for pure syntax errors.
  long segment() const noexcept { return segment_; }

 private:
  std::size_t position_;
  long segment_;
};

/// A numerical procedure failed to reach its stated accuracy or hit a
/// structural change it cannot continue through.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, double est_error = -1.0)
      : std::runtime_error(what), est_error_(est_error) {}

  /// Error estimate at the point of failure, negative when not applicable.
  double est_error() const noexcept { return est_error_; }

 private:
  double est_error_;
};

}  // namespace zenohol
