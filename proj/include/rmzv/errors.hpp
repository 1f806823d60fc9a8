#pragma once

#include <stdexcept>
#include <string>

namespace rmzv {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// The canonical denominator of a rational function in delta vanishes at 0,
/// so the delta -> 0+ limit is not a finite rational.
struct PoleAtZero : std::domain_error {
  explicit PoleAtZero(const std::string& what) : std::domain_error(what) {}
};

/// A pole part was requested from a series whose negative-exponent window is
/// not completely known.
struct IncompletePolePart : std::domain_error {
  explicit IncompletePolePart(const std::string& what) : std::domain_error(what) {}
};

/// A coefficient was requested beyond the validity window of a series.
struct InsufficientPrecision : std::domain_error {
  explicit InsufficientPrecision(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace rmzv
