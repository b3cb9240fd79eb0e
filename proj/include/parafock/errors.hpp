#pragma once

#include <stdexcept>
#include <string>

#include "parafock/rational.hpp"

namespace parafock {

/// Thrown when a computation would exceed the max_n particle guard or the
/// dense-Gram entry-count guard.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by gram_matrix when two mirror entries disagree. Signals an
/// inconsistent algebra definition; reports surface it instead of crashing.
struct SymmetryViolation : std::runtime_error {
  SymmetryViolation(int row_, int col_, Rational upper_, Rational lower_)
      : std::runtime_error("gram matrix not symmetric at (" + std::to_string(row_) +
                           "," + std::to_string(col_) + "): " + upper_.str() +
                           " vs " + lower_.str()),
        row(row_),
        col(col_),
        upper(std::move(upper_)),
        lower(std::move(lower_)) {}

  int row;
  int col;
  Rational upper;
  Rational lower;
};

}  // namespace parafock
