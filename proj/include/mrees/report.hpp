#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrees/monomial.hpp"

namespace mrees {

/// One failed instance of a bounded check.
struct CheckFailure {
  std::vector<Exponent> point;             ///< grid point (n, or (r,s,t)) where it failed
  std::optional<ExponentVector> witness;   ///< monomial in LHS \ RHS, when one exists
  std::string detail;
};

/// A pair of integers that the check expects to be equal.
struct Comparison {
  std::string label;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;

  bool equal() const { return lhs == rhs; }
};

/// Result of a bounded verification. `bound` is the range the statement was
/// verified on; a pass never means more than "verified up to bound".
struct CheckReport {
  std::string check;
  bool passed = true;
  std::int64_t bound = 0;
  std::vector<CheckFailure> failures;
  std::vector<Comparison> comparisons;
  std::vector<std::string> notes;

  void fail(CheckFailure failure) {
    passed = false;
    failures.push_back(std::move(failure));
  }

  /// Records the comparison and fails the report when the sides differ.
  bool compare(std::string label, std::int64_t lhs, std::int64_t rhs) {
    comparisons.push_back({std::move(label), lhs, rhs});
    if (lhs != rhs) {
      passed = false;
      return false;
    }
    return true;
  }
};

}  // namespace mrees
