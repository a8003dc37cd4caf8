#pragma once

// Exact linear algebra over the integers.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace mrees {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Solves the square system A x = b by fraction-free (Bareiss) elimination.
/// Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_exact(BigMatrix a, std::vector<BigInt> b);

/// Rank of an arbitrary rectangular integer matrix.
std::size_t exact_rank(BigMatrix a);

}  // namespace mrees
