#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace toeplitz {

using Index = std::uint64_t;

// Checked arithmetic; throws OverflowError naming `what` on wraparound.
Index checked_mul(Index a, Index b, std::string_view what = "index");
Index checked_add(Index a, Index b, std::string_view what = "index");
Index checked_pow(Index base, unsigned exp, std::string_view what = "power");

// Strips every factor of m from n (n >= 1, m >= 2).
Index strip_factor(Index n, Index m);

// Ascending list of all positive divisors of n^2, built from a trial-division
// factorisation of n.
std::vector<Index> divisors_of_square(Index n);

} // namespace toeplitz
