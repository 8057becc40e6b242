#pragma once

// Data-parallel kernels behind fixed-point generation and subsequence
// extraction. Every kernel has a straightforward serial version that the
// tests treat as the reference, and an OpenMP version used by the library.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "toeplitz/arith.hpp"

namespace toeplitz::kernels {

// X(n) for the modulo-m fixed point with generator `gen` (|gen| = m - 1).
// n >= 1; O(log_m n).
inline char letter_at(std::string_view gen, Index m, Index n) noexcept {
    while (n % m == 0) n /= m;
    return gen[n % m - 1];
}

// X(1)...X(length).
std::string fixed_prefix_serial(std::string_view gen, Index m, std::size_t length);
std::string fixed_prefix_parallel(std::string_view gen, Index m, std::size_t length);

// X(q)X(2q)...X(length*q). Throws OverflowError if length*q does not fit.
std::string subsequence_serial(std::string_view gen, Index m, Index q, std::size_t length);
std::string subsequence_parallel(std::string_view gen, Index m, Index q, std::size_t length);

// Smallest 1-based j with a[j] != b[j] over the common length.
std::optional<std::size_t> first_mismatch_serial(std::string_view a, std::string_view b);
std::optional<std::size_t> first_mismatch_parallel(std::string_view a, std::string_view b);

// Smallest 1-based j with q∤j, j+q <= |word| and word[j] != word[j+q].
std::optional<std::size_t> first_period_violation(std::string_view word, Index q);

} // namespace toeplitz::kernels
