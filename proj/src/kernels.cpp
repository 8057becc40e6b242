#include "toeplitz/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace toeplitz::kernels {

std::string fixed_prefix_serial(std::string_view gen, Index m, std::size_t length) {
    std::string out(length, '\0');
    Index residue = 0;
    for (std::size_t j = 1; j <= length; ++j) {
        if (++residue == m) residue = 0;
        out[j - 1] = residue != 0 ? gen[residue - 1] : out[j / m - 1];
    }
    return out;
}

std::string fixed_prefix_parallel(std::string_view gen, Index m, std::size_t length) {
    std::string out(length, '\0');
    const auto n = static_cast<std::int64_t>(length);
    const auto mod = static_cast<std::int64_t>(m);

    // Level 0: block b holds W at positions b*m+1 .. b*m+m-1.
    const std::int64_t blocks = n / mod + 1;
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::int64_t start = b * mod;
        const std::int64_t count = std::min<std::int64_t>(mod - 1, n - start);
        if (count > 0) std::copy_n(gen.data(), count, out.data() + start);
    }

    // Level k: positions i*m^k with m∤i copy X(i), which level 0 filled.
    for (Index stride = m; stride <= length;) {
        const auto s = static_cast<std::int64_t>(stride);
        const std::int64_t count = n / s;
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 1; i <= count; ++i) {
            if (i % mod != 0) out[i * s - 1] = out[i - 1];
        }
        if (stride > std::numeric_limits<Index>::max() / m) break;
        stride *= m;
    }
    return out;
}

std::string subsequence_serial(std::string_view gen, Index m, Index q, std::size_t length) {
    checked_mul(q, length, "subsequence index");
    std::string out(length, '\0');
    for (std::size_t j = 1; j <= length; ++j) out[j - 1] = letter_at(gen, m, q * j);
    return out;
}

std::string subsequence_parallel(std::string_view gen, Index m, Index q, std::size_t length) {
    checked_mul(q, length, "subsequence index");
    std::string out(length, '\0');
    const auto n = static_cast<std::int64_t>(length);
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 1; j <= n; ++j) {
        out[j - 1] = letter_at(gen, m, q * static_cast<Index>(j));
    }
    return out;
}

std::optional<std::size_t> first_mismatch_serial(std::string_view a, std::string_view b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return i + 1;
    }
    return std::nullopt;
}

std::optional<std::size_t> first_mismatch_parallel(std::string_view a, std::string_view b) {
    const auto n = static_cast<std::int64_t>(std::min(a.size(), b.size()));
    std::int64_t first = n;
#pragma omp parallel for schedule(static) reduction(min : first)
    for (std::int64_t i = 0; i < n; ++i) {
        if (a[i] != b[i] && i < first) first = i;
    }
    if (first == n) return std::nullopt;
    return static_cast<std::size_t>(first) + 1;
}

std::optional<std::size_t> first_period_violation(std::string_view word, Index q) {
    if (q >= word.size()) return std::nullopt;
    for (std::size_t j = 1; j + q <= word.size(); ++j) {
        if (j % q != 0 && word[j - 1] != word[j + q - 1]) return j;
    }
    return std::nullopt;
}

} // namespace toeplitz::kernels
