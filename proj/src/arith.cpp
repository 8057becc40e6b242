#include "toeplitz/arith.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "toeplitz/errors.hpp"

namespace toeplitz {

Index checked_mul(Index a, Index b, std::string_view what) {
    Index out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError(std::string(what) + " overflow: " + std::to_string(a) + " * " +
                            std::to_string(b) + " exceeds 2^64-1");
    }
    return out;
}

Index checked_add(Index a, Index b, std::string_view what) {
    Index out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError(std::string(what) + " overflow: " + std::to_string(a) + " + " +
                            std::to_string(b) + " exceeds 2^64-1");
    }
    return out;
}

Index checked_pow(Index base, unsigned exp, std::string_view what) {
    Index out = 1;
    for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base, what);
    return out;
}

Index strip_factor(Index n, Index m) {
    while (n % m == 0) n /= m;
    return n;
}

std::vector<Index> divisors_of_square(Index n) {
    std::vector<std::pair<Index, unsigned>> factors;
    for (Index f = 2; f <= n / f; ++f) {
        if (n % f != 0) continue;
        unsigned e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        factors.emplace_back(f, 2 * e);
    }
    if (n > 1) factors.emplace_back(n, 2);

    std::vector<Index> divs{1};
    for (auto [prime, exp] : factors) {
        const std::size_t count = divs.size();
        Index power = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            power = checked_mul(power, prime, "divisor");
            for (std::size_t i = 0; i < count; ++i) divs.push_back(checked_mul(divs[i], power, "divisor"));
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace toeplitz
