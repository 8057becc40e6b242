#include "toeplitz/toeplitz.hpp"

#include <algorithm>

#include "toeplitz/errors.hpp"
#include "toeplitz/kernels.hpp"

namespace toeplitz {

ToeplitzSpec::ToeplitzSpec(Index m, Word generator) : m_(m), generator_(std::move(generator)) {
    if (m_ < 2) throw ValidationError("modulus m must be >= 2 (got " + std::to_string(m_) + ")");
    if (generator_.size() != m_ - 1) {
        throw ValidationError("generator length must equal m-1: m=" + std::to_string(m_) + " needs " +
                              std::to_string(m_ - 1) + " letters, got " + std::to_string(generator_.size()));
    }
}

Word fixed_prefix(const ToeplitzSpec& spec, std::size_t length) {
    return Word::trusted(kernels::fixed_prefix_parallel(spec.generator().view(), spec.m(), length));
}

char access(const ToeplitzSpec& spec, Index n) {
    if (n == 0) throw DomainError("indices are 1-based; index 0 is not a position");
    return kernels::letter_at(spec.generator().view(), spec.m(), n);
}

bool is_constant(const ToeplitzSpec& spec) noexcept {
    const std::string_view w = spec.generator().view();
    return std::all_of(w.begin(), w.end(), [&](char c) { return c == w.front(); });
}

PeriodicityReport is_almost_periodic(const Word& word, Index q) {
    if (q < 2) throw PreconditionError("almost periodicity needs q >= 2");
    const auto j = kernels::first_period_violation(word.view(), q);
    if (!j) return {};
    return {false, *j};
}

PrefixCheck check_prefix_conditions(const Word& word, Index m) {
    if (m < 2) throw PreconditionError("modulus m must be >= 2");
    if (word.size() < m) {
        throw PreconditionError("prefix check needs |word| >= m (|word|=" + std::to_string(word.size()) +
                                ", m=" + std::to_string(m) + ")");
    }
    std::optional<Index> scaling;
    for (Index j = 1; j <= word.size() / m; ++j) {
        if (word.at1(m * j) != word.at1(j)) {
            scaling = j;
            break;
        }
    }
    const auto periodic = kernels::first_period_violation(word.view(), m);

    if (scaling && (!periodic || *scaling <= *periodic)) return {false, PrefixCondition::Scaling, scaling};
    if (periodic) return {false, PrefixCondition::AlmostPeriodic, *periodic};
    return {};
}

char FixedPointStream::next() { return access(spec_, ++pos_); }

std::string to_string(PrefixCondition c) {
    return c == PrefixCondition::Scaling ? "X(mj)=X(j)" : "X(j)=X(j+m) for m not dividing j";
}

} // namespace toeplitz
