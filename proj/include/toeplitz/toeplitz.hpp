#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "toeplitz/arith.hpp"
#include "toeplitz/holeword.hpp"

namespace toeplitz {

// A modulus m >= 2 and a generator W with |W| = m - 1. Determines the fixed
// point X = lim sigma^k(w_1) of sigma: a -> Wa.
class ToeplitzSpec {
public:
    ToeplitzSpec(Index m, Word generator);
    ToeplitzSpec(Index m, std::string generator) : ToeplitzSpec(m, Word(std::move(generator))) {}

    Index m() const noexcept { return m_; }
    const Word& generator() const noexcept { return generator_; }
    // W followed by the hole.
    PartialWord partial() const { return PartialWord(generator_); }

    friend bool operator==(const ToeplitzSpec&, const ToeplitzSpec&) = default;

private:
    Index m_;
    Word generator_;
};

// X(1)...X(length).
Word fixed_prefix(const ToeplitzSpec& spec, std::size_t length);

// X(n), 1-based. Throws DomainError for n = 0.
char access(const ToeplitzSpec& spec, Index n);

// True iff every letter of W equals w_1, i.e. X is constant.
bool is_constant(const ToeplitzSpec& spec) noexcept;

struct PeriodicityReport {
    bool periodic = true;
    std::optional<Index> witness;  // smallest violating j when not periodic
};

// w_j = w_{j+q} for every q∤j with j+q <= |word|; vacuous when q >= |word|.
PeriodicityReport is_almost_periodic(const Word& word, Index q);

enum class PrefixCondition {
    Scaling,         // X(mj) = X(j)
    AlmostPeriodic,  // X(j) = X(j+m) for m∤j
};

struct PrefixCheck {
    bool passed = true;
    std::optional<PrefixCondition> failed;
    std::optional<Index> witness;
};

// Checks both fixed-point conditions on every index the word covers. On
// failure reports the condition with the smaller witness (Scaling on ties).
// Requires |word| >= m.
PrefixCheck check_prefix_conditions(const Word& word, Index m);

// Infinite stream X(1), X(2), ...
class FixedPointStream final : public LetterStream {
public:
    explicit FixedPointStream(ToeplitzSpec spec) : spec_(std::move(spec)) {}
    char next() override;

private:
    ToeplitzSpec spec_;
    Index pos_ = 0;
};

std::string to_string(PrefixCondition c);

} // namespace toeplitz
