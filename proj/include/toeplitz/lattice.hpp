#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toeplitz/arith.hpp"
#include "toeplitz/holeword.hpp"
#include "toeplitz/toeplitz.hpp"

namespace toeplitz {

// q = m^k * h * p with gcd(h, m) = 1, every prime of p dividing m, m ∤ p.
struct QReduction {
    Index q = 1;
    unsigned k = 0;
    Index h = 1;
    Index p = 1;

    friend bool operator==(const QReduction&, const QReduction&) = default;
};

// Computed with a gcd loop, no factorisation.
QReduction reduce_q(Index q, Index m);

enum class Verdict { Member, NotMember };

enum class RejectReason {
    PNotDividingMSquared,
    AlmostPeriodicityFails,
};

struct Rejection {
    RejectReason reason = RejectReason::PNotDividingMSquared;
    // Set for AlmostPeriodicityFails: the prefix X(1..n) that was scanned and
    // the smallest j with p∤j and X(j) != X(j+p).
    std::optional<Index> checked_prefix_length;
    std::optional<Index> witness;

    friend bool operator==(const Rejection&, const Rejection&) = default;
};

// Verdict on whether X(qN) is again a modulo-m Toeplitz fixed point.
struct Decision {
    Verdict verdict = Verdict::NotMember;
    QReduction reduction;
    std::optional<Rejection> rejection;  // NotMember only
    std::optional<Word> generator;       // Member only: X(q)X(2q)...X((m-1)q)
    bool constant_shortcut = false;

    bool member() const noexcept { return verdict == Verdict::Member; }
};

Decision decide(const ToeplitzSpec& spec, Index q);

struct SubsequenceCheck {
    bool holds = false;
    Decision decision;
    // Smallest j with Y(j) != X(qj), when the decision is Member but the
    // generators differ.
    std::optional<Index> mismatch;
};

// Y = X(qN)? Both specs must share the modulus.
SubsequenceCheck is_q_subsequence(const ToeplitzSpec& x, const ToeplitzSpec& y, Index q);

// X(1..m^s-1)? = U o V with U = X(1..q-1)? and V = X(q)X(2q)...X(m^s-q)?.
struct UvSplit {
    PartialWord u;
    PartialWord v;
    unsigned s = 0;
};

// Requires m ∤ q, q | m^s, and X(qN) a fixed point. q = 1 yields U = "?",
// V = W?, s = 1. Throws PreconditionError naming the failed condition.
UvSplit split_uv(const ToeplitzSpec& spec, Index q);

// W? = Q o T o D with Q = a^{q1-1}?, T = X(q1)X(2q1)...X(t q1)?, D = a^{m1-1}?.
struct QtdDecomposition {
    PartialWord q_part;
    PartialWord t_part;
    PartialWord d_part;
    Index d = 0;
    Index q1 = 0;
    Index m1 = 0;
    Index t = 0;
    // First m-1 letters of (D o T o Q)^(inf), the generator of X(qN).
    Word subsequence_generator;
};

enum class QtdHypothesis {
    ConstantWord,
    QDividesM,
    MDividesQ,
    QNotDividingPowerOfM,
    NotMember,
};

class QtdError : public std::invalid_argument {
public:
    QtdError(QtdHypothesis h, const std::string& what) : std::invalid_argument(what), hypothesis_(h) {}
    QtdHypothesis hypothesis() const noexcept { return hypothesis_; }

private:
    QtdHypothesis hypothesis_;
};

QtdDecomposition decompose_qtd(const ToeplitzSpec& spec, Index q);

// m^s / q for the smallest s with q | m^s. Throws DomainError when q has a
// prime factor that does not divide m.
Index inverse_factor(Index q, Index m);

// Every divisor p of m^2 with m ∤ p, ascending, with its decision.
std::vector<std::pair<Index, Decision>> enumerate(const ToeplitzSpec& spec);

std::string to_string(Verdict v);
std::string to_string(RejectReason r);
std::string to_string(QtdHypothesis h);

} // namespace toeplitz
