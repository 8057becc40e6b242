#include "toeplitz/lattice.hpp"

#include <exception>
#include <numeric>

#include "toeplitz/errors.hpp"
#include "toeplitz/kernels.hpp"

namespace toeplitz {

QReduction reduce_q(Index q, Index m) {
    if (q == 0) throw DomainError("q must be >= 1");
    if (m < 2) throw PreconditionError("modulus m must be >= 2");

    Index coprime = q;
    for (Index g = std::gcd(coprime, m); g > 1; g = std::gcd(coprime, m)) coprime /= g;

    QReduction r;
    r.q = q;
    r.h = coprime;
    Index rest = q / coprime;
    while (rest % m == 0) {
        rest /= m;
        ++r.k;
    }
    r.p = rest;
    return r;
}

namespace {

// Smallest j with p∤j, j+p <= length, X(j) != X(j+p); evaluated through random
// access so the m^2 prefix is never materialised.
std::optional<Index> first_violation_by_access(const ToeplitzSpec& spec, Index p, Index length) {
    const std::string_view gen = spec.generator().view();
    for (Index j = 1; j + p <= length; ++j) {
        if (j % p == 0) continue;
        if (kernels::letter_at(gen, spec.m(), j) != kernels::letter_at(gen, spec.m(), j + p)) return j;
    }
    return std::nullopt;
}

Word subsequence_generator(const ToeplitzSpec& spec, Index q) {
    const Index m = spec.m();
    return Word::trusted(kernels::subsequence_serial(spec.generator().view(), m, q, m - 1));
}

} // namespace

Decision decide(const ToeplitzSpec& spec, Index q) {
    const Index m = spec.m();
    Decision out;
    out.reduction = reduce_q(q, m);
    checked_mul(q, m - 1, "generator index q*(m-1)");

    if (is_constant(spec)) {
        out.verdict = Verdict::Member;
        out.generator = spec.generator();
        out.constant_shortcut = true;
        return out;
    }

    const Index p = out.reduction.p;
    const Index m2 = checked_mul(m, m, "m^2");
    bool member = true;
    if (p != 1) {
        if (m2 % p != 0) {
            out.rejection = Rejection{RejectReason::PNotDividingMSquared, std::nullopt, std::nullopt};
            member = false;
        } else {
            const Index length = (m % p == 0) ? m : m2;
            if (auto j = first_violation_by_access(spec, p, length)) {
                out.rejection = Rejection{RejectReason::AlmostPeriodicityFails, length, *j};
                member = false;
            }
        }
    }

    if (member) {
        out.verdict = Verdict::Member;
        out.generator = subsequence_generator(spec, q);
    }
    return out;
}

SubsequenceCheck is_q_subsequence(const ToeplitzSpec& x, const ToeplitzSpec& y, Index q) {
    if (x.m() != y.m()) {
        throw PreconditionError("q-subsequence test needs equal moduli (got " + std::to_string(x.m()) + " and " +
                                std::to_string(y.m()) + ")");
    }
    SubsequenceCheck out;
    out.decision = decide(x, q);
    if (!out.decision.member()) return out;
    if (auto j = kernels::first_mismatch_serial(out.decision.generator->view(), y.generator().view())) {
        out.mismatch = *j;
        return out;
    }
    out.holds = true;
    return out;
}

namespace {

// Smallest s >= 1 with q | m^s, or nullopt when q is not m-smooth.
std::optional<unsigned> smallest_power_exponent(Index q, Index m) {
    if (reduce_q(q, m).h != 1) return std::nullopt;
    unsigned s = 1;
    Index power = m;
    while (power % q != 0) {
        power = checked_mul(power, m, "m^s");
        ++s;
    }
    return s;
}

} // namespace

UvSplit split_uv(const ToeplitzSpec& spec, Index q) {
    const Index m = spec.m();
    if (q == 0) throw DomainError("q must be >= 1");
    if (q == 1) return {PartialWord(), spec.partial(), 1};
    if (q % m == 0) throw PreconditionError("U o V split needs m not dividing q (m=" + std::to_string(m) + ")");

    const auto s = smallest_power_exponent(q, m);
    if (!s) throw PreconditionError("U o V split needs q to divide a power of m");
    const Decision decision = decide(spec, q);
    if (!decision.member()) throw PreconditionError("U o V split needs X(qN) to be a modulo-m fixed point");

    const Index span = checked_pow(m, *s, "m^s");
    const std::string_view gen = spec.generator().view();
    UvSplit out;
    out.s = *s;
    out.u = PartialWord(Word::trusted(kernels::fixed_prefix_serial(gen, m, q - 1)));
    out.v = PartialWord(Word::trusted(kernels::subsequence_serial(gen, m, q, span / q - 1)));

    const Word head = fixed_prefix(spec, span - 1);
    if (compose(out.u, out.v).body() != head) throw std::logic_error("U o V does not reproduce X(1..m^s-1)");
    if (expand(compose(out.v, out.u), m - 1) != *decision.generator) {
        throw std::logic_error("(V o U)^(inf) does not reproduce the subsequence generator");
    }
    return out;
}

QtdDecomposition decompose_qtd(const ToeplitzSpec& spec, Index q) {
    const Index m = spec.m();
    if (q == 0) throw DomainError("q must be >= 1");
    if (is_constant(spec)) throw QtdError(QtdHypothesis::ConstantWord, "Q o T o D needs a non-constant fixed point");
    if (m % q == 0) throw QtdError(QtdHypothesis::QDividesM, "Q o T o D needs q not dividing m");
    if (q % m == 0) throw QtdError(QtdHypothesis::MDividesQ, "Q o T o D needs m not dividing q");
    if (reduce_q(q, m).h != 1) {
        throw QtdError(QtdHypothesis::QNotDividingPowerOfM, "Q o T o D needs q to divide a power of m");
    }
    const Decision decision = decide(spec, q);
    if (!decision.member()) {
        throw QtdError(QtdHypothesis::NotMember, "Q o T o D needs X(qN) to be a modulo-m fixed point");
    }

    QtdDecomposition out;
    out.d = std::gcd(m, q);
    out.q1 = q / out.d;
    out.m1 = m / out.d;
    out.t = out.d / out.q1 - 1;

    const char a = spec.generator().at1(1);
    const std::string_view gen = spec.generator().view();
    out.q_part = PartialWord(Word::trusted(std::string(out.q1 - 1, a)));
    out.t_part = PartialWord(Word::trusted(kernels::subsequence_serial(gen, m, out.q1, out.t)));
    out.d_part = PartialWord(Word::trusted(std::string(out.m1 - 1, a)));

    if (compose(out.q_part, compose(out.t_part, out.d_part)) != spec.partial()) {
        throw std::logic_error("Q o T o D does not reproduce the generator");
    }
    out.subsequence_generator = expand(compose(out.d_part, compose(out.t_part, out.q_part)), m - 1);
    if (out.subsequence_generator != *decision.generator) {
        throw std::logic_error("(D o T o Q)^(inf) does not reproduce the subsequence generator");
    }
    return out;
}

Index inverse_factor(Index q, Index m) {
    if (q == 0) throw DomainError("q must be >= 1");
    if (q == 1) return 1;
    const auto s = smallest_power_exponent(q, m);
    if (!s) throw DomainError("q=" + std::to_string(q) + " has a prime factor not dividing m=" + std::to_string(m));
    return checked_pow(m, *s, "m^s") / q;
}

std::vector<std::pair<Index, Decision>> enumerate(const ToeplitzSpec& spec) {
    const Index m = spec.m();
    std::vector<Index> candidates;
    for (Index p : divisors_of_square(m)) {
        if (p % m != 0) candidates.push_back(p);
    }

    std::vector<std::pair<Index, Decision>> out(candidates.size());
    std::exception_ptr failure;
    const auto n = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            out[i] = {candidates[i], decide(spec, candidates[i])};
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::string to_string(Verdict v) { return v == Verdict::Member ? "Member" : "NotMember"; }

std::string to_string(RejectReason r) {
    return r == RejectReason::PNotDividingMSquared ? "PNotDividingMSquared" : "AlmostPeriodicityFails";
}

std::string to_string(QtdHypothesis h) {
    switch (h) {
        case QtdHypothesis::ConstantWord: return "ConstantWord";
        case QtdHypothesis::QDividesM: return "QDividesM";
        case QtdHypothesis::MDividesQ: return "MDividesQ";
        case QtdHypothesis::QNotDividingPowerOfM: return "QNotDividingPowerOfM";
        case QtdHypothesis::NotMember: return "NotMember";
    }
    return "Unknown";
}

} // namespace toeplitz
