#include "toeplitz/oracle.hpp"

#include <cstdint>
#include <exception>
#include <limits>
#include <algorithm>

#include "toeplitz/errors.hpp"
#include "toeplitz/kernels.hpp"

namespace toeplitz {

Index default_depth(Index m, Index q) {
    try {
        const Index scale = checked_mul(m, inverse_factor(reduce_q(q, m).p, m), "oracle depth");
        return std::max({checked_pow(m, 4, "oracle depth"), Index{4096}, scale});
    } catch (const OverflowError&) {
        return std::numeric_limits<Index>::max();
    }
}

OracleVerdict brute_force_decide(const ToeplitzSpec& spec, Index q, Index depth) {
    const Index m = spec.m();
    if (q == 0) throw DomainError("q must be >= 1");
    const Index m2 = checked_mul(m, m, "m^2");
    if (depth < m2) {
        throw PreconditionError("oracle depth must be >= m^2 (depth=" + std::to_string(depth) +
                                ", m^2=" + std::to_string(m2) + ")");
    }
    checked_mul(q, depth, "oracle index q*depth");

    const std::string extracted = kernels::subsequence_parallel(spec.generator().view(), m, q, depth);
    const std::string_view head = std::string_view(extracted).substr(0, m - 1);
    const std::string regenerated = kernels::fixed_prefix_parallel(head, m, depth);

    OracleVerdict out;
    out.extracted_generator = Word::trusted(std::string(head));
    out.compared_depth = depth;
    if (auto j = kernels::first_mismatch_parallel(extracted, regenerated)) {
        out.outcome = OracleOutcome::RejectedAt;
        out.rejected_at = *j;
    }
    return out;
}

CrossCheckReport cross_check(const ToeplitzSpec& spec, Index q, const Decision& decision, Index depth) {
    CrossCheckReport out;
    out.q = q;
    out.decision = decision;
    out.oracle = brute_force_decide(spec, q, depth);

    if (decision.reduction.q != q) {
        out.explanation = "decision was produced for q=" + std::to_string(decision.reduction.q) +
                          " but checked against q=" + std::to_string(q);
    } else if (decision.member()) {
        if (!out.oracle.consistent()) {
            out.explanation = "decide says Member but the oracle rejects at j=" +
                              std::to_string(*out.oracle.rejected_at);
        } else if (!decision.generator || *decision.generator != out.oracle.extracted_generator) {
            out.explanation = "generator mismatch: decide gives " +
                              (decision.generator ? decision.generator->str() : std::string("<none>")) +
                              ", oracle extracts " + out.oracle.extracted_generator.str();
        }
    } else if (out.oracle.consistent()) {
        out.explanation = "decide says NotMember but the oracle is consistent up to depth " + std::to_string(depth);
    }
    out.passed = out.explanation.empty();
    return out;
}

std::vector<CrossCheckReport> sweep(const std::vector<ToeplitzSpec>& specs, Index q_max, Index depth) {
    std::vector<std::vector<CrossCheckReport>> per_spec(specs.size());
    std::exception_ptr failure;
    const auto n = static_cast<std::int64_t>(specs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            for (Index q = 1; q <= q_max; ++q) {
                auto report = cross_check(specs[i], q, decide(specs[i], q), depth);
                if (!report.passed) per_spec[i].push_back(std::move(report));
            }
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<CrossCheckReport> out;
    for (auto& v : per_spec) {
        for (auto& r : v) out.push_back(std::move(r));
    }
    return out;
}

std::string to_string(OracleOutcome o) { return o == OracleOutcome::ConsistentUpTo ? "ConsistentUpTo" : "RejectedAt"; }

} // namespace toeplitz
