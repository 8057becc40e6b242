#pragma once

// Brute-force falsifier for membership claims. Extracts Y(j) = X(qj) directly
// and compares it with the fixed point generated by Y's own first m-1
// letters. Shares no code with decide() beyond random access into X.

#include <optional>
#include <string>
#include <vector>

#include "toeplitz/lattice.hpp"
#include "toeplitz/toeplitz.hpp"

namespace toeplitz {

enum class OracleOutcome { ConsistentUpTo, RejectedAt };

struct OracleVerdict {
    OracleOutcome outcome = OracleOutcome::ConsistentUpTo;
    std::optional<Index> rejected_at;
    Word extracted_generator;
    Index compared_depth = 0;

    bool consistent() const noexcept { return outcome == OracleOutcome::ConsistentUpTo; }
};

// max(m^4, 4096, m * m^s/p) where q = m^k h p and s is the smallest exponent
// with p | m^s; saturates at 2^64-1. A rejection of X(qN) first shows up at a
// multiple of m^s/p, so m^4 alone is too shallow once p needs s > 4 (e.g.
// m=6, q=128 first fails at j=10935).
Index default_depth(Index m, Index q);

// Requires depth >= m^2 and q*depth representable.
OracleVerdict brute_force_decide(const ToeplitzSpec& spec, Index q, Index depth);

struct CrossCheckReport {
    bool passed = false;
    Index q = 0;
    Decision decision;
    OracleVerdict oracle;
    std::string explanation;  // empty on pass
};

CrossCheckReport cross_check(const ToeplitzSpec& spec, Index q, const Decision& decision, Index depth);

// decide + cross_check for every spec and every 1 <= q <= q_max, sharded over
// OpenMP threads. Returns the failing reports in (spec, q) order.
std::vector<CrossCheckReport> sweep(const std::vector<ToeplitzSpec>& specs, Index q_max, Index depth);

std::string to_string(OracleOutcome o);

} // namespace toeplitz
