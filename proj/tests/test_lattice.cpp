#include <doctest.h>

#include <numeric>

#include "reference.hpp"
#include "toeplitz/errors.hpp"
#include "toeplitz/lattice.hpp"

using namespace toeplitz;

namespace {

const ToeplitzSpec kEx32(12, "aabaaaaabaa");
const ToeplitzSpec kEx33(6, "aaaba");

std::vector<Index> members(const ToeplitzSpec& spec) {
    std::vector<Index> out;
    for (const auto& [p, d] : enumerate(spec)) {
        if (d.member()) out.push_back(p);
    }
    return out;
}

// Membership by literal substitution: extract X(qj) from a long prefix and
// compare with the fixed point generated by its first m-1 letters.
bool literal_member(const ToeplitzSpec& spec, Index q, std::string* generator) {
    const Index m = spec.m();
    const std::size_t depth = m * m * m * m;
    const std::string x = ref::substitute_until(spec.generator().str(), q * depth);
    std::string y;
    for (std::size_t j = 1; j <= depth; ++j) y += x[q * j - 1];
    *generator = y.substr(0, m - 1);
    return ref::substitute_until(*generator, depth) == y;
}

std::vector<ToeplitzSpec> small_corpus() {
    std::vector<ToeplitzSpec> out;
    for (Index m = 2; m <= 6; ++m) {
        for (const auto& w : ref::binary_words(m - 1)) out.emplace_back(m, w);
    }
    out.push_back(kEx32);
    out.emplace_back(8, "aaabaaa");
    out.emplace_back(8, "abaaaba");
    out.emplace_back(9, "aabaabaa");
    return out;
}

} // namespace

TEST_CASE("reduce_q") {
    CHECK(reduce_q(45, 12) == QReduction{45, 0, 5, 9});
    CHECK(reduce_q(7, 12) == QReduction{7, 0, 7, 1});
    CHECK(reduce_q(24, 12) == QReduction{24, 1, 1, 2});
    CHECK(reduce_q(1, 12) == QReduction{1, 0, 1, 1});
    CHECK_THROWS_AS(reduce_q(0, 12), DomainError);

    for (Index m = 2; m <= 30; ++m) {
        for (Index q = 1; q <= 2000; ++q) {
            const auto r = reduce_q(q, m);
            const auto e = ref::reduce(q, m);
            REQUIRE(r.k == e.k);
            REQUIRE(r.h == e.h);
            REQUIRE(r.p == e.p);
            REQUIRE(std::gcd(r.h, m) == 1);
            REQUIRE(r.p % m != 0);
        }
    }
}

TEST_CASE("decide: worked examples") {
    auto d3 = decide(kEx32, 3);
    CHECK(d3.member());
    CHECK(d3.generator->str() == "bababababab");

    auto d18 = decide(kEx32, 18);
    CHECK(d18.member());
    CHECK(d18.generator->str() == "abaaabaaaba");

    auto d4 = decide(kEx32, 4);
    CHECK_FALSE(d4.member());
    REQUIRE(d4.rejection);
    CHECK(d4.rejection->reason == RejectReason::AlmostPeriodicityFails);
    CHECK(d4.rejection->witness == 3);
    CHECK(d4.rejection->checked_prefix_length == 12);

    auto d8 = decide(kEx33, 8);
    CHECK_FALSE(d8.member());
    CHECK(d8.rejection->reason == RejectReason::PNotDividingMSquared);
    CHECK(d8.reduction.p == 8);
    CHECK_FALSE(d8.rejection->witness.has_value());

    auto d5 = decide(kEx33, 5);
    CHECK(d5.member());
    CHECK(d5.generator->str() == "abaaa");

    auto d2 = decide(kEx33, 2);
    CHECK(d2.member());
    CHECK(d2.generator->str() == "abaab");

    auto dc = decide(ToeplitzSpec(2, "a"), 1000);
    CHECK(dc.member());
    CHECK(dc.constant_shortcut);
    CHECK(dc.generator->str() == "a");

    // Case (iii): p | m^2, p ∤ m, checked on X(1..m^2).
    auto d9 = decide(kEx32, 9);
    CHECK_FALSE(d9.member());
    CHECK(d9.rejection->checked_prefix_length == 144);

    CHECK_THROWS_AS(decide(kEx32, 1ULL << 62), OverflowError);
}

TEST_CASE("enumerate") {
    CHECK(members(kEx32) == std::vector<Index>{1, 3, 6, 18});
    CHECK(members(kEx33) == std::vector<Index>{1, 2});
    const auto rows = enumerate(ToeplitzSpec(2, "a"));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].first == 1);
    CHECK(rows[0].second.member());

    const auto all = enumerate(kEx32);
    std::vector<Index> ps;
    for (const auto& [p, d] : all) ps.push_back(p);
    CHECK(ps == std::vector<Index>{1, 2, 3, 4, 6, 8, 9, 16, 18});
}

TEST_CASE("is_q_subsequence") {
    CHECK(is_q_subsequence(kEx32, ToeplitzSpec(12, "bababababab"), 3).holds);
    CHECK(is_q_subsequence(kEx33, ToeplitzSpec(6, "abaaa"), 5).holds);
    CHECK(is_q_subsequence(kEx33, kEx33, 6).holds);
    CHECK(is_q_subsequence(kEx32, kEx32, 12).holds);

    const auto wrong = is_q_subsequence(kEx33, ToeplitzSpec(6, "ababa"), 2);
    CHECK_FALSE(wrong.holds);
    CHECK(wrong.mismatch == 4);

    const auto rejected = is_q_subsequence(kEx32, kEx32, 4);
    CHECK_FALSE(rejected.holds);
    CHECK_FALSE(rejected.decision.member());

    CHECK_THROWS_AS(is_q_subsequence(kEx32, kEx33, 2), PreconditionError);
}

TEST_CASE("split_uv") {
    auto s2 = split_uv(kEx33, 2);
    CHECK(s2.u.str() == "a?");
    CHECK(s2.v.str() == "ab?");
    CHECK(s2.s == 1);
    CHECK(compose(s2.u, s2.v).str() == "aaaba?");

    auto s3 = split_uv(kEx32, 3);
    CHECK(s3.u.str() == "aa?");
    CHECK(s3.v.str() == "bab?");
    CHECK(compose(s3.u, s3.v).str() == "aabaaaaabaa?");

    auto s18 = split_uv(kEx32, 18);
    CHECK(s18.s == 2);
    CHECK(s18.v.length() == 8);

    auto s1 = split_uv(ToeplitzSpec(2, "a"), 1);
    CHECK(s1.u.str() == "?");
    CHECK(s1.v.str() == "a?");

    CHECK_THROWS_WITH_AS(split_uv(kEx32, 24), doctest::Contains("m not dividing q"), PreconditionError);
    CHECK_THROWS_WITH_AS(split_uv(kEx32, 15), doctest::Contains("divide a power of m"), PreconditionError);
    CHECK_THROWS_WITH_AS(split_uv(kEx32, 4), doctest::Contains("fixed point"), PreconditionError);
}

TEST_CASE("decompose_qtd") {
    auto qtd = decompose_qtd(kEx32, 18);
    CHECK(qtd.q_part.str() == "aa?");
    CHECK(qtd.t_part.str() == "b?");
    CHECK(qtd.d_part.str() == "a?");
    CHECK(qtd.d == 6);
    CHECK(qtd.q1 == 3);
    CHECK(qtd.m1 == 2);
    CHECK(qtd.t == 1);
    CHECK(qtd.subsequence_generator.str() == "abaaabaaaba");

    auto hyp = [](auto&& f) {
        try {
            f();
        } catch (const QtdError& e) {
            return e.hypothesis();
        }
        FAIL("expected QtdError");
        return QtdHypothesis::NotMember;
    };
    CHECK(hyp([] { decompose_qtd(kEx32, 6); }) == QtdHypothesis::QDividesM);
    CHECK(hyp([] { decompose_qtd(kEx32, 9); }) == QtdHypothesis::NotMember);
    CHECK(hyp([] { decompose_qtd(kEx32, 24); }) == QtdHypothesis::MDividesQ);
    CHECK(hyp([] { decompose_qtd(kEx32, 90); }) == QtdHypothesis::QNotDividingPowerOfM);
    CHECK(hyp([] { decompose_qtd(ToeplitzSpec(4, "aaa"), 8); }) == QtdHypothesis::ConstantWord);
}

TEST_CASE("inverse_factor") {
    CHECK(inverse_factor(18, 12) == 8);
    CHECK(inverse_factor(12, 12) == 1);
    CHECK(inverse_factor(3, 12) == 4);
    CHECK(inverse_factor(1, 12) == 1);
    CHECK(inverse_factor(24, 12) == 6);
    CHECK_THROWS_AS(inverse_factor(5, 12), DomainError);
}

TEST_CASE("decide agrees with literal substitution") {
    for (const auto& spec : small_corpus()) {
        const Index m = spec.m();
        if (m > 6) continue;
        for (Index q = 1; q <= m * m; ++q) {
            CAPTURE(spec.generator().str());
            CAPTURE(q);
            std::string gen;
            const bool expected = literal_member(spec, q, &gen);
            const Decision d = decide(spec, q);
            REQUIRE(d.member() == expected);
            if (expected) REQUIRE(d.generator->str() == gen);
        }
    }
}

TEST_CASE("structural invariants") {
    for (const auto& spec : small_corpus()) {
        const Index m = spec.m();
        CAPTURE(spec.generator().str());
        for (Index q = 1; q <= m * m * m; ++q) {
            CAPTURE(q);
            const Decision d = decide(spec, q);

            // Coprime and m-power invariance.
            for (Index h = 1; h <= 20; ++h) {
                if (std::gcd(h, m) == 1) REQUIRE(decide(spec, h * q).verdict == d.verdict);
            }
            const Decision dm = decide(spec, m * q);
            REQUIRE(dm.verdict == d.verdict);
            REQUIRE(dm.generator == d.generator);
            REQUIRE(dm.rejection == d.rejection);

            if (!d.member() || d.constant_shortcut) continue;
            const auto red = reduce_q(q, m);
            if (red.h != 1 || red.k != 0) continue;

            const UvSplit uv = split_uv(spec, q);
            const Index span = uv.s == 0 ? 1 : checked_pow(m, uv.s);
            REQUIRE(compose(uv.u, uv.v).body() == fixed_prefix(spec, span - 1));
            const ToeplitzSpec y(m, *d.generator);
            REQUIRE(expand(compose(uv.v, uv.u), m * m) == fixed_prefix(y, m * m));

            const Index r = inverse_factor(q, m);
            for (Index j = 1; j <= 2000; ++j) REQUIRE(access(y, r * j) == access(spec, j));

            if (m % q == 0 || q == 1) continue;
            const QtdDecomposition qtd = decompose_qtd(spec, q);
            REQUIRE(compose(qtd.q_part, compose(qtd.t_part, qtd.d_part)) == spec.partial());
            REQUIRE(qtd.q1 < qtd.d);
            REQUIRE(qtd.d % qtd.q1 == 0);
            REQUIRE(qtd.q_part.length() * qtd.t_part.length() * qtd.d_part.length() == m);

            // X(jd) = X(d) off multiples of lcm(m, q); the head is d-periodic.
            const Index d_ = qtd.d;
            const Index lcm = std::lcm(m, q);
            for (Index j = 1; j <= m / d_; ++j) {
                if ((j * d_) % lcm != 0) REQUIRE(access(spec, j * d_) == access(spec, d_));
            }
            const std::string head = fixed_prefix(spec, m).str();
            const std::string block = fixed_prefix(spec, d_).str();
            std::string tiled;
            for (Index i = 0; i < m / d_; ++i) tiled += block;
            REQUIRE(head == tiled);
        }
    }
}
