#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace sl3web;
using testutil::fixture;

namespace {

std::vector<CanonicalKey> keys(const std::vector<Web>& ws) {
    std::vector<CanonicalKey> k;
    for (const auto& w : ws) k.push_back(canonical_key(w, true));
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace

TEST(ConnectedSum, SplitUndoesSum) {
    Web a = fixture("cube.web"), b = fixture("hexprism.web");
    for (int da : a.map().edges()) {
        Web s = connected_sum(a, da, b, 0);
        EXPECT_EQ(s.num_vertices(), a.num_vertices() + b.num_vertices());
        auto cuts = find_2_edge_cuts(s);
        ASSERT_EQ(cuts.size(), 1u);
        auto [x, y] = split(s, cuts[0]);
        std::vector<Web> got{x, y}, want{a, b};
        EXPECT_EQ(keys(got), keys(want));
        // [3] P(a # b) = P(a) P(b)
        EXPECT_EQ(qint(3) * invariant(s), invariant(a) * invariant(b));
    }
}

TEST(ConnectedSum, RejectsBadInput) {
    Web a = fixture("cube.web");
    EXPECT_THROW(connected_sum(a, -1, a, 0), std::invalid_argument);
    EXPECT_THROW(connected_sum(Web::validate(a.map(), 1), 0, a, 0), std::invalid_argument);
    // either orientation of the second edge gives a web with the same value
    Web b = fixture("hexprism.web");
    for (int db : {0, b.map().alpha(0)}) {
        Web s = connected_sum(a, 0, b, db);
        EXPECT_EQ(qint(3) * invariant(s), invariant(a) * invariant(b));
    }
}

TEST(Decompose, PrimesAreTheirOwnDecomposition) {
    for (const auto& w : testutil::catalog_webs()) {
        auto d = decompose(w);
        ASSERT_EQ(d.k, 1);
        EXPECT_EQ(d.l, 0);
        EXPECT_EQ(canonical_key(d.primes[0]), canonical_key(w));
    }
}

TEST(Decompose, RecoversSummandsAndTheProductIdentity) {
    std::mt19937_64 rng(61);
    auto primes = testutil::catalog_webs();
    for (int t = 0; t < 40; ++t) {
        auto rs = testutil::random_sum(primes, rng, 4);
        auto d = decompose(rs.web);
        EXPECT_EQ(keys(d.primes), keys(rs.parts));
        std::vector<HalfLaurent> vals;
        for (const auto& p : d.primes) vals.push_back(invariant(p));
        auto [lhs, rhs] = d.identity_sides(invariant(rs.web), vals);
        EXPECT_EQ(lhs, rhs);
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            auto e = decompose(rs.web, DecomposeOptions{seed});
            EXPECT_EQ(keys(e.primes), keys(d.primes));
            EXPECT_EQ(e.l, d.l);
        }
    }
}

TEST(Decompose, BigonsAfterSplittingAreCounted) {
    // Splitting a sum whose summand is itself a theta-like piece leaves
    // bigons; simplify must remove them and count each one.
    Web theta = fixture("theta.web");
    auto s = simplify(theta);
    EXPECT_EQ(s.l, 1);
    EXPECT_TRUE(s.collapsed());
    EXPECT_EQ(s.web.circles(), 1);
    // P(theta) = (-[2])^l [3]
    EXPECT_EQ(invariant(theta), pow(-qint(2), s.l) * qint(3));
}

TEST(Decompose, RejectsUnsupportedWebs) {
    EXPECT_THROW(decompose(fixture("circle.web")), std::invalid_argument);
    EXPECT_THROW(decompose(disjoint_union(fixture("cube.web"), fixture("cube.web"))), WebError);
    EXPECT_THROW(decompose(fixture("theta.web")), WebError);
}
