#include "helpers.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sl3web;

namespace {

// All sequences of even parts >= 4 summing to n.
void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int a = 4; a <= n; a += 2) {
        cur.push_back(a);
        compositions(n - a, cur, out);
        cur.pop_back();
    }
}

// sl(2) multiplicities by explicit tensor products of weight multisets.
std::uint64_t invariants_by_characters(const std::vector<int>& w) {
    std::map<int, std::uint64_t> cur{{0, 1}};  // highest weight -> multiplicity
    for (int a : w) {
        std::map<int, std::uint64_t> next;
        for (auto [h, m] : cur)
            for (int x = std::abs(h - a); x <= h + a; x += 2) next[x] += m;
        cur = std::move(next);
    }
    return cur.count(0) ? cur[0] : 0;
}

// Non-crossing matchings of points [lo, hi] avoiding same-side chords, brute force.
std::uint64_t naive_count(const std::vector<int>& side, int lo, int hi) {
    if (lo > hi) return 1;
    std::uint64_t total = 0;
    for (int k = lo + 1; k <= hi; k += 2)
        if (side[k] != side[lo]) total += naive_count(side, lo + 1, k - 1) * naive_count(side, k + 1, hi);
    return total;
}

std::vector<int> rotate_reflect_min(std::vector<int> s) {
    std::vector<int> best = s;
    for (int r = 0; r < 2; ++r) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::rotate(s.begin(), s.begin() + 1, s.end());
            best = std::min(best, s);
        }
        std::reverse(s.begin(), s.end());
    }
    return best;
}

}  // namespace

TEST(Plates, EvenPartitionsMatchBruteForce) {
    for (int n = 8; n <= 24; n += 2) {
        std::set<std::vector<int>> want;
        std::vector<int> cur;
        std::vector<std::vector<int>> all;
        compositions(n, cur, all);
        for (const auto& c : all) {
            if (c.size() >= 3) want.insert(rotate_reflect_min(c));
            if (c.size() == 2 && c[0] == c[1]) want.insert(c);
        }
        std::set<std::vector<int>> got;
        for (const auto& p : even_partitions(n)) EXPECT_TRUE(got.insert(p.sides).second);
        EXPECT_EQ(got, want) << n;
    }
    EXPECT_TRUE(even_partitions(6).empty());
    EXPECT_THROW(even_partitions(9), std::invalid_argument);
}

TEST(ChordDiagrams, CountEqualsInvariantDimension) {
    for (int n = 4; n <= 24; n += 2) {
        std::vector<int> cur;
        std::vector<std::vector<int>> all;
        compositions(n, cur, all);
        for (const auto& c : all) {
            if (c.size() < 2) continue;
            Plate p{c};
            auto expected = invariants_by_characters(c);
            EXPECT_EQ(dim_inv(c), expected);
            EXPECT_EQ(count_normal_chord_diagrams(p), expected);
            EXPECT_EQ(naive_count(p.side_of_point(), 0, p.points() - 1), expected);
            if (n <= 16) {
                auto ds = normal_chord_diagrams(p);
                EXPECT_EQ(ds.size(), expected);
                for (const auto& d : ds) EXPECT_TRUE(is_normal(p, d));
            }
        }
    }
    EXPECT_EQ(dim_inv({4, 4, 10}), 0u);
    EXPECT_EQ(dim_inv({4, 4, 4, 6}), 4u);
    EXPECT_EQ(count_normal_chord_diagrams(Plate{{4, 4, 4, 6}}), 4u);
    EXPECT_TRUE(is_admissible(4, 6, 8));
    EXPECT_FALSE(is_admissible(4, 4, 10));
    for (auto t : std::vector<std::vector<int>>{{4, 4, 4}, {4, 6, 6}, {4, 4, 8}, {6, 6, 8}})
        EXPECT_EQ(normal_chord_diagrams(Plate{t}).size(), 1u);
}

TEST(Assembly, CutOpenRoundTrip) {
    for (const auto& e : testutil::catalog20()) {
        if (!e.circular) continue;
        auto cw = circular_witness(e.web);
        ASSERT_TRUE(cw);
        auto [plate, cd] = cut_open(e.web, *cw);
        EXPECT_EQ(plate.points(), e.vertices);
        EXPECT_TRUE(is_normal(plate, cd));
        EXPECT_TRUE(is_isomorphic(assemble_web(plate, cd), e.web)) << e.name;
    }
}

TEST(Pushing, UnpushInvertsPush) {
    for (const auto& w : testutil::catalog_webs()) {
        auto key = canonical_key(w, false);
        for (const auto& pr : pushing_moves(w)) {
            EXPECT_EQ(pr.web.num_vertices(), w.num_vertices() - 2);
            Web back = unpush_at(pr.web, pr.fb, pr.fd);
            EXPECT_EQ(canonical_key(back, false), key);
        }
    }
}

TEST(Enumeration, HistogramUpTo20) {
    std::map<int, int> hist;
    for (const auto& e : testutil::catalog20()) ++hist[e.vertices];
    std::map<int, int> want{{8, 1}, {12, 1}, {14, 1}, {16, 2}, {18, 2}, {20, 8}};
    EXPECT_EQ(hist, want);
    for (const auto& e : testutil::catalog20()) {
        EXPECT_TRUE(is_prime(e.web));
        EXPECT_EQ(e.descriptions, polygonal_descriptions(e.web));
    }
}

TEST(Enumeration, IndependentOfThreadCount) {
    auto one = all_primes(18, 2, EnumOptions{1});
    auto four = all_primes(18, 2, EnumOptions{4});
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(canonical_key(one[i]), canonical_key(four[i]));
}

TEST(Enumeration, ArgumentChecks) {
    EXPECT_THROW(all_primes(19, 2), std::invalid_argument);
    EXPECT_THROW(all_primes(18, 1), std::invalid_argument);
    EXPECT_EQ(default_slack(20), 4);
    EXPECT_EQ(default_slack(8), 2);
    EXPECT_TRUE(circular_primes(10).empty());
}

TEST(ReferenceTable, ParsesAndMatches) {
    auto rep = verify_reference(testutil::catalog20(), 20);
    EXPECT_TRUE(rep.histogram_ok());
    EXPECT_EQ(rep.exact_rows(), 12);
    EXPECT_EQ(rep.suspect_rows(), 3);
    EXPECT_EQ(rep.suspect_structural(), 3);
    EXPECT_TRUE(rep.unmatched_entries.empty());
    EXPECT_TRUE(rep.ok());
    for (const auto& r : rep.rows)
        if (r.suspect) EXPECT_TRUE(r.matches_likely_reading) << r.row;
    // matching by fingerprint gives each row its own entry
    std::set<std::string> used;
    for (const auto& r : rep.rows) EXPECT_TRUE(used.insert(*r.entry).second);
}
