#include "helpers.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace sl3web;
using testutil::random_poly;

namespace {

using Naive = std::map<int, long long>;

Naive naive(const HalfLaurent& p) {
    Naive n;
    for (const auto& [k, c] : p.terms()) n[k] = static_cast<long long>(c);
    return n;
}

Naive naive_mul(const Naive& a, const Naive& b) {
    Naive r;
    for (auto [i, x] : a)
        for (auto [j, y] : b) r[i + j] += x * y;
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

// [n] as the sum q^((n-1)/2) + q^((n-3)/2) + ... + q^(-(n-1)/2).
HalfLaurent qint_sum(int n) {
    HalfLaurent p;
    for (int j = 0; j < n; ++j) p.add_term(n - 1 - 2 * j, 1);
    return p;
}

}  // namespace

TEST(HalfLaurent, QuantumIntegersMatchSumFormula) {
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(qint(n), qint_sum(n)) << n;
    EXPECT_THROW(qint(-3), std::invalid_argument);
    EXPECT_EQ(to_pretty(qint(3)), "q+1+q^-1");
    EXPECT_EQ(to_pretty(qint(2)), "q^(1/2)+q^(-1/2)");
}

TEST(HalfLaurent, ProductMatchesNaiveConvolution) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        auto a = random_poly(rng), b = random_poly(rng);
        EXPECT_EQ(naive(a * b), naive_mul(naive(a), naive(b)));
    }
}

TEST(HalfLaurent, RingAxioms) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, HalfLaurent{});
        EXPECT_EQ(a * HalfLaurent(1), a);
    }
}

TEST(HalfLaurent, EvaluationAtOneIsAHomomorphism) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        auto a = random_poly(rng), b = random_poly(rng);
        EXPECT_EQ(eval_at_one(a * b), eval_at_one(a) * eval_at_one(b));
    }
    for (int n = 1; n < 9; ++n) EXPECT_EQ(eval_at_one(qint(n)), n);
}

TEST(HalfLaurent, BigCoefficientsDoNotOverflow) {
    auto p = pow(qint(3), 60);
    EXPECT_EQ(eval_at_one(p), pow(BigInt(3), 60));
}

TEST(Parser, TableExpressions) {
    auto two = qint(2), three = qint(3);
    EXPECT_EQ(parse_qexpr("2[2]^2[3]"), HalfLaurent(2) * two * two * three);
    EXPECT_EQ(to_pretty(parse_qexpr("2[2]^2[3]")), "2q^2+6q+8+6q^-1+2q^-2");
    EXPECT_EQ(parse_qexpr("-[2]^5[3]-6[2]^3[3]"), -pow(two, 5) * three - HalfLaurent(6) * pow(two, 3) * three);
    EXPECT_EQ(parse_qexpr("-[2][3]"), -two * three);
    EXPECT_EQ(parse_qexpr("7[2]^4[3] + 2[2]^2[3]"), parse_qexpr("7[2]^4[3]+2[2]^2[3]"));
    EXPECT_EQ(parse_qexpr("q+1+q^-1"), three);
    EXPECT_EQ(parse_qexpr("q^(1/2)+q^(-1/2)"), two);
    EXPECT_EQ(parse_qexpr("0"), HalfLaurent{});
}

TEST(Parser, PrettyRoundTrip) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        auto a = random_poly(rng, 9, 1000);
        EXPECT_EQ(parse_qexpr(to_pretty(a)), a) << to_pretty(a);
    }
}

TEST(Parser, RejectsMalformedInput) {
    for (const char* bad : {"", "[", "[2", "2[]", "q^", "q^(1/3)", "[2]^", "2++3", "x", "[2]]"})
        EXPECT_THROW(parse_qexpr(bad), QExprParseError) << bad;
}

// ---- quotient ring ----

namespace {

// Remainder of a by g over GF(p); polynomials as ascending coefficient vectors.
std::vector<long long> poly_rem(std::vector<long long> a, const std::vector<long long>& g, long long p) {
    auto norm = [p](long long x) { return ((x % p) + p) % p; };
    for (auto& x : a) x = norm(x);
    long long lead = norm(g.back()), inv = 1;
    for (long long e = p - 2, b = lead; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) inv = inv * b % p;
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(g.size()) - 1; --i) {
        long long f = a[i] * inv % p;
        if (!f) continue;
        int s = i - static_cast<int>(g.size()) + 1;
        for (std::size_t j = 0; j < g.size(); ++j) a[s + j] = norm(a[s + j] - f * g[j]);
    }
    a.resize(std::min(a.size(), g.size() - 1));
    return a;
}

// Is x in the ideal (p, [3]^p - [3]) of Z[q^(+-1/2)], p prime?
bool in_ideal(const HalfLaurent& x, int p) {
    if (x.is_zero()) return true;
    HalfLaurent g = pow(qint(3), p) - qint(3);
    auto to_vec = [p](const HalfLaurent& h, int shift) {
        std::vector<long long> v(h.max_half_exp() + shift + 1, 0);
        for (const auto& [k, c] : h.terms()) v[k + shift] = static_cast<long long>(BigInt(c % p));
        return v;
    };
    auto gv = to_vec(g, -g.min_half_exp());
    auto r = poly_rem(to_vec(x, -x.min_half_exp()), gv, p);
    return std::all_of(r.begin(), r.end(), [](long long c) { return c == 0; });
}

}  // namespace

TEST(QuotientRing, ResidueDiffersFromInputByIdealElement) {
    std::mt19937_64 rng(19);
    for (int d : {2, 3, 5, 7}) {
        for (int i = 0; i < 60; ++i) {
            auto p = random_poly(rng, 30, 50);
            auto r = mod_reduce(p, d);
            EXPECT_TRUE(in_ideal(r.lift() - p, d)) << d << " " << to_pretty(p);
        }
    }
}

TEST(QuotientRing, IdealGeneratorsReduceToZero) {
    for (int d = 2; d <= 8; ++d) {
        EXPECT_TRUE(mod_reduce(pow(qint(3), d) - qint(3), d).is_zero()) << d;
        EXPECT_TRUE(mod_reduce(HalfLaurent(d), d).is_zero()) << d;
        EXPECT_FALSE(mod_reduce(HalfLaurent(1), d).is_zero()) << d;
    }
}

TEST(QuotientRing, ReductionIsAHomomorphismAndIdempotent) {
    std::mt19937_64 rng(23);
    for (int d : {2, 3, 4, 6}) {
        for (int i = 0; i < 60; ++i) {
            auto a = random_poly(rng, 20, 40), b = random_poly(rng, 20, 40);
            auto ra = mod_reduce(a, d), rb = mod_reduce(b, d);
            EXPECT_EQ(mod_reduce(a * b, d), ra * rb);
            EXPECT_EQ(mod_reduce(a + b, d), ra + rb);
            EXPECT_EQ(mod_reduce(ra.lift(), d), ra);
            EXPECT_EQ(mod_reduce(pow(a, 3), d), pow(ra, 3));
        }
    }
}

TEST(QuotientRing, CongruenceIgnoresIdealShifts) {
    std::mt19937_64 rng(29);
    for (int d : {2, 3, 6}) {
        HalfLaurent g = pow(qint(3), d) - qint(3);
        for (int i = 0; i < 40; ++i) {
            auto a = random_poly(rng), m = random_poly(rng), s = random_poly(rng);
            EXPECT_TRUE(congruent_mod(a, a + g * m + HalfLaurent(d) * s, d));
        }
        EXPECT_FALSE(congruent_mod(HalfLaurent(0), HalfLaurent(1), d));
    }
}

TEST(QuotientRing, ResidueRingAxioms) {
    std::mt19937_64 rng(31);
    for (int d : {2, 3, 6}) {
        for (int i = 0; i < 40; ++i) {
            auto a = mod_reduce(random_poly(rng), d), b = mod_reduce(random_poly(rng), d), c = mod_reduce(random_poly(rng), d);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * IdealResidue::one(a.ring()), a);
        }
    }
}

TEST(QuotientRing, MismatchedRingsAreRejected) {
    auto a = mod_reduce(qint(2), 2), b = mod_reduce(qint(2), 3);
    EXPECT_THROW(a + b, std::invalid_argument);
    EXPECT_THROW(mod_reduce(qint(2), 1), std::invalid_argument);
}
