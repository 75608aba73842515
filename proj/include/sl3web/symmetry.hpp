#pragma once
// Congruence test P_G == P_Q^d mod (d, [3]^d - [3]) and d-th root search in
// the quotient ring R_d = Z/d[x^(+-1)] / ([3]^d - [3]).
//
// With H = x^(2d) ([3]^d - [3]) (monic, constant term 1) R_d is
// Z/d[x]/(H), and alpha -> A = x^(2d) alpha identifies window coefficient
// vectors with polynomials of degree < 4d. alpha^d = t becomes
// A^d = x^(2d(d-1)) T where T is the window vector of t.
//
// For squarefree d the search factors H over each GF(p), p | d, searches
// every local ring GF(p)[x]/(f^e) by brute force and glues roots with CRT.
// Otherwise (or on request) it enumerates the whole ring.

#include "sl3web/canonical.hpp"
#include "sl3web/parallel.hpp"
#include "sl3web/quotient_ring.hpp"
#include "sl3web/reducer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace sl3web {

inline bool check_quotient(const HalfLaurent& pG, const HalfLaurent& pQ, int d) {
    if (d < 2) throw std::invalid_argument("check_quotient: d must be >= 2");
    return congruent_mod(pG, pow(pQ, static_cast<unsigned>(d)), d);
}

namespace gfp {

// Dense polynomials over GF(p), low degree first, no trailing zeros.
using Poly = std::vector<int>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline int inv_mod(int a, int p) {
    int r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<int>(std::int64_t(r) * b % p);
        b = static_cast<int>(std::int64_t(b) * b % p);
        e >>= 1;
    }
    return r;
}

inline Poly add(const Poly& a, const Poly& b, int p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, int p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] + p) % p;
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += std::int64_t(a[i]) * b[j];
    Poly out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = static_cast<int>(r[i] % p);
    trim(out);
    return out;
}

// a = q*b + r
inline void divmod(const Poly& a, const Poly& b, int p, Poly& q, Poly& r) {
    if (b.empty()) throw std::domain_error("gfp::divmod: division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    int inv = inv_mod(b.back(), p);
    for (int i = deg(r); i >= deg(b); --i) {
        int c = static_cast<int>(std::int64_t(r[i]) * inv % p);
        if (!c) continue;
        int s = i - deg(b);
        q[s] = c;
        for (int j = 0; j <= deg(b); ++j) r[s + j] = static_cast<int>(((r[s + j] - std::int64_t(c) * b[j]) % p + p) % p);
    }
    trim(q);
    trim(r);
}

inline Poly mod(const Poly& a, const Poly& m, int p) {
    Poly q, r;
    divmod(a, m, p, q, r);
    return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p) { return mod(mul(a, b, p), m, p); }

inline Poly powmod(Poly b, std::uint64_t e, const Poly& m, int p) {
    Poly r = mod(Poly{1}, m, p);
    b = mod(b, m, p);
    while (e) {
        if (e & 1) r = mulmod(r, b, m, p);
        e >>= 1;
        if (e) b = mulmod(b, b, m, p);
    }
    return r;
}

// Inverse of a modulo m (gcd must be 1).
inline Poly inverse(const Poly& a, const Poly& m, int p) {
    Poly r0 = m, r1 = mod(a, m, p), s0{}, s1{1};
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, p, q, r);
        Poly s = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (deg(r0) != 0) throw std::domain_error("gfp::inverse: not invertible");
    int c = inv_mod(r0[0], p);
    for (int& x : s0) x = static_cast<int>(std::int64_t(x) * c % p);
    return mod(s0, m, p);
}

// Polynomial from its base-p digit index (degree < len).
inline Poly from_index(std::uint64_t idx, int len, int p) {
    Poly a(len, 0);
    for (int i = 0; i < len; ++i) {
        a[i] = static_cast<int>(idx % p);
        idx /= p;
    }
    trim(a);
    return a;
}

inline std::string to_string(const Poly& a) {
    if (a.empty()) return "0";
    std::string s;
    for (int i = deg(a); i >= 0; --i) {
        if (!a[i]) continue;
        if (!s.empty()) s += "+";
        if (a[i] != 1 || i == 0) s += std::to_string(a[i]);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

struct Factor {
    Poly f;  // monic irreducible
    int e;
};

// Trial division by monic polynomials of increasing degree. Returns
// nullopt if a candidate count would pass budget.
inline std::optional<std::vector<Factor>> factor(Poly h, int p, std::uint64_t budget, std::uint64_t& spent) {
    std::vector<Factor> out;
    int inv = inv_mod(h.back(), p);
    for (int& x : h) x = static_cast<int>(std::int64_t(x) * inv % p);
    for (int k = 1; 2 * k <= deg(h); ++k) {
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count && 2 * k <= deg(h); ++idx) {
            if (++spent > budget) return std::nullopt;
            Poly f = from_index(idx, k, p);
            f.resize(k + 1, 0);
            f[k] = 1;
            int e = 0;
            while (true) {
                Poly q, r;
                divmod(h, f, p, q, r);
                if (!r.empty()) break;
                h = std::move(q);
                ++e;
            }
            if (e) out.push_back({f, e});
        }
    }
    if (deg(h) > 0) {
        bool merged = false;
        for (auto& fe : out)
            if (fe.f == h) {
                ++fe.e;
                merged = true;
            }
        if (!merged) out.push_back({h, 1});
    }
    return out;
}

}  // namespace gfp

enum class RootOutcome { Found, NotFound, BudgetExhausted };

inline const char* to_string(RootOutcome o) {
    switch (o) {
        case RootOutcome::Found: return "Found";
        case RootOutcome::NotFound: return "NotFound";
        case RootOutcome::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

/// One local ring GF(p)[x]/(f^e) of the factor search.
struct ComponentReport {
    int prime = 0;
    std::string factor;
    int multiplicity = 1;
    std::uint64_t size = 0;  // p^(deg f * e)
    bool searched = false;
    bool has_root = false;
};

struct RootSearchResult {
    RootOutcome outcome = RootOutcome::NotFound;
    std::optional<IdealResidue> witness;
    std::uint64_t searched = 0;
    std::string method;
    std::vector<ComponentReport> components;
    std::string note;
};

enum class RootMethod { Auto, Factor, Exhaustive };

struct RootSearchOptions {
    std::uint64_t budget = std::uint64_t(1) << 26;
    unsigned threads = 1;
    RootMethod method = RootMethod::Auto;
};

inline bool verify_root(const IdealResidue& witness, const IdealResidue& target, int d) {
    if (!(witness.ring() == target.ring())) return false;
    return pow(witness, static_cast<unsigned>(d)) == target;
}

namespace detail {

inline std::vector<std::pair<int, int>> factor_int(int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline gfp::Poly shifted_generator(int p, int d) {
    const auto& g = generator_coeffs(QuotientRing{p, d});
    gfp::Poly h(g.begin(), g.end());
    gfp::trim(h);
    return h;
}

inline bool pow_overflows(std::uint64_t base, int e, std::uint64_t cap, std::uint64_t& out) {
    out = 1;
    for (int i = 0; i < e; ++i) {
        if (out > cap / base) return true;
        out *= base;
    }
    return false;
}

// Root of A^d = rhs in GF(p)[x]/(m), least by base-p index; counts candidates.
inline std::optional<gfp::Poly> local_root(const gfp::Poly& rhs, int d, const gfp::Poly& m, int p, std::uint64_t size,
                                           unsigned threads, std::uint64_t& searched) {
    const int len = gfp::deg(m);
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(size, 64));
    const std::uint64_t per = (size + chunks - 1) / chunks;
    auto found = parallel_map(chunks, threads, [&](std::size_t c) -> std::optional<std::uint64_t> {
        std::uint64_t lo = c * per, hi = std::min(size, lo + per);
        for (std::uint64_t idx = lo; idx < hi; ++idx)
            if (gfp::powmod(gfp::from_index(idx, len, p), static_cast<std::uint64_t>(d), m, p) == rhs) return idx;
        return std::nullopt;
    });
    searched += size;
    for (auto& f : found)
        if (f) return gfp::from_index(*f, len, p);
    return std::nullopt;
}

// Bit-packed GF(2)[x]/(h) arithmetic, deg h <= 63.
struct Gf2Ring {
    std::uint64_t h;  // including the top bit
    int n;            // degree of h

    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = 0;
        const std::uint64_t top = std::uint64_t(1) << n;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & top) a ^= h;
        }
        return r;
    }
    std::uint64_t pow(std::uint64_t a, unsigned e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            e >>= 1;
            if (e) a = mulmod(a, a);
        }
        return r;
    }
};

}  // namespace detail

/// Candidate count of a full enumeration of R_d, or nullopt if it exceeds
/// 2^63.
inline std::optional<std::uint64_t> ring_size(int modulus, int d) {
    std::uint64_t s = 0;
    if (detail::pow_overflows(static_cast<std::uint64_t>(modulus), 4 * d, std::uint64_t(1) << 63, s)) return std::nullopt;
    return s;
}

/// Brute force over every element of Z/m[x^(+-1)]/([3]^d - [3]); the least
/// root by window coefficient index (base m, low exponent first).
inline RootSearchResult exhaustive_root_search(const IdealResidue& target, int d, const RootSearchOptions& opts = {}) {
    const QuotientRing ring = target.ring();
    RootSearchResult res;
    res.method = "exhaustive";
    auto size = ring_size(ring.modulus, ring.degree);
    if (!size || *size > opts.budget) {
        res.outcome = RootOutcome::BudgetExhausted;
        res.note = "ring has " + (size ? std::to_string(*size) : std::string("more than 2^63")) + " elements, budget " +
                   std::to_string(opts.budget);
        return res;
    }
    const int w = ring.window();
    // GF(2) fast path in the x^(2d)-shifted polynomial picture.
    if (ring.modulus == 2 && w <= 63) {
        gfp::Poly hp = detail::shifted_generator(2, ring.degree);
        detail::Gf2Ring gr{0, gfp::deg(hp)};
        for (int i = 0; i <= gr.n; ++i)
            if (hp[i]) gr.h |= std::uint64_t(1) << i;
        std::uint64_t tbits = 0;
        for (int i = 0; i < w; ++i)
            if (target.coeffs()[i]) tbits |= std::uint64_t(1) << i;
        const std::uint64_t rhs = gr.mulmod(gr.pow(2, static_cast<unsigned>(2 * ring.degree * (d - 1))), tbits);
        const std::uint64_t chunks = 256, per = (*size + chunks - 1) / chunks;
        auto found = parallel_map(chunks, opts.threads, [&](std::size_t c) -> std::optional<std::uint64_t> {
            std::uint64_t lo = c * per, hi = std::min(*size, lo + per);
            for (std::uint64_t a = lo; a < hi; ++a)
                if (gr.pow(a, static_cast<unsigned>(d)) == rhs) return a;
            return std::nullopt;
        });
        res.searched = *size;
        for (auto& f : found) {
            if (!f) continue;
            std::vector<int> cs(w);
            for (int i = 0; i < w; ++i) cs[i] = static_cast<int>((*f >> i) & 1);
            IdealResidue wit(ring, cs);
            if (!verify_root(wit, target, d)) throw std::logic_error("exhaustive search produced an unverified root");
            res.outcome = RootOutcome::Found;
            res.witness = wit;
            return res;
        }
        res.outcome = RootOutcome::NotFound;
        return res;
    }
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(*size, 256));
    const std::uint64_t per = (*size + chunks - 1) / chunks;
    auto found = parallel_map(chunks, opts.threads, [&](std::size_t c) -> std::optional<std::vector<int>> {
        std::uint64_t lo = c * per, hi = std::min(*size, lo + per);
        std::vector<int> cs(w);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::uint64_t t = idx;
            for (int i = 0; i < w; ++i) {
                cs[i] = static_cast<int>(t % ring.modulus);
                t /= ring.modulus;
            }
            IdealResidue a(ring, cs);
            if (pow(a, static_cast<unsigned>(d)) == target) return cs;
        }
        return std::nullopt;
    });
    res.searched = *size;
    for (auto& f : found) {
        if (!f) continue;
        res.outcome = RootOutcome::Found;
        res.witness = IdealResidue(ring, *f);
        return res;
    }
    res.outcome = RootOutcome::NotFound;
    return res;
}

/// Local-ring search for squarefree d; see the header comment.
inline RootSearchResult factor_root_search(const IdealResidue& target, int d, const RootSearchOptions& opts = {}) {
    const QuotientRing ring = target.ring();
    RootSearchResult res;
    res.method = "factor";
    auto primes = detail::factor_int(ring.modulus);
    for (auto [p, e] : primes)
        if (e > 1) throw std::invalid_argument("factor_root_search: modulus must be squarefree");
    const int w = ring.window();
    std::vector<std::pair<int, gfp::Poly>> per_prime_roots;  // (p, A mod H_p)
    bool all_found = true;
    for (auto [p, e1] : primes) {
        (void)e1;
        gfp::Poly h = detail::shifted_generator(p, ring.degree);
        auto facs = gfp::factor(h, p, opts.budget, res.searched);
        if (!facs) {
            res.outcome = RootOutcome::BudgetExhausted;
            res.note = "factoring over GF(" + std::to_string(p) + ") exceeded the budget";
            return res;
        }
        gfp::Poly T(target.coeffs().begin(), target.coeffs().end());
        for (int& c : T) c %= p;
        gfp::trim(T);
        gfp::Poly xs(2 * ring.degree * (d - 1) + 1, 0);
        xs.back() = 1;
        gfp::Poly rhs_full = gfp::mulmod(xs, T, h, p);
        gfp::Poly glued;
        bool prime_ok = true;
        for (const auto& fe : *facs) {
            gfp::Poly m{1};
            for (int i = 0; i < fe.e; ++i) m = gfp::mul(m, fe.f, p);
            ComponentReport cr;
            cr.prime = p;
            cr.factor = gfp::to_string(fe.f);
            cr.multiplicity = fe.e;
            std::uint64_t size = 0;
            if (detail::pow_overflows(static_cast<std::uint64_t>(p), gfp::deg(m), opts.budget, size) ||
                res.searched + size > opts.budget) {
                res.components.push_back(cr);
                res.outcome = RootOutcome::BudgetExhausted;
                res.note = "local ring for " + cr.factor + " over GF(" + std::to_string(p) + ") exceeds the budget";
                return res;
            }
            cr.size = size;
            cr.searched = true;
            auto root = detail::local_root(gfp::mod(rhs_full, m, p), d, m, p, size, opts.threads, res.searched);
            cr.has_root = root.has_value();
            res.components.push_back(cr);
            if (!root) {
                prime_ok = false;
                all_found = false;
                continue;
            }
            // Idempotent for this factor: M * (M^-1 mod m), M = h / m.
            gfp::Poly M, r;
            gfp::divmod(h, m, p, M, r);
            gfp::Poly idem = gfp::mul(M, gfp::inverse(M, m, p), p);
            glued = gfp::add(glued, gfp::mulmod(*root, idem, h, p), p);
        }
        if (prime_ok) per_prime_roots.emplace_back(p, glued);
    }
    if (!all_found) {
        res.outcome = RootOutcome::NotFound;
        return res;
    }
    // Integer CRT on coefficients.
    std::vector<int> cs(w, 0);
    const std::int64_t m = ring.modulus;
    for (int i = 0; i < w; ++i) {
        std::int64_t x = 0;
        for (const auto& [p, A] : per_prime_roots) {
            std::int64_t ai = i < static_cast<int>(A.size()) ? A[i] : 0;
            std::int64_t Mp = m / p;
            std::int64_t inv = gfp::inv_mod(static_cast<int>(Mp % p), p);
            x = (x + ai * Mp % m * inv) % m;
        }
        cs[i] = static_cast<int>(x);
    }
    IdealResidue wit(ring, cs);
    if (!verify_root(wit, target, d)) throw std::logic_error("glued root failed verification");
    res.outcome = RootOutcome::Found;
    res.witness = wit;
    return res;
}

inline bool is_squarefree(int n) {
    for (auto [p, e] : detail::factor_int(n))
        if (e > 1) return false;
    return true;
}

/// Is there alpha with alpha^d == p modulo (d, [3]^d - [3])?
inline RootSearchResult dth_root_search(const HalfLaurent& p, int d, const RootSearchOptions& opts = {}) {
    if (d < 2) throw std::invalid_argument("dth_root_search: d must be >= 2");
    IdealResidue target = mod_reduce(p, d);
    RootMethod m = opts.method;
    if (m == RootMethod::Auto) m = is_squarefree(d) ? RootMethod::Factor : RootMethod::Exhaustive;
    return m == RootMethod::Factor ? factor_root_search(target, d, opts) : exhaustive_root_search(target, d, opts);
}

struct QuotientCheck {
    int d = 0;
    HalfLaurent quotient_invariant;
    std::optional<IdealResidue> lhs, rhs;  // residues of P_G and P_Q^d
    bool congruent = true;
    bool skipped = false;  // d = 1
};

struct SymmetryReport {
    HalfLaurent invariant;
    long long automorphisms = 0;             // orientation preserving
    long long automorphisms_with_reflections = 0;
    std::vector<QuotientCheck> checks;
};

/// Runs check_quotient for each (quotient web, d). A passing congruence is
/// evidence compatible with a symmetry, not a proof of one.
inline SymmetryReport symmetry_report(const Web& w, const std::vector<std::pair<Web, int>>& candidates) {
    SymmetryReport rep;
    rep.invariant = invariant(w);
    int nc = 0;
    w.map().dart_components(&nc);
    if (nc == 1 && w.circles() == 0) {
        rep.automorphisms = automorphism_count(w, false);
        rep.automorphisms_with_reflections = automorphism_count(w, true);
    }
    for (const auto& [q, d] : candidates) {
        QuotientCheck qc;
        qc.d = d;
        qc.quotient_invariant = invariant(q);
        if (d < 1) throw std::invalid_argument("symmetry_report: d must be >= 1");
        if (d == 1) {
            qc.skipped = true;
            rep.checks.push_back(qc);
            continue;
        }
        qc.lhs = mod_reduce(rep.invariant, d);
        qc.rhs = mod_reduce(pow(qc.quotient_invariant, static_cast<unsigned>(d)), d);
        qc.congruent = *qc.lhs == *qc.rhs;
        rep.checks.push_back(qc);
    }
    return rep;
}

}  // namespace sl3web
