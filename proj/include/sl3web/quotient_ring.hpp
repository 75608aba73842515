#pragma once
// Finite quotients Z/m[x^(+-1)] / ([3]^d - [3]) with x = q^(1/2).
//
// x^(2d) * ([3]^d - [3]) is monic of degree 4d with constant term 1, so the
// quotient is free over Z/m on the 4d monomials x^k, k in [-2d, 2d-1]. A
// residue stores exactly those coefficients, each in [0, m).

#include "sl3web/qlaurent.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl3web {

struct QuotientRing {
    int modulus = 2;  // m
    int degree = 2;   // d in [3]^d - [3]

    int window() const { return 4 * degree; }
    int lowest() const { return -2 * degree; }
    friend bool operator==(const QuotientRing&, const QuotientRing&) = default;
};

namespace detail {

inline void check_ring(const QuotientRing& r) {
    if (r.degree < 2) throw std::invalid_argument("quotient ring: d must be >= 2");
    if (r.modulus < 2) throw std::invalid_argument("quotient ring: modulus must be >= 2");
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Coefficients of [3]^d - [3] mod m, indexed by half-exponent + 2d.
inline const std::vector<std::int64_t>& generator_coeffs(const QuotientRing& r) {
    thread_local std::map<std::pair<int, int>, std::vector<std::int64_t>> cache;
    auto key = std::make_pair(r.modulus, r.degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    HalfLaurent g = pow(qint(3), static_cast<unsigned>(r.degree)) - qint(3);
    std::vector<std::int64_t> out(4 * r.degree + 1, 0);
    for (const auto& [k, c] : g.terms()) {
        BigInt m = c % r.modulus;
        if (m < 0) m += r.modulus;
        out[k + 2 * r.degree] = m.convert_to<std::int64_t>();
    }
    return cache.emplace(key, std::move(out)).first->second;
}

// Reduces a dense coefficient vector covering half-exponents [lo, lo+size)
// into the canonical window. Values must already lie in [0, m).
inline std::vector<int> fold_into_window(std::vector<std::int64_t> v, int lo, const QuotientRing& r) {
    const int d = r.degree;
    const std::int64_t m = r.modulus;
    const int wlo = -2 * d, whi = 2 * d - 1;
    int hi = lo + static_cast<int>(v.size()) - 1;
    // Widen so the window is covered.
    if (lo > wlo) {
        v.insert(v.begin(), static_cast<std::size_t>(lo - wlo), 0);
        lo = wlo;
    }
    if (hi < whi) {
        v.resize(v.size() + static_cast<std::size_t>(whi - hi), 0);
        hi = whi;
    }
    const auto& g = generator_coeffs(r);
    auto at = [&](int k) -> std::int64_t& { return v[static_cast<std::size_t>(k - lo)]; };
    // Top term of G sits at 2d; eliminating k >= 2d touches [k-4d, k].
    for (int k = hi; k >= 2 * d; --k) {
        std::int64_t c = at(k);
        if (c == 0) continue;
        int shift = k - 2 * d;
        for (int j = 0; j <= 4 * d; ++j) {
            if (g[j] == 0) continue;
            std::int64_t& t = at(j - 2 * d + shift);
            t = mod_floor(t - c * g[j], m);
        }
    }
    // Bottom term sits at -2d; eliminating k < -2d touches [k, k+4d].
    for (int k = lo; k < wlo; ++k) {
        std::int64_t c = at(k);
        if (c == 0) continue;
        int shift = k + 2 * d;
        for (int j = 0; j <= 4 * d; ++j) {
            if (g[j] == 0) continue;
            std::int64_t& t = at(j - 2 * d + shift);
            t = mod_floor(t - c * g[j], m);
        }
    }
    std::vector<int> out(4 * d);
    for (int k = wlo; k <= whi; ++k) out[k - wlo] = static_cast<int>(at(k));
    return out;
}

}  // namespace detail

/// Canonical representative of a class in Z/m[x^(+-1)] / ([3]^d - [3]).
class IdealResidue {
public:
    IdealResidue() = default;
    explicit IdealResidue(QuotientRing ring) : ring_(ring), coeffs_(ring.window(), 0) {}

    /// Takes ownership of already-canonical coefficients (window order).
    IdealResidue(QuotientRing ring, std::vector<int> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != ring.window())
            throw std::invalid_argument("IdealResidue: wrong coefficient count");
        for (int c : coeffs_)
            if (c < 0 || c >= ring.modulus) throw std::invalid_argument("IdealResidue: coefficient out of range");
    }

    static IdealResidue one(QuotientRing ring) {
        IdealResidue r(ring);
        r.coeffs_[static_cast<std::size_t>(-ring.lowest())] = 1 % ring.modulus;
        return r;
    }

    const QuotientRing& ring() const { return ring_; }
    const std::vector<int>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k for k in the window.
    int at(int half_exp) const { return coeffs_.at(static_cast<std::size_t>(half_exp - ring_.lowest())); }
    bool is_zero() const {
        for (int c : coeffs_)
            if (c) return false;
        return true;
    }

    /// The canonical representative as an integer Laurent polynomial.
    HalfLaurent lift() const {
        HalfLaurent p;
        for (int i = 0; i < ring_.window(); ++i) p.add_term(ring_.lowest() + i, coeffs_[i]);
        return p;
    }

    friend bool operator==(const IdealResidue& a, const IdealResidue& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IdealResidue& a, const IdealResidue& b) { return !(a == b); }

    friend IdealResidue operator+(const IdealResidue& a, const IdealResidue& b) {
        same_ring(a, b);
        IdealResidue r(a.ring_);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] = (a.coeffs_[i] + b.coeffs_[i]) % a.ring_.modulus;
        return r;
    }

    friend IdealResidue operator*(const IdealResidue& a, const IdealResidue& b) {
        same_ring(a, b);
        const int w = a.ring_.window();
        const std::int64_t m = a.ring_.modulus;
        std::vector<std::int64_t> prod(2 * w - 1, 0);
        for (int i = 0; i < w; ++i) {
            if (!a.coeffs_[i]) continue;
            for (int j = 0; j < w; ++j) prod[i + j] = (prod[i + j] + std::int64_t(a.coeffs_[i]) * b.coeffs_[j]) % m;
        }
        return IdealResidue(a.ring_, detail::fold_into_window(std::move(prod), 2 * a.ring_.lowest(), a.ring_));
    }

    friend IdealResidue pow(const IdealResidue& base, unsigned e) {
        IdealResidue result = one(base.ring_);
        IdealResidue b = base;
        while (e) {
            if (e & 1u) result = result * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return result;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coeffs_[i]);
        }
        return s + "]";
    }

private:
    static void same_ring(const IdealResidue& a, const IdealResidue& b) {
        if (!(a.ring_ == b.ring_)) throw std::invalid_argument("IdealResidue: ring mismatch");
    }

    QuotientRing ring_;
    std::vector<int> coeffs_;
};

/// Reduction into Z/m[x^(+-1)] / ([3]^d - [3]).
inline IdealResidue reduce_in(const HalfLaurent& p, const QuotientRing& ring) {
    detail::check_ring(ring);
    if (p.is_zero()) return IdealResidue(ring);
    const int lo = p.min_half_exp();
    std::vector<std::int64_t> v(static_cast<std::size_t>(p.max_half_exp() - lo + 1), 0);
    for (const auto& [k, c] : p.terms()) {
        BigInt r = c % ring.modulus;
        if (r < 0) r += ring.modulus;
        v[static_cast<std::size_t>(k - lo)] = r.convert_to<std::int64_t>();
    }
    return IdealResidue(ring, detail::fold_into_window(std::move(v), lo, ring));
}

/// Reduction modulo the ideal I_d = (d, [3]^d - [3]).
inline IdealResidue mod_reduce(const HalfLaurent& p, int d) {
    if (d < 2) throw std::invalid_argument("mod_reduce: d must be >= 2");
    return reduce_in(p, QuotientRing{d, d});
}

inline bool congruent_mod(const HalfLaurent& p, const HalfLaurent& r, int d) {
    return mod_reduce(p, d) == mod_reduce(r, d);
}

}  // namespace sl3web
