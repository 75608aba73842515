#pragma once
// Laurent polynomials in x = q^(1/2) with arbitrary-precision integer
// coefficients, quantum integers, and the text forms used for fixtures.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sl3web {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[q^(1/2), q^(-1/2)]. The key k of a term stands for q^(k/2).
/// Zero coefficients are never stored, so the zero polynomial is empty.
class HalfLaurent {
public:
    using Terms = std::map<int, BigInt>;

    HalfLaurent() = default;
    HalfLaurent(long long c) { add_term(0, BigInt(c)); }  // NOLINT: implicit scalar
    HalfLaurent(std::initializer_list<std::pair<const int, BigInt>> init) {
        for (const auto& [k, c] : init) add_term(k, c);
    }

    static HalfLaurent monomial(int half_exp, BigInt c = 1) {
        HalfLaurent p;
        p.add_term(half_exp, std::move(c));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    BigInt coeff(int half_exp) const {
        auto it = terms_.find(half_exp);
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    int min_half_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_half_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    void add_term(int half_exp, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(half_exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    HalfLaurent& operator+=(const HalfLaurent& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    HalfLaurent& operator-=(const HalfLaurent& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    HalfLaurent& operator*=(const HalfLaurent& o) {
        *this = *this * o;
        return *this;
    }

    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
    friend HalfLaurent operator-(const HalfLaurent& a) {
        HalfLaurent r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

    /// Coefficients symmetric under q -> 1/q.
    bool is_palindromic() const {
        for (const auto& [k, c] : terms_)
            if (coeff(-k) != c) return false;
        return true;
    }

private:
    Terms terms_;
};

inline HalfLaurent pow(const HalfLaurent& base, unsigned e) {
    HalfLaurent result(1);
    HalfLaurent b = base;
    while (e) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return result;
}

/// Quantum integer [n] = sum_{j=0}^{n-1} q^((n-1-2j)/2).
inline HalfLaurent qint(int n) {
    if (n < 0) throw std::invalid_argument("qint: negative argument");
    HalfLaurent p;
    for (int j = 0; j < n; ++j) p.add_term(n - 1 - 2 * j, 1);
    return p;
}

/// Specialization q = 1.
inline BigInt eval_at_one(const HalfLaurent& p) {
    BigInt s = 0;
    for (const auto& [k, c] : p.terms()) s += c;
    return s;
}

namespace detail {

inline std::string q_power(int k) {
    if (k == 0) return "";
    if (k % 2 == 0) {
        int e = k / 2;
        if (e == 1) return "q";
        return "q^" + std::to_string(e);
    }
    return "q^(" + std::to_string(k) + "/2)";
}

}  // namespace detail

/// Terms by descending half-exponent, e.g. "2q^2+6q+8+6q^-1+2q^-2".
inline std::string to_pretty(const HalfLaurent& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (c < 0)
            out += "-";
        else if (!first)
            out += "+";
        std::string qp = detail::q_power(k);
        if (qp.empty() || mag != 1) out += mag.str();
        out += qp;
        first = false;
    }
    return out;
}

/// Thrown by parse_qexpr; position is a 0-based byte offset into the input.
class QExprParseError : public std::runtime_error {
public:
    QExprParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

// expr   := [sign] term (sign term)*
// term   := [uint] ['*'] factor*        (at least one of the two)
// factor := '[' uint ']' ['^' uint] | 'q' ['^' qexp]
// qexp   := ['-'] uint | '(' ['-'] uint ['/' '2'] ')'
class QExprParser {
public:
    explicit QExprParser(std::string_view s) : s_(s) {}

    HalfLaurent parse() {
        skip_ws();
        if (at_end()) fail("empty expression");
        HalfLaurent total;
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            HalfLaurent t = term();
            total += sign < 0 ? -t : t;
            first = false;
        }
        return total;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw QExprParseError(msg, pos_); }

    BigInt uint_lit() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    int small_uint() {
        std::size_t at = pos_;
        BigInt v = uint_lit();
        if (v > 1000000) throw QExprParseError("exponent too large", at);
        return v.convert_to<int>();
    }

    HalfLaurent term() {
        skip_ws();
        HalfLaurent t(1);
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t = HalfLaurent::monomial(0, uint_lit());
            any = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != '[' && peek() != 'q') fail("expected factor after '*'");
            }
        }
        while (true) {
            skip_ws();
            if (peek() == '[') {
                ++pos_;
                int n = small_uint();
                skip_ws();
                if (peek() != ']') fail("expected ']'");
                ++pos_;
                unsigned e = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    e = static_cast<unsigned>(small_uint());
                }
                t *= pow(qint(n), e);
                any = true;
            } else if (peek() == 'q') {
                ++pos_;
                int k = 2;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    k = q_exponent();
                }
                t *= HalfLaurent::monomial(k);
                any = true;
            } else {
                break;
            }
        }
        if (!any) fail("expected term");
        return t;
    }

    // Returns a half-exponent.
    int q_exponent() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            int sign = 1;
            if (peek() == '-') {
                sign = -1;
                ++pos_;
            }
            int num = small_uint();
            skip_ws();
            int half;
            if (peek() == '/') {
                ++pos_;
                std::size_t at = pos_;
                if (small_uint() != 2) throw QExprParseError("only halves are supported", at);
                half = sign * num;
            } else {
                half = 2 * sign * num;
            }
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return half;
        }
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        }
        return 2 * sign * small_uint();
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses sums like "[2]^4[3]+2[2]^2[3]" or "2q^2+6q+8+6q^-1+2q^-2".
inline HalfLaurent parse_qexpr(std::string_view text) { return detail::QExprParser(text).parse(); }

inline std::ostream& operator<<(std::ostream& os, const HalfLaurent& p) { return os << to_pretty(p); }

}  // namespace sl3web
