#pragma once
// Canonical keys, isomorphism and automorphism counts for maps on the sphere.
//
// For a root dart r and a chirality (s = sigma or sigma^-1) darts are labelled
// in BFS discovery order over (alpha, s). The code of (r, s) lists
// label(alpha(d)), label(s(d)) for d in label order; two rooted maps are
// isomorphic iff their codes agree. The key is the minimum over all roots.

#include "sl3web/combmap.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace sl3web {

/// Byte string; equal keys iff isomorphic maps (optionally up to mirror)
/// with the same number of circles.
struct CanonicalKey {
    std::string bytes;
    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) { return a.bytes <=> b.bytes; }
};

namespace detail {

enum class Chirality { Direct, Mirror };

class RootedCoder {
public:
    explicit RootedCoder(const CombMap& m) : m_(m), label_(m.num_darts(), -1) {}

    int s(int d, Chirality c) const { return c == Chirality::Direct ? m_.sigma(d) : m_.sigma_inv(d); }

    // Writes the code of (root, c) over the root's component into out.
    // With bound set, stops as soon as the code exceeds it; returns
    // -1 / 0 / 1 for less / equal / greater than bound (0 if no bound).
    int code(int root, Chirality c, std::vector<int>& out, const std::vector<int>* bound) {
        out.clear();
        order_.clear();
        for (int d : touched_) label_[d] = -1;
        touched_.clear();
        auto visit = [&](int d) {
            if (label_[d] < 0) {
                label_[d] = static_cast<int>(order_.size());
                order_.push_back(d);
                touched_.push_back(d);
            }
            return label_[d];
        };
        visit(root);
        int cmp = 0;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            int d = order_[i];
            int la = visit(m_.alpha(d));
            int ls = visit(s(d, c));
            out.push_back(la);
            out.push_back(ls);
            if (bound && cmp == 0) {
                std::size_t j = out.size() - 2;
                for (std::size_t t = j; t < out.size() && cmp == 0; ++t) {
                    if (t >= bound->size()) cmp = 1;
                    else if (out[t] < (*bound)[t]) cmp = -1;
                    else if (out[t] > (*bound)[t]) cmp = 1;
                }
                if (cmp > 0) return 1;
            }
        }
        if (bound && cmp == 0 && out.size() < bound->size()) cmp = -1;
        return cmp;
    }

private:
    const CombMap& m_;
    std::vector<int> label_, order_, touched_;
};

// Face lengths under phi_c = s o alpha.
inline std::vector<int> face_lengths(const CombMap& m, Chirality c) {
    std::vector<int> len(m.num_darts(), 0);
    for (int d = 0; d < m.num_darts(); ++d) {
        if (len[d]) continue;
        std::vector<int> cyc;
        int e = d;
        do {
            cyc.push_back(e);
            int a = m.alpha(e);
            e = c == Chirality::Direct ? m.sigma(a) : m.sigma_inv(a);
        } while (e != d);
        for (int x : cyc) len[x] = static_cast<int>(cyc.size());
    }
    return len;
}

inline void put_varint(std::string& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

// Minimal code of one connected component given by its darts.
inline std::vector<int> component_code(const CombMap& m, const std::vector<int>& darts, bool reflections) {
    std::vector<Chirality> chis{Chirality::Direct};
    if (reflections) chis.push_back(Chirality::Mirror);
    std::vector<std::vector<int>> flen;
    for (auto c : chis) flen.push_back(face_lengths(m, c));
    // Invariant root signature; only roots with the least one are tried.
    auto sig = [&](int d, std::size_t ci) { return std::make_pair(flen[ci][d], flen[ci][m.alpha(d)]); };
    std::pair<int, int> best_sig{1 << 30, 1 << 30};
    for (int d : darts)
        for (std::size_t ci = 0; ci < chis.size(); ++ci) best_sig = std::min(best_sig, sig(d, ci));
    RootedCoder coder(m);
    std::vector<int> best, cur;
    bool have = false;
    for (int d : darts) {
        for (std::size_t ci = 0; ci < chis.size(); ++ci) {
            if (sig(d, ci) != best_sig) continue;
            int cmp = coder.code(d, chis[ci], cur, have ? &best : nullptr);
            if (!have || cmp < 0) {
                best = cur;
                have = true;
            }
        }
    }
    return best;
}

}  // namespace detail

inline CanonicalKey canonical_key(const CombMap& m, int circles, bool include_reflections) {
    int nc = 0;
    auto comp = m.dart_components(&nc);
    std::vector<std::vector<int>> darts(nc);
    for (int d = 0; d < m.num_darts(); ++d) darts[comp[d]].push_back(d);
    std::vector<std::vector<int>> codes;
    codes.reserve(nc);
    for (const auto& ds : darts) codes.push_back(detail::component_code(m, ds, include_reflections));
    std::sort(codes.begin(), codes.end());
    CanonicalKey key;
    key.bytes.push_back(include_reflections ? 'R' : 'O');
    detail::put_varint(key.bytes, static_cast<std::uint64_t>(nc));
    for (const auto& c : codes) {
        detail::put_varint(key.bytes, c.size());
        for (int v : c) detail::put_varint(key.bytes, static_cast<std::uint64_t>(v));
    }
    detail::put_varint(key.bytes, static_cast<std::uint64_t>(circles));
    return key;
}

inline CanonicalKey canonical_key(const Web& w, bool include_reflections = true) {
    return canonical_key(w.map(), w.circles(), include_reflections);
}

inline bool is_isomorphic(const Web& a, const Web& b, bool include_reflections = true) {
    if (a.num_vertices() != b.num_vertices() || a.circles() != b.circles()) return false;
    return canonical_key(a, include_reflections) == canonical_key(b, include_reflections);
}

/// Number of dart bijections preserving alpha and sigma (with reflections:
/// also those sending sigma to sigma^-1). Requires a connected map.
inline long long automorphism_count(const CombMap& m, bool include_reflections) {
    if (m.empty()) return 1;
    int nc = 0;
    m.dart_components(&nc);
    if (nc != 1) throw std::invalid_argument("automorphism_count: map is not connected");
    detail::RootedCoder coder(m);
    std::vector<int> ref, cur;
    coder.code(0, detail::Chirality::Direct, ref, nullptr);
    long long count = 0;
    std::vector<detail::Chirality> chis{detail::Chirality::Direct};
    if (include_reflections) chis.push_back(detail::Chirality::Mirror);
    for (int d = 0; d < m.num_darts(); ++d)
        for (auto c : chis)
            if (coder.code(d, c, cur, &ref) == 0) ++count;
    return count;
}

inline long long automorphism_count(const Web& w, bool include_reflections) {
    return automorphism_count(w.map(), include_reflections);
}

inline std::string to_hex(const CanonicalKey& k) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (unsigned char c : k.bytes) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 15]);
    }
    return s;
}

}  // namespace sl3web
