#pragma once
// Connected sums and the prime decomposition of 2-connected webs.
//
// Splitting at a 2-edge-cut {x1 y1, x2 y2} (x on one side) reconnects
// x1-x2 and y1-y2 through the freed dart slots, so both sides stay planar.
// Each split contributes [3]: [3] P(G1 # G2) = P(G1) P(G2).

#include "sl3web/canonical.hpp"
#include "sl3web/combmap.hpp"
#include "sl3web/connectivity.hpp"
#include "sl3web/reducer.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace sl3web {

/// Deletes the edges of da (in a) and db (in b) and joins
/// tail(da)-head(db), head(da)-tail(db). The result is validated.
inline Web connected_sum(const Web& a, int da, const Web& b, int db) {
    if (a.circles() || b.circles()) throw std::invalid_argument("connected_sum: webs must not carry circles");
    if (da < 0 || da >= a.map().num_darts() || db < 0 || db >= b.map().num_darts())
        throw std::invalid_argument("connected_sum: dart out of range");
    CombMap u = disjoint_union(a.map(), b.map());
    const int off = a.map().num_darts();
    MapEditor ed(u);
    int ta = da, ha = u.alpha(da), tb = db + off, hb = u.alpha(db + off);
    ed.link(ta, hb);
    ed.link(ha, tb);
    return Web::validate(ed.build());
}

/// Splits at a 2-edge-cut given by two edge darts. The first returned web
/// is the side holding dart 0.
inline std::pair<Web, Web> split(const Web& w, std::pair<int, int> cut) {
    const CombMap& m = w.map();
    int e1 = std::min(cut.first, m.alpha(cut.first)), e2 = std::min(cut.second, m.alpha(cut.second));
    if (e1 == e2) throw std::invalid_argument("split: the two cut edges coincide");
    // Side labels after deleting both edges.
    std::vector<int> side(m.num_vertices(), -1);
    std::vector<int> stack{m.vertex(e1)};
    side[m.vertex(e1)] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : m.rotation(v)) {
            int r = std::min(d, m.alpha(d));
            if (r == e1 || r == e2) continue;
            int x = m.head(d);
            if (side[x] < 0) {
                side[x] = 0;
                stack.push_back(x);
            }
        }
    }
    int x1 = e1, y1 = m.alpha(e1);
    if (side[m.vertex(y1)] == 0) throw std::invalid_argument("split: edges do not form a cut");
    int x2 = e2, y2 = m.alpha(e2);
    if (side[m.vertex(x2)] != 0) std::swap(x2, y2);
    if (side[m.vertex(x2)] != 0 || side[m.vertex(y2)] == 0) throw std::invalid_argument("split: edges do not form a cut");
    MapEditor ed(m);
    ed.link(x1, x2);
    ed.link(y1, y2);
    auto comps = components(ed.build());
    if (comps.size() != 2) throw std::invalid_argument("split: edges do not form a cut");
    // components() orders by smallest dart and nothing was deleted, so
    // comps[0] is the side holding dart 0.
    Web s0 = Web::validate(std::move(comps[0]));
    Web s1 = Web::validate(std::move(comps[1]));
    if (side[m.vertex(0)] == 0) return {std::move(s0), std::move(s1)};
    return {std::move(s1), std::move(s0)};
}

struct Simplified {
    Web web;
    int l = 0;  // number of bigon removals

    bool collapsed() const { return web.map().empty(); }
};

/// Removes bigons until the web is simple (or only circles remain).
inline Simplified simplify(Web w) {
    Simplified s{std::move(w), 0};
    while (!s.web.map().empty()) {
        std::optional<int> site;
        for (const auto& f : s.web.map().faces())
            if (f.size() == 2) {
                site = f[0];
                break;
            }
        if (!site) break;
        s.web = apply_bigon(s.web, *site).first;
        ++s.l;
    }
    return s;
}

struct Decomposition {
    std::vector<Web> primes;  // sorted by reflection-inclusive key
    int k = 0;                // number of primes
    int l = 0;                // bigon removals
    int collapsed = 0;        // summands that reduced to a circle

    /// [3]^k P_G and [3] (-[2])^l prod P_i; equal when the decomposition is right.
    std::pair<HalfLaurent, HalfLaurent> identity_sides(const HalfLaurent& pg, const std::vector<HalfLaurent>& prime_values) const {
        HalfLaurent lhs = pow(qint(3), static_cast<unsigned>(k)) * pg;
        HalfLaurent rhs = qint(3) * pow(-qint(2), static_cast<unsigned>(l));
        for (const auto& p : prime_values) rhs *= p;
        return {lhs, rhs};
    }
};

struct DecomposeOptions {
    std::optional<std::uint64_t> random_seed;  // random cut order instead of least cut
};

inline Decomposition decompose(const Web& w, DecomposeOptions opts = {}) {
    if (w.circles() || w.map().empty()) throw std::invalid_argument("decompose: needs a web without circles");
    int nc = 0;
    w.map().dart_components(&nc);
    if (nc != 1) throw WebError(WebErrorKind::NotConnected, 0, "decompose: web is not connected");
    if (auto d = w.map().find_multi_edge()) throw WebError(WebErrorKind::NotSimple, *d, "decompose: web is not simple");
    std::mt19937_64 rng(opts.random_seed.value_or(0));
    Decomposition out;
    std::vector<Web> work{w};
    while (!work.empty()) {
        Web cur = std::move(work.back());
        work.pop_back();
        auto cuts = find_2_edge_cuts(cur);
        if (cuts.empty()) {
            out.primes.push_back(std::move(cur));
            continue;
        }
        std::size_t pick = 0;
        if (opts.random_seed) pick = std::uniform_int_distribution<std::size_t>(0, cuts.size() - 1)(rng);
        auto [a, b] = split(cur, cuts[pick]);
        for (Web* side : {&a, &b}) {
            Simplified s = simplify(std::move(*side));
            out.l += s.l;
            if (s.collapsed()) {
                ++out.collapsed;
                continue;
            }
            work.push_back(std::move(s.web));
        }
    }
    out.k = static_cast<int>(out.primes.size());
    std::vector<std::pair<CanonicalKey, Web>> keyed;
    for (auto& p : out.primes) keyed.emplace_back(canonical_key(p, true), std::move(p));
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.primes.clear();
    for (auto& [k, p] : keyed) out.primes.push_back(std::move(p));
    return out;
}

}  // namespace sl3web
