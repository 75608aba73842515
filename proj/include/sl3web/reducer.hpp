#pragma once
// Skein evaluation of closed webs:
//   circle            -> [3]
//   bigon             -> -[2] * (the two outer edges joined)
//   square            -> sum of the two smoothings
// Site priority: circle, then bigon, then square, least face dart first.

#include "sl3web/canonical.hpp"
#include "sl3web/combmap.hpp"
#include "sl3web/qlaurent.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sl3web {

enum class RelationKind { Circle, Bigon, Square };

inline const char* to_string(RelationKind k) {
    switch (k) {
        case RelationKind::Circle: return "Circle";
        case RelationKind::Bigon: return "Bigon";
        case RelationKind::Square: return "Square";
    }
    return "?";
}

struct Reducible {
    RelationKind kind;
    int site;  // a dart of the face; -1 for circles
    friend bool operator==(const Reducible&, const Reducible&) = default;
};

/// All bigon and square faces, as their smallest dart, in dart order.
inline std::vector<Reducible> all_face_sites(const Web& w) {
    std::vector<Reducible> out;
    for (const auto& f : w.map().faces()) {
        if (f.size() == 2) out.push_back({RelationKind::Bigon, f[0]});
        else if (f.size() == 4) out.push_back({RelationKind::Square, f[0]});
    }
    return out;
}

inline std::optional<Reducible> find_reducible(const Web& w) {
    if (w.circles() > 0) return Reducible{RelationKind::Circle, -1};
    if (w.map().empty()) return std::nullopt;
    auto faces = w.map().faces();
    for (const auto& f : faces)
        if (f.size() == 2) return Reducible{RelationKind::Bigon, f[0]};
    for (const auto& f : faces)
        if (f.size() == 4) return Reducible{RelationKind::Square, f[0]};
    throw std::logic_error("nonempty web without a face of degree 2 or 4");
}

inline std::pair<Web, HalfLaurent> apply_circle(const Web& w) {
    if (w.circles() <= 0) throw WebError(WebErrorKind::BadSite, -1, "no circle to remove");
    return {w.with_circles(w.circles() - 1), qint(3)};
}

namespace detail {

inline std::vector<int> face_through(const CombMap& m, int d) {
    std::vector<int> f;
    int e = d;
    do {
        f.push_back(e);
        e = m.phi(e);
    } while (e != d && f.size() <= static_cast<std::size_t>(m.num_darts()));
    return f;
}

}  // namespace detail

inline std::pair<Web, HalfLaurent> apply_bigon(const Web& w, int site) {
    const CombMap& m = w.map();
    if (site < 0 || site >= m.num_darts()) throw WebError(WebErrorKind::BadSite, site, "dart out of range");
    auto f = detail::face_through(m, site);
    if (f.size() != 2) throw WebError(WebErrorKind::BadSite, site, "face is not a bigon");
    // Third darts at the two bigon vertices.
    int t1 = m.sigma(f[0]), t2 = m.sigma(f[1]);
    MapEditor ed(m);
    ed.join_legs(t1, t2);
    ed.kill_vertex(f[0]);
    ed.kill_vertex(f[1]);
    return {Web::validate(ed.build(), w.circles() + ed.circles()), -qint(2)};
}

inline std::pair<Web, Web> apply_square(const Web& w, int site) {
    const CombMap& m = w.map();
    if (site < 0 || site >= m.num_darts()) throw WebError(WebErrorKind::BadSite, site, "dart out of range");
    auto f = detail::face_through(m, site);
    if (f.size() != 4) throw WebError(WebErrorKind::BadSite, site, "face is not a square");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (m.vertex(f[i]) == m.vertex(f[j])) throw WebError(WebErrorKind::BadSite, site, "square vertices not distinct");
    int leg[4];
    for (int i = 0; i < 4; ++i) leg[i] = m.sigma(f[i]);
    auto smooth = [&](int a, int b, int c, int d) {
        MapEditor ed(m);
        ed.join_legs(leg[a], leg[b]);
        ed.join_legs(leg[c], leg[d]);
        for (int i = 0; i < 4; ++i) ed.kill_vertex(f[i]);
        return Web::validate(ed.build(), w.circles() + ed.circles());
    };
    return {smooth(0, 1, 2, 3), smooth(1, 2, 3, 0)};
}

struct EngineOptions {
    bool memoize = true;
    bool split_components = true;
    std::optional<std::uint64_t> random_seed;  // random site choice instead of priority
    std::size_t memo_cap = 0;                  // 0 = unbounded
};

struct TraceNode {
    std::string kind;  // Circle, Bigon, Square, Empty
    int site = -1;
    HalfLaurent factor{1};
    HalfLaurent value;
    std::vector<TraceNode> children;
};

class Engine {
public:
    explicit Engine(EngineOptions opts = {}) : opts_(opts), rng_(opts.random_seed.value_or(0)) {}

    HalfLaurent invariant(const Web& w) { return eval(w); }

    /// Full reduction tree (no memo, no component splitting).
    TraceNode trace(const Web& w) {
        TraceNode n;
        if (w.circles() > 0) {
            auto [rest, fac] = apply_circle(w);
            n.kind = "Circle";
            n.factor = fac;
            n.children.push_back(trace(rest));
            n.value = fac * n.children[0].value;
            return n;
        }
        auto site = find_reducible(w);
        if (!site) {
            n.kind = "Empty";
            n.value = HalfLaurent(1);
            return n;
        }
        n.kind = to_string(site->kind);
        n.site = site->site;
        if (site->kind == RelationKind::Bigon) {
            auto [rest, fac] = apply_bigon(w, site->site);
            n.factor = fac;
            n.children.push_back(trace(rest));
            n.value = fac * n.children[0].value;
        } else {
            auto [a, b] = apply_square(w, site->site);
            n.children.push_back(trace(a));
            n.children.push_back(trace(b));
            n.value = n.children[0].value + n.children[1].value;
        }
        return n;
    }

    std::size_t memo_size() const { return memo_.size(); }
    void clear_memo() { memo_.clear(); }

private:
    HalfLaurent eval(const Web& w) {
        if (w.circles() > 0) return pow(qint(3), static_cast<unsigned>(w.circles())) * eval(w.without_circles());
        if (w.map().empty()) return HalfLaurent(1);
        if (opts_.split_components) {
            auto comps = components(w.map());
            if (comps.size() > 1) {
                HalfLaurent r(1);
                for (auto& c : comps) r *= eval(Web::validate(std::move(c)));
                return r;
            }
        }
        std::string key;
        if (opts_.memoize) {
            key = canonical_key(w, true).bytes;
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        Reducible site = choose(w);
        HalfLaurent value;
        if (site.kind == RelationKind::Bigon) {
            auto [rest, fac] = apply_bigon(w, site.site);
            value = fac * eval(rest);
        } else {
            auto [a, b] = apply_square(w, site.site);
            value = eval(a) + eval(b);
        }
        if (opts_.memoize && (opts_.memo_cap == 0 || memo_.size() < opts_.memo_cap)) memo_.emplace(std::move(key), value);
        return value;
    }

    Reducible choose(const Web& w) {
        if (!opts_.random_seed) return *find_reducible(w);
        auto sites = all_face_sites(w);
        if (sites.empty()) throw std::logic_error("nonempty web without a face of degree 2 or 4");
        std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
        return sites[pick(rng_)];
    }

    EngineOptions opts_;
    std::mt19937_64 rng_;
    std::unordered_map<std::string, HalfLaurent> memo_;
};

/// The invariant P_G(q), using a per-thread memoizing engine.
inline HalfLaurent invariant(const Web& w) {
    thread_local Engine engine;
    return engine.invariant(w);
}

inline TraceNode invariant_trace(const Web& w) { return Engine(EngineOptions{false, false, std::nullopt, 0}).trace(w); }

/// Sum of coefficient * web plus an already-evaluated scalar.
struct LinearCombination {
    std::vector<std::pair<Web, HalfLaurent>> terms;
    HalfLaurent accumulator;
};

/// One engine step on the last term. Returns false once no terms remain.
inline bool reduce_step(LinearCombination& lc) {
    if (lc.terms.empty()) return false;
    auto [w, c] = std::move(lc.terms.back());
    lc.terms.pop_back();
    auto site = find_reducible(w);
    if (!site) {
        lc.accumulator += c;
        return true;
    }
    switch (site->kind) {
        case RelationKind::Circle: {
            auto [rest, fac] = apply_circle(w);
            lc.terms.emplace_back(std::move(rest), c * fac);
            break;
        }
        case RelationKind::Bigon: {
            auto [rest, fac] = apply_bigon(w, site->site);
            lc.terms.emplace_back(std::move(rest), c * fac);
            break;
        }
        case RelationKind::Square: {
            auto [a, b] = apply_square(w, site->site);
            lc.terms.emplace_back(std::move(a), c);
            lc.terms.emplace_back(std::move(b), c);
            break;
        }
    }
    return true;
}

}  // namespace sl3web
