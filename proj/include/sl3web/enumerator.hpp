#pragma once
// Prime webs from plates and normal chord diagrams, plus pushing moves.
//
// A plate with sides (a_1..a_N) has boundary points 0..n-1, side i owning a
// contiguous block. Assembly turns point g into a vertex with darts
//   3g   forward along its polygon (the last point's forward dart is the
//        reglued cut edge back to the first point of the side)
//   3g+1 chord
//   3g+2 backward
// in counterclockwise order.

#include "sl3web/canonical.hpp"
#include "sl3web/coloring.hpp"
#include "sl3web/combmap.hpp"
#include "sl3web/connectivity.hpp"
#include "sl3web/parallel.hpp"
#include "sl3web/reducer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl3web {

struct Plate {
    std::vector<int> sides;

    int points() const { return std::accumulate(sides.begin(), sides.end(), 0); }
    std::vector<int> side_of_point() const {
        std::vector<int> s;
        for (int i = 0; i < static_cast<int>(sides.size()); ++i) s.insert(s.end(), sides[i], i);
        return s;
    }
    std::vector<int> side_start() const {
        std::vector<int> st(sides.size(), 0);
        for (std::size_t i = 1; i < sides.size(); ++i) st[i] = st[i - 1] + sides[i - 1];
        return st;
    }
    friend bool operator==(const Plate&, const Plate&) = default;
    friend auto operator<=>(const Plate&, const Plate&) = default;
};

/// partner[g] is the point matched with g.
struct ChordDiagram {
    std::vector<int> partner;
    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

/// Least rotation/reflection of a cyclic sequence.
inline std::vector<int> dihedral_min(const std::vector<int>& s) {
    std::vector<int> best = s;
    const std::size_t n = s.size();
    for (int refl = 0; refl < 2; ++refl) {
        std::vector<int> base = s;
        if (refl) std::reverse(base.begin(), base.end());
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<int> t(n);
            for (std::size_t i = 0; i < n; ++i) t[i] = base[(i + r) % n];
            best = std::min(best, t);
        }
    }
    return best;
}

/// Plates of total n up to rotation and reflection: N >= 3 sides, each even
/// and >= 4, plus the two-sided plate (n/2, n/2) when n/2 is even. Odd n
/// throws; n < 8 gives no plates.
inline std::vector<Plate> even_partitions(int n) {
    if (n % 2) throw std::invalid_argument("even_partitions: n must be even");
    std::vector<Plate> out;
    if (n < 8) return out;
    if ((n / 2) % 2 == 0) out.push_back(Plate{{n / 2, n / 2}});
    std::vector<int> cur;
    std::vector<std::vector<int>> found;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            if (cur.size() >= 3 && dihedral_min(cur) == cur) found.push_back(cur);
            return;
        }
        for (int a = 4; a <= left; a += 2) {
            if (left - a != 0 && left - a < 4) continue;
            cur.push_back(a);
            self(self, left - a);
            cur.pop_back();
        }
    };
    rec(rec, n);
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    for (auto& f : found) out.push_back(Plate{f});
    return out;
}

/// |a-b| <= c <= a+b.
inline bool is_admissible(int a, int b, int c) { return std::abs(a - b) <= c && c <= a + b; }

/// dim Inv(V_{w1} x ... x V_{wN}) for sl(2) by the Clebsch-Gordan rule,
/// combining the first two factors.
inline std::uint64_t dim_inv(std::vector<int> w) {
    for (int x : w)
        if (x < 0 || x % 2) throw std::invalid_argument("dim_inv: weights must be even and non-negative");
    if (w.empty()) return 1;
    if (w.size() == 1) return w[0] == 0 ? 1 : 0;
    if (w.size() == 2) return w[0] == w[1] ? 1 : 0;
    if (w.size() == 3) return is_admissible(w[0], w[1], w[2]) ? 1 : 0;
    std::uint64_t total = 0;
    int a = w[0], b = w[1];
    std::vector<int> rest(w.begin() + 1, w.end());
    for (int x = std::abs(a - b); x <= a + b; x += 2) {
        rest[0] = x;
        total += dim_inv(rest);
    }
    return total;
}

namespace detail {

class ChordCounter {
public:
    explicit ChordCounter(const Plate& p) : side_(p.side_of_point()), n_(p.points()), memo_(n_ * n_ + 1, UINT64_MAX) {}

    // Normal non-crossing matchings of points i..j.
    std::uint64_t count(int i, int j) {
        if (i > j) return 1;
        if ((j - i + 1) % 2) return 0;
        std::uint64_t& m = memo_[i * n_ + j];
        if (m != UINT64_MAX) return m;
        std::uint64_t c = 0;
        for (int k = i + 1; k <= j; k += 2)
            if (side_[k] != side_[i]) c += count(i + 1, k - 1) * count(k + 1, j);
        return m = c;
    }

    void enumerate(std::vector<ChordDiagram>& out) {
        std::vector<int> partner(n_, -1);
        std::vector<std::pair<int, int>> stack;
        if (count(0, n_ - 1) == 0) return;
        stack.emplace_back(0, n_ - 1);
        rec(partner, stack, out);
    }

private:
    void rec(std::vector<int>& partner, std::vector<std::pair<int, int>>& todo, std::vector<ChordDiagram>& out) {
        while (!todo.empty() && todo.back().first > todo.back().second) todo.pop_back();
        if (todo.empty()) {
            out.push_back(ChordDiagram{partner});
            return;
        }
        auto [i, j] = todo.back();
        todo.pop_back();
        for (int k = i + 1; k <= j; k += 2) {
            if (side_[k] == side_[i]) continue;
            if (count(i + 1, k - 1) == 0 || count(k + 1, j) == 0) continue;
            partner[i] = k;
            partner[k] = i;
            auto saved = todo;
            todo.emplace_back(k + 1, j);
            todo.emplace_back(i + 1, k - 1);
            rec(partner, todo, out);
            todo = std::move(saved);
            partner[i] = partner[k] = -1;
        }
        todo.emplace_back(i, j);
    }

    std::vector<int> side_;
    int n_;
    std::vector<std::uint64_t> memo_;
};

}  // namespace detail

inline std::uint64_t count_normal_chord_diagrams(const Plate& p) { return detail::ChordCounter(p).count(0, p.points() - 1); }

/// Non-crossing perfect matchings of the boundary points with no chord
/// inside one side, in lexicographic order of partner vectors.
inline std::vector<ChordDiagram> normal_chord_diagrams(const Plate& p) {
    std::vector<ChordDiagram> out;
    detail::ChordCounter(p).enumerate(out);
    return out;
}

inline bool is_normal(const Plate& p, const ChordDiagram& cd) {
    const int n = p.points();
    if (static_cast<int>(cd.partner.size()) != n) return false;
    auto side = p.side_of_point();
    for (int i = 0; i < n; ++i) {
        int k = cd.partner[i];
        if (k < 0 || k >= n || k == i || cd.partner[k] != i || side[k] == side[i]) return false;
    }
    for (int i = 0; i < n; ++i) {
        int k = cd.partner[i];
        if (k < i) continue;
        for (int t = i + 1; t < k; ++t)
            if (cd.partner[t] < i || cd.partner[t] > k) return false;
    }
    return true;
}

/// Builds the web of a plate and a normal diagram. The polygons of the
/// sides form one decomposition; the face outside the reglued cut edges is
/// the exterior.
inline Web assemble_web(const Plate& p, const ChordDiagram& cd) {
    if (!is_normal(p, cd)) throw std::invalid_argument("assemble_web: diagram is not normal for this plate");
    const int n = p.points();
    auto start = p.side_start();
    auto side = p.side_of_point();
    std::vector<int> alpha(3 * n), sigma(3 * n);
    for (int g = 0; g < n; ++g) {
        for (int r = 0; r < 3; ++r) sigma[3 * g + r] = 3 * g + (r + 1) % 3;
        int s = side[g];
        int next = g + 1 < start[s] + p.sides[s] ? g + 1 : start[s];
        alpha[3 * g] = 3 * next + 2;
        alpha[3 * next + 2] = 3 * g;
        alpha[3 * g + 1] = 3 * cd.partner[g] + 1;
    }
    return Web::validate(CombMap::from_permutations(std::move(alpha), std::move(sigma)));
}

/// Reverse of assembly along a circular witness: the plate read off the
/// exterior face, and the connector edges as chords.
inline std::pair<Plate, ChordDiagram> cut_open(const Web& w, const CircularWitness& cw) {
    const CombMap& m = w.map();
    auto decs = edge_3_coloring(w);
    const auto& dec = decs[cw.connector];
    auto fi = m.face_index();
    auto faces = m.faces();
    std::vector<char> is_poly(faces.size(), 0);
    for (int f : dec.polygon_faces) is_poly[f] = 1;
    if (is_poly[cw.exterior]) throw std::invalid_argument("cut_open: exterior is a polygon");
    // Exterior darts whose edge borders a polygon, in face order.
    const auto& ext = faces[cw.exterior];
    std::size_t first = ext.size();
    for (std::size_t i = 0; i < ext.size(); ++i)
        if (is_poly[fi[m.alpha(ext[i])]]) {
            first = i;
            break;
        }
    if (first == ext.size()) throw std::invalid_argument("cut_open: exterior touches no polygon");
    Plate plate;
    std::vector<int> point_of_vertex(m.num_vertices(), -1);
    std::vector<char> used(faces.size(), 0);
    int next_point = 0;
    for (std::size_t t = 0; t < ext.size(); ++t) {
        int d = ext[(first + t) % ext.size()];
        int pf = fi[m.alpha(d)];
        if (!is_poly[pf]) continue;
        if (used[pf]) throw std::invalid_argument("cut_open: a polygon meets the exterior twice");
        used[pf] = 1;
        // Polygon walk ending with the cut dart alpha(d).
        const auto& poly = faces[pf];
        auto it = std::find(poly.begin(), poly.end(), m.alpha(d));
        std::size_t cut = static_cast<std::size_t>(it - poly.begin());
        for (std::size_t k = 1; k <= poly.size(); ++k) point_of_vertex[m.vertex(poly[(cut + k) % poly.size()])] = next_point++;
        plate.sides.push_back(static_cast<int>(poly.size()));
    }
    for (int f : dec.polygon_faces)
        if (!used[f]) throw std::invalid_argument("cut_open: some polygon is not at level 1");
    ChordDiagram cd;
    cd.partner.assign(next_point, -1);
    for (int v = 0; v < m.num_vertices(); ++v) {
        for (int d : m.rotation(v)) {
            if (dec.edge_color[d] != cw.connector) continue;
            cd.partner[point_of_vertex[v]] = point_of_vertex[m.head(d)];
        }
    }
    return {plate, cd};
}

/// Site data of a pushing move, in the numbering of the result: the new
/// edges are (fb, alpha(fb)) and (fd, alpha(fd)).
struct PushResult {
    Web web;
    int edge = -1;  // pushed edge (rep dart) in the input
    int fb = -1, fd = -1;
};

/// Removes the edge of du and its endpoints u, v, joining the remaining
/// neighbours crosswise so that the result stays planar:
/// far(sigma^2 du) - far(sigma dv) and far(sigma^2 dv) - far(sigma du).
inline PushResult push_at(const Web& w, int du) {
    const CombMap& m = w.map();
    int dv = m.alpha(du);
    int pa = m.sigma(du), pb = m.sigma(pa);
    int pc = m.sigma(dv), pd = m.sigma(pc);
    int fb = m.alpha(pb), fc = m.alpha(pc), fd = m.alpha(pd), fa = m.alpha(pa);
    for (int x : {fa, fb, fc, fd})
        if (m.vertex(x) == m.vertex(du) || m.vertex(x) == m.vertex(dv))
            throw WebError(WebErrorKind::BadSite, du, "pushing site has a multi-edge");
    MapEditor ed(m);
    ed.link(fb, fc);
    ed.link(fd, fa);
    ed.kill_vertex(du);
    ed.kill_vertex(dv);
    auto renum = ed.renumbering();
    PushResult r{Web::validate(ed.build(), w.circles()), std::min(du, dv), renum[fb], renum[fd]};
    return r;
}

/// Converse move: subdivides the edges of fb and fd by new vertices u, v
/// and joins u-v. Exact inverse of push_at given its reported darts.
inline Web unpush_at(const Web& w, int fb, int fd) {
    const CombMap& m = w.map();
    int fc = m.alpha(fb), fa = m.alpha(fd);
    if (std::min(fb, fc) == std::min(fd, fa)) throw WebError(WebErrorKind::BadSite, fb, "converse move needs two distinct edges");
    MapEditor ed(m);
    auto u = ed.add_vertex(3);  // du, pa, pb
    auto v = ed.add_vertex(3);  // dv, pc, pd
    ed.link(u[0], v[0]);
    ed.link(u[2], fb);
    ed.link(v[1], fc);
    ed.link(v[2], fd);
    ed.link(u[1], fa);
    return Web::validate(ed.build(), w.circles());
}

/// Every pushing move, one per edge, skipping sites with multi-edges.
inline std::vector<PushResult> pushing_moves(const Web& w) {
    std::vector<PushResult> out;
    for (int e : w.map().edges()) {
        try {
            out.push_back(push_at(w, e));
        } catch (const WebError&) {
        }
    }
    return out;
}

struct EnumOptions {
    unsigned threads = 1;
};

namespace detail {

inline void add_unique(std::map<CanonicalKey, Web>& set, Web w) {
    auto k = canonical_key(w, true);
    set.try_emplace(std::move(k), std::move(w));
}

inline std::vector<Web> values(std::map<CanonicalKey, Web>&& set) {
    std::vector<Web> out;
    for (auto& [k, w] : set) out.push_back(std::move(w));
    return out;
}

}  // namespace detail

/// Circular prime webs with n vertices, sorted by canonical key.
inline std::vector<Web> circular_primes(int n, EnumOptions opts = {}) {
    if (n % 2) return {};
    auto plates = even_partitions(n);
    auto per_plate = parallel_map(plates.size(), opts.threads, [&](std::size_t i) {
        std::map<CanonicalKey, Web> local;
        for (const auto& cd : normal_chord_diagrams(plates[i])) {
            Web w = assemble_web(plates[i], cd);
            if (!is_prime(w) || !is_circular(w)) continue;
            detail::add_unique(local, std::move(w));
        }
        return local;
    });
    std::map<CanonicalKey, Web> all;
    for (auto& m : per_plate) all.merge(m);
    return detail::values(std::move(all));
}

/// Default slack: ceil(n/8) rounded up to even.
inline int default_slack(int n) {
    int s = (n + 7) / 8;
    return s + (s % 2);
}

/// All prime webs with n vertices: circular primes of sizes n..n+slack,
/// closed downward under pushing moves restricted to primes.
inline std::vector<Web> all_primes(int n, int slack, EnumOptions opts = {}) {
    if (n % 2) throw std::invalid_argument("all_primes: n must be even");
    if (slack < 0 || slack % 2) throw std::invalid_argument("all_primes: slack must be even and non-negative");
    std::vector<Web> level;
    for (int m = n + slack; m >= n; m -= 2) {
        std::map<CanonicalKey, Web> set;
        for (auto& w : circular_primes(m, opts)) detail::add_unique(set, std::move(w));
        auto pushed = parallel_map(level.size(), opts.threads, [&](std::size_t i) {
            std::vector<Web> r;
            for (auto& pr : pushing_moves(level[i]))
                if (is_prime(pr.web)) r.push_back(std::move(pr.web));
            return r;
        });
        for (auto& vec : pushed)
            for (auto& w : vec) detail::add_unique(set, std::move(w));
        level = detail::values(std::move(set));
    }
    return level;
}

struct CatalogEntry {
    std::string name;
    int vertices = 0;
    Web web;
    HalfLaurent invariant;
    std::vector<std::vector<int>> descriptions;
    bool circular = false;
};

inline CatalogEntry make_entry(std::string name, const Web& w) {
    CatalogEntry e;
    e.name = std::move(name);
    e.vertices = w.num_vertices();
    e.web = w;
    e.invariant = invariant(w);
    e.descriptions = polygonal_descriptions(w);
    e.circular = is_circular(w);
    return e;
}

/// Primes of every even size 8..n_max with invariants and descriptions.
/// Names are size/2 and a 1-based index in canonical key order.
inline std::vector<CatalogEntry> build_catalog(int n_max, int slack = 2, EnumOptions opts = {}) {
    if (n_max % 2) throw std::invalid_argument("build_catalog: n_max must be even");
    std::vector<CatalogEntry> out;
    for (int n = 8; n <= n_max; n += 2) {
        auto primes = all_primes(n, slack, opts);
        auto entries = parallel_map(primes.size(), opts.threads, [&](std::size_t i) {
            return make_entry(std::to_string(n / 2) + "_" + std::to_string(i + 1), primes[i]);
        });
        for (auto& e : entries) out.push_back(std::move(e));
    }
    return out;
}

}  // namespace sl3web
