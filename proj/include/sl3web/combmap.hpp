#pragma once
// Combinatorial maps on the sphere and validated webs.
//
// Darts are 0..2E-1. alpha pairs the two darts of an edge; sigma sends a
// dart to the next dart counterclockwise around its vertex. Faces are the
// orbits of phi = sigma o alpha: walk along the edge, then turn to the next
// counterclockwise dart at the far vertex. This convention is used
// everywhere in the library.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl3web {

class MapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CombMap {
public:
    CombMap() = default;

    /// Checks that alpha is a fixed-point-free involution and sigma a
    /// permutation of the same darts.
    static CombMap from_permutations(std::vector<int> alpha, std::vector<int> sigma) {
        const int n = static_cast<int>(alpha.size());
        if (static_cast<int>(sigma.size()) != n) throw MapError("alpha and sigma differ in size");
        if (n % 2) throw MapError("odd number of darts");
        std::vector<int> seen(n, 0);
        for (int d = 0; d < n; ++d) {
            int a = alpha[d];
            if (a < 0 || a >= n) throw MapError("alpha of dart " + std::to_string(d) + " out of range");
            if (a == d) throw MapError("dart " + std::to_string(d) + " is a fixed point of alpha");
            if (alpha[a] != d) throw MapError("alpha is not an involution at dart " + std::to_string(d));
            int s = sigma[d];
            if (s < 0 || s >= n) throw MapError("sigma of dart " + std::to_string(d) + " out of range");
            if (seen[s]++) throw MapError("sigma is not a permutation (dart " + std::to_string(s) + " hit twice)");
        }
        CombMap m;
        m.alpha_ = std::move(alpha);
        m.sigma_ = std::move(sigma);
        m.index();
        return m;
    }

    int num_darts() const { return static_cast<int>(alpha_.size()); }
    int num_edges() const { return num_darts() / 2; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    bool empty() const { return alpha_.empty(); }

    int alpha(int d) const { return alpha_[d]; }
    int sigma(int d) const { return sigma_[d]; }
    int sigma_inv(int d) const { return sigma_inv_[d]; }
    int phi(int d) const { return sigma_[alpha_[d]]; }

    const std::vector<int>& alpha_perm() const { return alpha_; }
    const std::vector<int>& sigma_perm() const { return sigma_; }

    /// Vertices are numbered by their smallest dart; the rotation of each
    /// starts at that dart.
    int vertex(int d) const { return vertex_of_[d]; }
    const std::vector<int>& rotation(int v) const { return vertices_[v]; }
    int degree(int v) const { return static_cast<int>(vertices_[v].size()); }

    /// Other endpoint of the edge of dart d.
    int head(int d) const { return vertex_of_[alpha_[d]]; }

    /// Edges as their smaller dart, ascending.
    std::vector<int> edges() const {
        std::vector<int> out;
        for (int d = 0; d < num_darts(); ++d)
            if (d < alpha_[d]) out.push_back(d);
        return out;
    }
    static int edge_rep(const CombMap& m, int d) { return std::min(d, m.alpha(d)); }

    /// Face cycles (phi orbits), ordered by their smallest dart.
    std::vector<std::vector<int>> faces() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(num_darts(), 0);
        for (int d = 0; d < num_darts(); ++d) {
            if (seen[d]) continue;
            std::vector<int> f;
            for (int e = d; !seen[e]; e = phi(e)) {
                seen[e] = 1;
                f.push_back(e);
            }
            out.push_back(std::move(f));
        }
        return out;
    }

    /// Face index of every dart, consistent with faces().
    std::vector<int> face_index() const {
        std::vector<int> idx(num_darts(), -1);
        int f = 0;
        for (int d = 0; d < num_darts(); ++d) {
            if (idx[d] >= 0) continue;
            for (int e = d; idx[e] < 0; e = phi(e)) idx[e] = f;
            ++f;
        }
        return idx;
    }

    /// Connected component of every dart, numbered by smallest dart.
    std::vector<int> dart_components(int* count = nullptr) const {
        std::vector<int> comp(num_darts(), -1);
        int c = 0;
        for (int s = 0; s < num_darts(); ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                int d = stack.back();
                stack.pop_back();
                for (int e : {alpha_[d], sigma_[d]}) {
                    if (comp[e] < 0) {
                        comp[e] = c;
                        stack.push_back(e);
                    }
                }
            }
            ++c;
        }
        if (count) *count = c;
        return comp;
    }

    bool is_simple() const { return !find_multi_edge().has_value(); }

    /// A dart on a loop or on one of two parallel edges, if any.
    std::optional<int> find_multi_edge() const {
        for (int v = 0; v < num_vertices(); ++v) {
            std::vector<int> nbrs;
            for (int d : vertices_[v]) {
                int w = head(d);
                if (w == v) return d;
                if (std::find(nbrs.begin(), nbrs.end(), w) != nbrs.end()) return d;
                nbrs.push_back(w);
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const CombMap& a, const CombMap& b) {
        return a.alpha_ == b.alpha_ && a.sigma_ == b.sigma_;
    }

private:
    void index() {
        const int n = num_darts();
        sigma_inv_.assign(n, 0);
        for (int d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;
        vertex_of_.assign(n, -1);
        vertices_.clear();
        for (int d = 0; d < n; ++d) {
            if (vertex_of_[d] >= 0) continue;
            std::vector<int> rot;
            for (int e = d; vertex_of_[e] < 0; e = sigma_[e]) {
                vertex_of_[e] = static_cast<int>(vertices_.size());
                rot.push_back(e);
            }
            vertices_.push_back(std::move(rot));
        }
    }

    std::vector<int> alpha_, sigma_, sigma_inv_, vertex_of_;
    std::vector<std::vector<int>> vertices_;
};

/// Per connected component: V - E + F (2 on the sphere).
inline std::vector<int> euler_characteristics(const CombMap& m) {
    int nc = 0;
    auto comp = m.dart_components(&nc);
    std::vector<int> chi(nc, 0);
    for (int v = 0; v < m.num_vertices(); ++v) chi[comp[m.rotation(v)[0]]] += 1;
    for (int e : m.edges()) chi[comp[e]] -= 1;
    for (const auto& f : m.faces()) chi[comp[f[0]]] += 1;
    return chi;
}

enum class WebErrorKind { NotCubic, NotBipartite, NonPlanarEmbedding, NotSimple, NotConnected, NotThreeConnected, BadSite };

inline const char* to_string(WebErrorKind k) {
    switch (k) {
        case WebErrorKind::NotCubic: return "NotCubic";
        case WebErrorKind::NotBipartite: return "NotBipartite";
        case WebErrorKind::NonPlanarEmbedding: return "NonPlanarEmbedding";
        case WebErrorKind::NotSimple: return "NotSimple";
        case WebErrorKind::NotConnected: return "NotConnected";
        case WebErrorKind::NotThreeConnected: return "NotThreeConnected";
        case WebErrorKind::BadSite: return "BadSite";
    }
    return "?";
}

class WebError : public std::runtime_error {
public:
    WebError(WebErrorKind kind, int witness_dart, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), witness_(witness_dart) {}
    WebErrorKind kind() const { return kind_; }
    int witness_dart() const { return witness_; }

private:
    WebErrorKind kind_;
    int witness_;
};

/// A cubic bipartite map of genus 0 on every component, plus a number of
/// vertexless circles. Multi-edges are allowed; loops cannot occur in a
/// bipartite map.
class Web {
public:
    Web() = default;

    static Web validate(CombMap map, int circles = 0) {
        if (circles < 0) throw std::invalid_argument("negative circle count");
        for (int v = 0; v < map.num_vertices(); ++v) {
            if (map.degree(v) != 3)
                throw WebError(WebErrorKind::NotCubic, map.rotation(v)[0],
                               "vertex " + std::to_string(v + 1) + " has degree " + std::to_string(map.degree(v)));
        }
        auto chi = euler_characteristics(map);
        if (!chi.empty()) {
            int nc = 0;
            auto comp = map.dart_components(&nc);
            for (int c = 0; c < nc; ++c) {
                if (chi[c] != 2) {
                    int witness = static_cast<int>(std::find(comp.begin(), comp.end(), c) - comp.begin());
                    throw WebError(WebErrorKind::NonPlanarEmbedding, witness,
                                   "component containing dart " + std::to_string(witness) + " has V-E+F=" +
                                       std::to_string(chi[c]) + " (genus " + std::to_string((2 - chi[c]) / 2) + ")");
                }
            }
        }
        std::vector<int> part(map.num_vertices(), -1);
        for (int s = 0; s < map.num_vertices(); ++s) {
            if (part[s] >= 0) continue;
            part[s] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int d : map.rotation(v)) {
                    int w = map.head(d);
                    if (part[w] < 0) {
                        part[w] = 1 - part[v];
                        q.push(w);
                    } else if (part[w] == part[v]) {
                        throw WebError(WebErrorKind::NotBipartite, d,
                                       "edge of dart " + std::to_string(d) + " joins vertices " +
                                           std::to_string(v + 1) + " and " + std::to_string(w + 1) +
                                           " of the same class (odd cycle)");
                    }
                }
            }
        }
        Web w;
        w.map_ = std::move(map);
        w.circles_ = circles;
        w.part_ = std::move(part);
        return w;
    }

    const CombMap& map() const { return map_; }
    int circles() const { return circles_; }
    int num_vertices() const { return map_.num_vertices(); }
    int num_edges() const { return map_.num_edges(); }
    /// Bipartition class of each vertex; the first vertex of every component is class 0.
    int part(int v) const { return part_[v]; }
    bool empty() const { return map_.empty() && circles_ == 0; }
    bool is_simple() const { return map_.is_simple(); }
    bool is_connected() const {
        int nc = 0;
        map_.dart_components(&nc);
        return nc <= 1 && (circles_ == 0 || map_.empty()) && circles_ <= 1;
    }

    Web without_circles() const {
        Web w = *this;
        w.circles_ = 0;
        return w;
    }
    Web with_circles(int c) const {
        Web w = *this;
        w.circles_ = c;
        return w;
    }

private:
    CombMap map_;
    int circles_ = 0;
    std::vector<int> part_;
};

/// Mutable scratch copy used for local surgery. Darts keep their indices
/// until build(), which drops dead darts and renumbers the rest in order.
class MapEditor {
public:
    explicit MapEditor(const CombMap& m) : alpha_(m.alpha_perm()), sigma_(m.sigma_perm()), dead_(m.num_darts(), 0) {}

    int alpha(int d) const { return alpha_[d]; }
    int sigma(int d) const { return sigma_[d]; }
    int circles() const { return circles_; }

    void link(int a, int b) {
        alpha_[a] = b;
        alpha_[b] = a;
    }

    void kill_vertex(int d) {
        int e = d;
        do {
            dead_[e] = 1;
            e = sigma_[e];
        } while (e != d);
    }

    /// Adds a vertex whose darts, in counterclockwise order, are the
    /// returned indices. Their alpha must be set with link().
    std::vector<int> add_vertex(int degree) {
        int first = static_cast<int>(alpha_.size());
        std::vector<int> darts;
        for (int i = 0; i < degree; ++i) {
            alpha_.push_back(-1);
            sigma_.push_back(first + (i + 1) % degree);
            dead_.push_back(0);
            darts.push_back(first + i);
        }
        return darts;
    }

    /// Joins the far ends of two legs (darts on removed vertices). If the
    /// two legs are already the same strand the strand closes into a circle.
    void join_legs(int leg1, int leg2) {
        int f1 = alpha_[leg1];
        int f2 = alpha_[leg2];
        if (f1 == leg2) {
            ++circles_;
            return;
        }
        link(f1, f2);
    }

    /// New index of each dart after build(), -1 for dead darts.
    std::vector<int> renumbering() const {
        std::vector<int> renum(alpha_.size(), -1);
        int next = 0;
        for (std::size_t d = 0; d < alpha_.size(); ++d)
            if (!dead_[d]) renum[d] = next++;
        return renum;
    }

    CombMap build() const {
        const int n = static_cast<int>(alpha_.size());
        std::vector<int> renum = renumbering();
        int next = n - static_cast<int>(std::count(dead_.begin(), dead_.end(), 1));
        std::vector<int> a(next), s(next);
        for (int d = 0; d < n; ++d) {
            if (dead_[d]) continue;
            if (alpha_[d] < 0 || dead_[alpha_[d]]) throw MapError("surgery left dart " + std::to_string(d) + " dangling");
            a[renum[d]] = renum[alpha_[d]];
            s[renum[d]] = renum[sigma_[d]];
        }
        return CombMap::from_permutations(std::move(a), std::move(s));
    }

private:
    std::vector<int> alpha_, sigma_;
    std::vector<char> dead_;
    int circles_ = 0;
};

inline CombMap disjoint_union(const CombMap& a, const CombMap& b) {
    const int na = a.num_darts();
    std::vector<int> al = a.alpha_perm(), si = a.sigma_perm();
    for (int d = 0; d < b.num_darts(); ++d) {
        al.push_back(b.alpha(d) + na);
        si.push_back(b.sigma(d) + na);
    }
    return CombMap::from_permutations(std::move(al), std::move(si));
}

inline Web disjoint_union(const Web& a, const Web& b) {
    return Web::validate(disjoint_union(a.map(), b.map()), a.circles() + b.circles());
}

/// Reverses every rotation.
inline CombMap mirror(const CombMap& m) {
    std::vector<int> s(m.num_darts());
    for (int d = 0; d < m.num_darts(); ++d) s[d] = m.sigma_inv(d);
    return CombMap::from_permutations(m.alpha_perm(), std::move(s));
}

inline Web mirror(const Web& w) { return Web::validate(mirror(w.map()), w.circles()); }

/// The connected components of a map, each renumbered from 0.
inline std::vector<CombMap> components(const CombMap& m) {
    int nc = 0;
    auto comp = m.dart_components(&nc);
    std::vector<std::vector<int>> darts(nc);
    for (int d = 0; d < m.num_darts(); ++d) darts[comp[d]].push_back(d);
    std::vector<CombMap> out;
    for (const auto& ds : darts) {
        std::vector<int> renum(m.num_darts(), -1);
        for (std::size_t i = 0; i < ds.size(); ++i) renum[ds[i]] = static_cast<int>(i);
        std::vector<int> a(ds.size()), s(ds.size());
        for (std::size_t i = 0; i < ds.size(); ++i) {
            a[i] = renum[m.alpha(ds[i])];
            s[i] = renum[m.sigma(ds[i])];
        }
        out.push_back(CombMap::from_permutations(std::move(a), std::move(s)));
    }
    return out;
}

}  // namespace sl3web
