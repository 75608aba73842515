#pragma once
// Edge connectivity of simple cubic graphs (equal to vertex connectivity
// there). Edges are named by their smaller dart.

#include "sl3web/combmap.hpp"

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

namespace sl3web {

namespace detail {

// Bridges of the graph with edge `skip` (a rep dart, or -1) removed.
// Returns rep darts of bridges and sets `connected`.
inline std::vector<int> bridges_without(const CombMap& m, int skip, bool& connected) {
    const int nv = m.num_vertices();
    std::vector<int> disc(nv, -1), low(nv, 0), out;
    int timer = 0, roots = 0;
    // Iterative lowlink DFS; entry dart identifies the tree edge.
    for (int s = 0; s < nv; ++s) {
        if (disc[s] >= 0) continue;
        ++roots;
        struct Frame {
            int v, in_dart, next;
        };
        std::vector<Frame> st{{s, -1, 0}};
        disc[s] = low[s] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            const auto& rot = m.rotation(f.v);
            if (f.next < static_cast<int>(rot.size())) {
                int d = rot[f.next++];
                int rep = std::min(d, m.alpha(d));
                if (rep == skip) continue;
                if (f.in_dart >= 0 && d == m.alpha(f.in_dart)) continue;
                int w = m.head(d);
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    st.push_back({w, d, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().v;
                    low[p] = std::min(low[p], low[done.v]);
                    if (low[done.v] > disc[p]) out.push_back(std::min(done.in_dart, m.alpha(done.in_dart)));
                }
            }
        }
    }
    connected = roots <= 1;
    std::sort(out.begin(), out.end());
    return out;
}

inline void require_simple_cubic(const CombMap& m) {
    for (int v = 0; v < m.num_vertices(); ++v)
        if (m.degree(v) != 3) throw WebError(WebErrorKind::NotCubic, m.rotation(v)[0], "connectivity needs a cubic graph");
    if (auto d = m.find_multi_edge())
        throw WebError(WebErrorKind::NotSimple, *d, "connectivity needs a simple graph (multi-edge at dart " + std::to_string(*d) + ")");
}

}  // namespace detail

inline std::vector<int> bridges(const CombMap& m) {
    bool conn = true;
    return detail::bridges_without(m, -1, conn);
}

/// All unordered pairs of edges whose removal disconnects the graph,
/// sorted. Pairs containing a bridge are included.
inline std::vector<std::pair<int, int>> find_2_edge_cuts(const CombMap& m) {
    std::vector<std::pair<int, int>> cuts;
    for (int e : m.edges()) {
        bool conn = true;
        auto br = detail::bridges_without(m, e, conn);
        if (!conn) {
            // e is itself a bridge: every other edge pairs with it.
            for (int f : m.edges())
                if (f != e) cuts.emplace_back(std::min(e, f), std::max(e, f));
            continue;
        }
        for (int f : br) cuts.emplace_back(std::min(e, f), std::max(e, f));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

inline std::vector<std::pair<int, int>> find_2_edge_cuts(const Web& w) { return find_2_edge_cuts(w.map()); }

/// min(3, connectivity) of a connected simple cubic graph; 0 if disconnected.
inline int connectivity(const CombMap& m) {
    detail::require_simple_cubic(m);
    bool conn = true;
    auto br = detail::bridges_without(m, -1, conn);
    if (!conn) return 0;
    if (!br.empty()) return 1;
    for (int e : m.edges()) {
        auto b2 = detail::bridges_without(m, e, conn);
        if (!b2.empty()) return 2;
    }
    return 3;
}

inline int connectivity(const Web& w) {
    if (w.circles() > 0 && !w.map().empty())
        throw WebError(WebErrorKind::NotConnected, -1, "web has circle components");
    return connectivity(w.map());
}

inline bool is_prime(const Web& w) {
    if (w.circles() != 0 || w.map().empty() || !w.is_simple()) return false;
    return connectivity(w.map()) >= 3;
}

}  // namespace sl3web
