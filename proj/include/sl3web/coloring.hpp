#pragma once
// Edge 3-colorings and polygonal decompositions of prime webs.
//
// The faces of a 3-connected cubic bipartite plane graph admit a proper
// 3-coloring, unique up to permutation (the dual is an Eulerian
// triangulation). An edge gets the color that neither adjacent face has;
// the polygons for connector color c are then exactly the faces of color c.

#include "sl3web/combmap.hpp"
#include "sl3web/connectivity.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

namespace sl3web {

struct FaceColoring {
    std::vector<int> face_of_dart;           // face index per dart
    std::vector<std::vector<int>> faces;     // dart cycles
    std::vector<int> color;                  // per face, in {0,1,2}
};

struct PolygonalDecomposition {
    int connector = 0;                       // color of the connector edges
    std::vector<int> edge_color;             // per dart (both darts of an edge agree)
    std::vector<int> polygon_faces;          // face index of each polygon
    std::vector<std::vector<int>> polygons;  // vertex cycles
    std::vector<int> sizes;                  // sorted polygon sizes

    int num_polygons() const { return static_cast<int>(polygons.size()); }
};

inline void require_prime(const Web& w) {
    if (w.circles() != 0 || w.map().empty())
        throw WebError(WebErrorKind::NotThreeConnected, -1, "polygonal decompositions need a web without circles");
    if (connectivity(w) < 3) throw WebError(WebErrorKind::NotThreeConnected, -1, "web is not 3-connected");
}

/// Face 3-coloring propagated from the vertex of `start_dart`, whose faces
/// get colors 0, 1, 2 in rotation order. Needs a prime web.
inline FaceColoring face_coloring(const Web& w, int start_dart = 0) {
    const CombMap& m = w.map();
    FaceColoring fc;
    fc.faces = m.faces();
    fc.face_of_dart = m.face_index();
    fc.color.assign(fc.faces.size(), -1);
    const int nv = m.num_vertices();
    auto face_at = [&](int v, int i) { return fc.face_of_dart[m.rotation(v)[i]]; };
    int v0 = m.vertex(start_dart);
    int base = static_cast<int>(std::find(m.rotation(v0).begin(), m.rotation(v0).end(), start_dart) - m.rotation(v0).begin());
    for (int i = 0; i < 3; ++i) fc.color[face_at(v0, (base + i) % 3)] = i;
    // Each face is adjacent to vertices; propagate until stable.
    std::vector<std::vector<int>> verts_of_face(fc.faces.size());
    for (int v = 0; v < nv; ++v)
        for (int i = 0; i < 3; ++i) verts_of_face[face_at(v, i)].push_back(v);
    std::queue<int> q;
    std::vector<char> queued(nv, 0);
    for (int v = 0; v < nv; ++v) {
        q.push(v);
        queued[v] = 1;
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        queued[v] = 0;
        int known = 0, missing = -1, mask = 0;
        for (int i = 0; i < 3; ++i) {
            int c = fc.color[face_at(v, i)];
            if (c >= 0) {
                ++known;
                mask |= 1 << c;
            } else {
                missing = i;
            }
        }
        if (known != 2) continue;
        int c = 0;
        while (mask & (1 << c)) ++c;
        if (c > 2) throw WebError(WebErrorKind::NotThreeConnected, m.rotation(v)[0], "face coloring conflict");
        int f = face_at(v, missing);
        fc.color[f] = c;
        for (int u : verts_of_face[f])
            if (!queued[u]) {
                queued[u] = 1;
                q.push(u);
            }
    }
    for (int v = 0; v < nv; ++v) {
        int mask = 0;
        for (int i = 0; i < 3; ++i) {
            int c = fc.color[face_at(v, i)];
            if (c < 0) throw WebError(WebErrorKind::NotThreeConnected, m.rotation(v)[0], "face coloring did not reach every face");
            mask |= 1 << c;
        }
        if (mask != 7) throw WebError(WebErrorKind::NotThreeConnected, m.rotation(v)[0], "faces at a vertex share a color");
    }
    return fc;
}

inline PolygonalDecomposition decomposition_for(const Web& w, const FaceColoring& fc, int connector) {
    const CombMap& m = w.map();
    PolygonalDecomposition dec;
    dec.connector = connector;
    dec.edge_color.assign(m.num_darts(), -1);
    for (int d = 0; d < m.num_darts(); ++d) {
        int c1 = fc.color[fc.face_of_dart[d]], c2 = fc.color[fc.face_of_dart[m.alpha(d)]];
        dec.edge_color[d] = 3 - c1 - c2;
    }
    for (std::size_t f = 0; f < fc.faces.size(); ++f) {
        if (fc.color[f] != connector) continue;
        dec.polygon_faces.push_back(static_cast<int>(f));
        std::vector<int> cyc;
        for (int d : fc.faces[f]) cyc.push_back(m.vertex(d));
        dec.sizes.push_back(static_cast<int>(cyc.size()));
        dec.polygons.push_back(std::move(cyc));
    }
    std::sort(dec.sizes.begin(), dec.sizes.end());
    return dec;
}

/// The three polygonal decompositions, one per connector color.
inline std::array<PolygonalDecomposition, 3> edge_3_coloring(const Web& w, int start_dart = 0) {
    require_prime(w);
    FaceColoring fc = face_coloring(w, start_dart);
    return {decomposition_for(w, fc, 0), decomposition_for(w, fc, 1), decomposition_for(w, fc, 2)};
}

/// Polygon size multisets of the three decompositions, sorted.
inline std::vector<std::vector<int>> polygonal_descriptions(const Web& w) {
    auto decs = edge_3_coloring(w);
    std::vector<std::vector<int>> out;
    for (const auto& d : decs) out.push_back(d.sizes);
    std::sort(out.begin(), out.end());
    return out;
}

/// Dual-graph distance from `exterior` to every face.
inline std::vector<int> dual_distances(const CombMap& m, int exterior) {
    auto fi = m.face_index();
    auto faces = m.faces();
    std::vector<int> dist(faces.size(), -1);
    std::queue<int> q;
    dist[exterior] = 0;
    q.push(exterior);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int d : faces[f]) {
            int g = fi[m.alpha(d)];
            if (dist[g] < 0) {
                dist[g] = dist[f] + 1;
                q.push(g);
            }
        }
    }
    return dist;
}

/// Level of each polygon (in dec.polygon_faces order) seen from the face
/// `exterior`, which must not be a polygon.
inline std::vector<int> polygon_levels(const Web& w, const PolygonalDecomposition& dec, int exterior) {
    if (std::find(dec.polygon_faces.begin(), dec.polygon_faces.end(), exterior) != dec.polygon_faces.end())
        throw std::invalid_argument("polygon_levels: exterior face is a polygon");
    auto dist = dual_distances(w.map(), exterior);
    std::vector<int> lv;
    for (int f : dec.polygon_faces) lv.push_back(dist[f]);
    return lv;
}

struct CircularWitness {
    int connector = 0;  // which decomposition
    int exterior = 0;   // face index
};

/// First (connector, exterior) in index order with every polygon at level 1.
inline std::optional<CircularWitness> circular_witness(const Web& w) {
    auto decs = edge_3_coloring(w);
    auto faces = w.map().faces();
    for (int c = 0; c < 3; ++c) {
        std::vector<char> is_poly(faces.size(), 0);
        for (int f : decs[c].polygon_faces) is_poly[f] = 1;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            if (is_poly[f]) continue;
            auto lv = polygon_levels(w, decs[c], f);
            if (std::all_of(lv.begin(), lv.end(), [](int l) { return l == 1; })) return CircularWitness{c, f};
        }
    }
    return std::nullopt;
}

inline bool is_circular(const Web& w) { return circular_witness(w).has_value(); }

}  // namespace sl3web
