#pragma once
// Shared fixtures and brute-force oracles for the tests. Nothing here calls
// the library routine it is used to check.

#include "sl3web/sl3web.hpp"

#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef SL3WEB_DATA_DIR
#define SL3WEB_DATA_DIR "data"
#endif

namespace testutil {

using namespace sl3web;

inline std::string read_file(const std::string& name) {
    std::ifstream in(std::string(SL3WEB_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Web fixture(const std::string& name) { return parse_web(read_file(name)); }

/// Primes up to 20 vertices, built once per process.
inline const std::vector<CatalogEntry>& catalog20() {
    static const std::vector<CatalogEntry> c = build_catalog(20, 2);
    return c;
}

inline std::vector<Web> catalog_webs() {
    std::vector<Web> out;
    for (const auto& e : catalog20()) out.push_back(e.web);
    return out;
}

/// Proper 3-edge-colorings by backtracking over edges.
inline long long tait_colorings(const CombMap& m) {
    auto edges = m.edges();
    std::vector<int> color(m.num_darts(), -1);
    long long count = 0;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == edges.size()) {
            ++count;
            return;
        }
        int d = edges[i], a = m.alpha(d);
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int x : {d, a}) {
                int v = m.vertex(x);
                for (int y : m.rotation(v))
                    if (y != x && color[y] == c) ok = false;
            }
            if (!ok) continue;
            color[d] = color[a] = c;
            go(i + 1);
            color[d] = color[a] = -1;
        }
    };
    go(0);
    return count;
}

/// Value of the invariant at q = 1 predicted by edge colorings:
/// (-1)^(V/2) times the number of Tait colorings, times 3 per circle.
inline BigInt colouring_value_at_one(const Web& w) {
    BigInt v = tait_colorings(w.map());
    if ((w.num_vertices() / 2) % 2) v = -v;
    for (int i = 0; i < w.circles(); ++i) v *= 3;
    return v;
}

/// Connected after deleting the given edges (as smaller darts)?
inline bool connected_without(const CombMap& m, const std::vector<int>& removed) {
    const int n = m.num_vertices();
    if (n == 0) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int e : m.edges()) {
        if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
        parent[find(m.vertex(e))] = find(m.head(e));
    }
    int r = find(0);
    for (int v = 1; v < n; ++v)
        if (find(v) != r) return false;
    return true;
}

/// Brute-force isomorphism: try every image of dart 0 and propagate
/// through alpha and sigma (or sigma^-1 for a mirror match).
inline bool map_iso(const CombMap& a, const CombMap& b, bool reflections) {
    if (a.num_darts() != b.num_darts()) return false;
    const int n = a.num_darts();
    if (n == 0) return true;
    for (int mirror = 0; mirror < (reflections ? 2 : 1); ++mirror) {
        for (int t = 0; t < n; ++t) {
            std::vector<int> f(n, -1), g(n, -1);
            std::vector<int> stack{0};
            f[0] = t;
            g[t] = 0;
            bool ok = true;
            while (ok && !stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                int ya = b.alpha(f[x]);
                int ys = mirror ? b.sigma_inv(f[x]) : b.sigma(f[x]);
                for (auto [xx, yy] : {std::pair{a.alpha(x), ya}, std::pair{a.sigma(x), ys}}) {
                    if (f[xx] < 0 && g[yy] < 0) {
                        f[xx] = yy;
                        g[yy] = xx;
                        stack.push_back(xx);
                    } else if (f[xx] != yy) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok && std::find(f.begin(), f.end(), -1) == f.end()) return true;
        }
    }
    return false;
}

/// Count of dart bijections of a connected map commuting with alpha and sigma.
inline long long brute_automorphisms(const CombMap& m, bool reflections) {
    long long count = 0;
    const int n = m.num_darts();
    for (int mirror = 0; mirror < (reflections ? 2 : 1); ++mirror)
        for (int t = 0; t < n; ++t) {
            std::vector<int> f(n, -1);
            f[0] = t;
            std::vector<int> stack{0};
            bool ok = true;
            while (ok && !stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                int ys = mirror ? m.sigma_inv(f[x]) : m.sigma(f[x]);
                for (auto [xx, yy] : {std::pair{m.alpha(x), m.alpha(f[x])}, std::pair{m.sigma(x), ys}}) {
                    if (f[xx] < 0) {
                        f[xx] = yy;
                        stack.push_back(xx);
                    } else if (f[xx] != yy) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            std::vector<int> s = f;
            std::sort(s.begin(), s.end());
            bool bij = true;
            for (int i = 0; i < n; ++i) bij = bij && s[i] == i;
            count += bij;
        }
    return count;
}

/// Same map with darts relabelled by a random permutation.
inline CombMap relabel(const CombMap& m, std::mt19937_64& rng) {
    const int n = m.num_darts();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<int> al(n), si(n);
    for (int d = 0; d < n; ++d) {
        al[p[d]] = p[m.alpha(d)];
        si[p[d]] = p[m.sigma(d)];
    }
    return CombMap::from_permutations(al, si);
}

/// Random connected sum of 2 to max_parts catalog primes.
struct RandomSum {
    Web web;
    std::vector<Web> parts;
};

inline RandomSum random_sum(const std::vector<Web>& primes, std::mt19937_64& rng, int max_parts) {
    std::uniform_int_distribution<int> nparts(2, max_parts);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    int k = nparts(rng);
    RandomSum r{primes[pick(rng)], {}};
    r.parts.push_back(r.web);
    for (int i = 1; i < k; ++i) {
        const Web& b = primes[pick(rng)];
        auto ea = r.web.map().edges(), eb = b.map().edges();
        int da = ea[std::uniform_int_distribution<std::size_t>(0, ea.size() - 1)(rng)];
        int db = eb[std::uniform_int_distribution<std::size_t>(0, eb.size() - 1)(rng)];
        if (rng() & 1) db = b.map().alpha(db);
        r.web = connected_sum(r.web, da, b, db);
        r.parts.push_back(b);
    }
    return r;
}

/// Random Laurent polynomial in q^(1/2).
inline HalfLaurent random_poly(std::mt19937_64& rng, int span = 6, int coeff = 20) {
    HalfLaurent p;
    std::uniform_int_distribution<int> k(-span, span), c(-coeff, coeff), len(0, 6);
    for (int i = len(rng); i > 0; --i) p.add_term(k(rng), c(rng));
    return p;
}

}  // namespace testutil
