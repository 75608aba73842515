#pragma once
// Text formats for maps.
//
// SIMPLE (simple graphs only):
//     1: 2 4 5
//     ...
//     circles: 1          (optional)
// Vertex i lists its neighbours counterclockwise, 1-based.
//
// DART (multigraphs allowed):
//     darts: 6
//     v 1: 0 2 4
//     v 2: 1 5 3
//     e: 0 1
//     ...
//     circles: 1          (optional)
// Vertices 1-based, darts 0-based; a vertex line is its rotation.

#include "sl3web/combmap.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sl3web {

class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& msg, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class MapFormat { Simple, Dart };

struct MapFile {
    CombMap map;
    int circles = 0;
};

namespace detail {

struct Line {
    int number;
    std::string text;
};

inline std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string s;
    int n = 0;
    while (std::getline(in, s)) {
        ++n;
        auto hash = s.find('#');
        if (hash != std::string::npos) s.erase(hash);
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = s.find_last_not_of(" \t\r");
        out.push_back({n, s.substr(b, e - b + 1)});
    }
    return out;
}

inline long parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw FormatError("expected integer, got '" + tok + "'", line);
    }
    if (used != tok.size()) throw FormatError("expected integer, got '" + tok + "'", line);
    return v;
}

inline std::vector<long> parse_ints(const std::string& rest, int line) {
    std::istringstream in(rest);
    std::vector<long> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_int(tok, line));
    return out;
}

// "head: rest" -> (head, rest)
inline std::pair<std::string, std::string> split_colon(const Line& l) {
    auto c = l.text.find(':');
    if (c == std::string::npos) throw FormatError("missing ':'", l.number);
    auto head = l.text.substr(0, c);
    while (!head.empty() && (head.back() == ' ' || head.back() == '\t')) head.pop_back();
    return {head, l.text.substr(c + 1)};
}

inline int parse_circles(const std::string& rest, int line) {
    auto v = parse_ints(rest, line);
    if (v.size() != 1 || v[0] < 0) throw FormatError("circles needs one non-negative integer", line);
    return static_cast<int>(v[0]);
}

}  // namespace detail

inline MapFile parse_simple(std::string_view text) {
    auto lines = detail::content_lines(text);
    std::map<long, std::pair<std::vector<long>, int>> adj;
    int circles = 0;
    bool seen_circles = false;
    for (const auto& l : lines) {
        auto [head, rest] = detail::split_colon(l);
        if (seen_circles) throw FormatError("content after circles trailer", l.number);
        if (head == "circles") {
            circles = detail::parse_circles(rest, l.number);
            seen_circles = true;
            continue;
        }
        long v = detail::parse_int(head, l.number);
        if (v < 1) throw FormatError("vertex ids are 1-based", l.number);
        if (adj.count(v)) throw FormatError("vertex " + std::to_string(v) + " listed twice", l.number);
        auto nb = detail::parse_ints(rest, l.number);
        if (nb.empty()) throw FormatError("vertex " + std::to_string(v) + " has no neighbours", l.number);
        adj[v] = {nb, l.number};
    }
    const long nv = static_cast<long>(adj.size());
    if (nv > 0 && adj.rbegin()->first != nv) throw FormatError("vertex ids must be 1..V without gaps", 0);
    std::vector<int> offset(nv + 2, 0);
    for (long v = 1; v <= nv; ++v) offset[v + 1] = offset[v] + static_cast<int>(adj[v].first.size());
    const int n = offset[nv + 1];
    std::vector<int> alpha(n, -1), sigma(n);
    for (long v = 1; v <= nv; ++v) {
        const auto& [nb, line] = adj[v];
        int deg = static_cast<int>(nb.size());
        for (int i = 0; i < deg; ++i) {
            int d = offset[v] + i;
            sigma[d] = offset[v] + (i + 1) % deg;
            long w = nb[i];
            if (w < 1 || w > nv) throw FormatError("unknown neighbour " + std::to_string(w), line);
            if (w == v) throw FormatError("loop at vertex " + std::to_string(v), line);
            for (int j = 0; j < i; ++j)
                if (nb[j] == w) throw FormatError("repeated neighbour " + std::to_string(w) + " (use DART format for multigraphs)", line);
            const auto& back = adj[w].first;
            int pos = -1;
            for (int j = 0; j < static_cast<int>(back.size()); ++j)
                if (back[j] == v) pos = j;
            if (pos < 0)
                throw FormatError("vertex " + std::to_string(w) + " does not list " + std::to_string(v), line);
            alpha[d] = offset[w] + pos;
        }
    }
    try {
        return {CombMap::from_permutations(std::move(alpha), std::move(sigma)), circles};
    } catch (const MapError& e) {
        throw FormatError(e.what(), 0);
    }
}

inline MapFile parse_dart(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw FormatError("empty input", 0);
    auto [h0, r0] = detail::split_colon(lines[0]);
    if (h0 != "darts") throw FormatError("first line must be 'darts: N'", lines[0].number);
    auto nv0 = detail::parse_ints(r0, lines[0].number);
    if (nv0.size() != 1 || nv0[0] < 0 || nv0[0] % 2) throw FormatError("darts needs one even non-negative count", lines[0].number);
    const int n = static_cast<int>(nv0[0]);
    std::vector<int> alpha(n, -1), sigma(n, -1);
    std::vector<int> vline(n, 0), eline(n, 0);
    std::map<long, int> vids;
    int circles = 0;
    bool seen_circles = false;
    auto check_dart = [&](long d, int line) {
        if (d < 0 || d >= n) throw FormatError("dart " + std::to_string(d) + " out of range 0.." + std::to_string(n - 1), line);
        return static_cast<int>(d);
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        auto [head, rest] = detail::split_colon(l);
        if (seen_circles) throw FormatError("content after circles trailer", l.number);
        if (head == "circles") {
            circles = detail::parse_circles(rest, l.number);
            seen_circles = true;
        } else if (head == "e") {
            auto ds = detail::parse_ints(rest, l.number);
            if (ds.size() != 2) throw FormatError("edge line needs two darts", l.number);
            int a = check_dart(ds[0], l.number), b = check_dart(ds[1], l.number);
            if (a == b) throw FormatError("edge pairs dart " + std::to_string(a) + " with itself", l.number);
            for (int d : {a, b})
                if (eline[d]) throw FormatError("dart " + std::to_string(d) + " in two edges", l.number);
            eline[a] = eline[b] = l.number;
            alpha[a] = b;
            alpha[b] = a;
        } else if (head.size() > 1 && head[0] == 'v' && (head[1] == ' ' || head[1] == '\t')) {
            long id = detail::parse_int(head.substr(head.find_first_not_of(" \t", 1)), l.number);
            if (id < 1) throw FormatError("vertex ids are 1-based", l.number);
            if (vids.count(id)) throw FormatError("vertex " + std::to_string(id) + " listed twice", l.number);
            vids[id] = l.number;
            auto ds = detail::parse_ints(rest, l.number);
            if (ds.empty()) throw FormatError("vertex without darts", l.number);
            for (std::size_t k = 0; k < ds.size(); ++k) {
                int d = check_dart(ds[k], l.number);
                if (vline[d]) throw FormatError("dart " + std::to_string(d) + " at two vertices", l.number);
                vline[d] = l.number;
                sigma[d] = static_cast<int>(ds[(k + 1) % ds.size()]);
            }
        } else {
            throw FormatError("unknown line '" + head + "'", l.number);
        }
    }
    if (!vids.empty() && vids.rbegin()->first != static_cast<long>(vids.size()))
        throw FormatError("vertex ids must be 1..V without gaps", 0);
    for (int d = 0; d < n; ++d) {
        if (!vline[d]) throw FormatError("dart " + std::to_string(d) + " is at no vertex", 0);
        if (!eline[d]) throw FormatError("dart " + std::to_string(d) + " is in no edge", 0);
    }
    try {
        return {CombMap::from_permutations(std::move(alpha), std::move(sigma)), circles};
    } catch (const MapError& e) {
        throw FormatError(e.what(), 0);
    }
}

/// Detects the format from a leading "darts:" line.
inline MapFile parse_map(std::string_view text) {
    for (const auto& l : detail::content_lines(text)) {
        if (l.text.rfind("darts", 0) == 0) return parse_dart(text);
        return parse_simple(text);
    }
    return parse_simple(text);
}

inline std::string serialize_simple(const CombMap& m, int circles = 0) {
    if (auto d = m.find_multi_edge())
        throw std::invalid_argument("SIMPLE format needs a simple graph (multi-edge at dart " + std::to_string(*d) + ")");
    std::string out;
    for (int v = 0; v < m.num_vertices(); ++v) {
        out += std::to_string(v + 1) + ":";
        for (int d : m.rotation(v)) out += " " + std::to_string(m.head(d) + 1);
        out += "\n";
    }
    if (circles > 0) out += "circles: " + std::to_string(circles) + "\n";
    return out;
}

inline std::string serialize_dart(const CombMap& m, int circles = 0) {
    std::string out = "darts: " + std::to_string(m.num_darts()) + "\n";
    for (int v = 0; v < m.num_vertices(); ++v) {
        out += "v " + std::to_string(v + 1) + ":";
        for (int d : m.rotation(v)) out += " " + std::to_string(d);
        out += "\n";
    }
    for (int e : m.edges()) out += "e: " + std::to_string(e) + " " + std::to_string(m.alpha(e)) + "\n";
    if (circles > 0) out += "circles: " + std::to_string(circles) + "\n";
    return out;
}

inline std::string serialize_map(const CombMap& m, int circles, MapFormat f) {
    return f == MapFormat::Simple ? serialize_simple(m, circles) : serialize_dart(m, circles);
}

inline std::string serialize_web(const Web& w, MapFormat f) { return serialize_map(w.map(), w.circles(), f); }

inline Web parse_web(std::string_view text) {
    auto mf = parse_map(text);
    return Web::validate(std::move(mf.map), mf.circles);
}

}  // namespace sl3web
