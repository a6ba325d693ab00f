#pragma once

// Reference implementations used only by tests. None of these call into the
// library's algorithms; they work on plain doubles and integers.

#include "tropikit/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <vector>

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Edge {
    std::size_t src;
    std::size_t dst;
    double w;
};

using Dense = std::vector<std::vector<double>>;

// Classical Bellman-Ford from every source. Returns nullopt-like empty
// matrix when a negative cycle is reachable.
inline bool bellman_ford_all(std::size_t n, const std::vector<Edge>& edges, Dense& out) {
    out.assign(n, std::vector<double>(n, kInf));
    for (std::size_t s = 0; s < n; ++s) {
        auto& d = out[s];
        d[s] = 0.0;
        for (std::size_t round = 0; round + 1 < n; ++round) {
            for (const auto& e : edges) {
                if (d[e.src] != kInf && d[e.src] + e.w < d[e.dst]) {
                    d[e.dst] = d[e.src] + e.w;
                }
            }
        }
        for (const auto& e : edges) {
            if (d[e.src] != kInf && d[e.src] + e.w < d[e.dst]) {
                return false;
            }
        }
        // A negative self-loop or cycle through s itself.
        for (const auto& e : edges) {
            if (e.src == e.dst && e.w < 0 && d[e.src] != kInf) {
                return false;
            }
        }
    }
    return true;
}

// Dijkstra with a binary heap; weights must be non-negative.
inline Dense dijkstra_all(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const auto& e : edges) {
        adj[e.src].push_back({e.dst, e.w});
    }
    Dense out(n, std::vector<double>(n, kInf));
    for (std::size_t s = 0; s < n; ++s) {
        auto& d = out[s];
        using Item = std::pair<double, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        d[s] = 0.0;
        pq.push({0.0, s});
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (du > d[u]) {
                continue;
            }
            for (auto [v, w] : adj[u]) {
                if (du + w < d[v]) {
                    d[v] = du + w;
                    pq.push({d[v], v});
                }
            }
        }
    }
    return out;
}

// Least path weights by enumerating every simple path (n <= 6).
inline Dense simple_path_enumeration(const Dense& w) {
    const std::size_t n = w.size();
    Dense best(n, std::vector<double>(n, kInf));
    std::vector<bool> seen(n);
    std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t s,
                                                                     std::size_t u, double acc) {
        best[s][u] = std::min(best[s][u], acc);
        for (std::size_t v = 0; v < n; ++v) {
            if (!seen[v] && w[u][v] != kInf) {
                seen[v] = true;
                walk(s, v, acc + w[u][v]);
                seen[v] = false;
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), false);
        seen[s] = true;
        walk(s, s, 0.0);
    }
    return best;
}

using tropikit::Rational;
using Pt = std::vector<Rational>;

// O(n^3) hull: keeps p if some pair (p, q) has every point weakly left of
// p -> q and no point strictly beyond the segment on its line. Returns the
// vertex set sorted lexicographically.
inline std::vector<Pt> brute_hull_vertices(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) {
        return pts;
    }
    // A point is a vertex iff it is not a convex combination of two or three
    // others; in the plane, check triangles and segments.
    auto in_segment = [](const Pt& a, const Pt& b, const Pt& p) {
        const Rational cr = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
        if (cr != 0) {
            return false;
        }
        return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
               std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
    };
    auto orient = [](const Pt& a, const Pt& b, const Pt& c) {
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    };
    auto in_triangle = [&](const Pt& a, const Pt& b, const Pt& c, const Pt& p) {
        const Rational o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
        const bool neg = o1 < 0 || o2 < 0 || o3 < 0;
        const bool pos = o1 > 0 || o2 > 0 || o3 > 0;
        return !(neg && pos);
    };
    std::vector<Pt> out;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool inside = false;
        for (std::size_t a = 0; a < n && !inside; ++a) {
            for (std::size_t b = a + 1; b < n && !inside; ++b) {
                if (a == i || b == i) {
                    continue;
                }
                if (in_segment(pts[a], pts[b], pts[i])) {
                    inside = true;
                }
                for (std::size_t c = b + 1; c < n && !inside; ++c) {
                    if (c == i) {
                        continue;
                    }
                    if (orient(pts[a], pts[b], pts[c]) != 0 &&
                        in_triangle(pts[a], pts[b], pts[c], pts[i])) {
                        inside = true;
                    }
                }
            }
        }
        if (!inside) {
            out.push_back(pts[i]);
        }
    }
    return out;
}

// Portable uniform draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 eng_;
};

} // namespace oracle
