#include "tropikit/graph.hpp"

#include "tropikit/errors.hpp"

#include <cmath>
#include <string>

namespace tropikit {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ == 0) {
        throw DomainError("graph needs at least one node");
    }
    for (const Edge& e : edges_) {
        if (e.src >= n_ || e.dst >= n_) {
            throw DomainError("edge " + std::to_string(e.src) + "->" + std::to_string(e.dst) +
                              " leaves the node range 0.." + std::to_string(n_ - 1));
        }
        if (!std::isfinite(e.weight)) {
            throw DomainError("edge weights must be finite");
        }
    }
}

SemiringMatrix adjacency_minplus(const Graph& g) {
    SemiringMatrix a = SemiringMatrix::zeros(g.size(), g.size(), minplus());
    for (const Edge& e : g.edges()) {
        a.set(e.src, e.dst, a.spec().add_unchecked(a(e.src, e.dst), ExtReal(e.weight)));
    }
    return a;
}

SemiringMatrix shortest_paths(const Graph& g) {
    try {
        return kleene_star(adjacency_minplus(g));
    } catch (const NonConvergent& e) {
        throw NegativeCycle("graph has a negative-weight cycle", e.iterations());
    }
}

} // namespace tropikit
