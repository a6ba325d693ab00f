#pragma once

#include "tropikit/matrix.hpp"

#include <cstddef>
#include <vector>

namespace tropikit {

struct Edge {
    std::size_t src = 0;
    std::size_t dst = 0;
    double weight = 0.0;
};

// Weighted digraph; node ids are 0..n-1 and weights finite.
class Graph {
public:
    // Throws DomainError on out-of-range endpoints or non-finite weights.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t size() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
};

// Min-plus adjacency: +inf where no edge, parallel edges folded with min,
// self-loops on the diagonal.
SemiringMatrix adjacency_minplus(const Graph& g);

// All-pairs least path weights as the closure of the min-plus adjacency.
// Throws NegativeCycle if the closure does not stabilize.
SemiringMatrix shortest_paths(const Graph& g);

} // namespace tropikit
