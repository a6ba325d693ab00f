#pragma once

#include "tropikit/graph.hpp"
#include "tropikit/interval.hpp"
#include "tropikit/matrix.hpp"
#include "tropikit/polynomial.hpp"
#include "tropikit/polytope.hpp"
#include "tropikit/sampled_function.hpp"
#include "tropikit/tropical_curve.hpp"

#include <string>
#include <vector>

// Text formats. Every parser throws ParseError with a line number; every
// formatter is lossless (17 significant digits, p/q rationals, inf tokens)
// so emitted files re-parse into equal values.
namespace tropikit::io {

// `n <count>` header, then `src dst weight` per line; `#` starts a comment.
Graph parse_graph(const std::string& text);

struct IntervalEdge {
    std::size_t src = 0;
    std::size_t dst = 0;
    double wmin = 0.0;
    double wmax = 0.0;
};

struct IntervalGraph {
    std::size_t n = 0;
    std::vector<IntervalEdge> edges;
};

// `n <count>` header, then `src dst wmin wmax` per line.
IntervalGraph parse_interval_graph(const std::string& text);

// Interval adjacency in the given semiring: absent edges are [0, 0],
// parallel edges are folded with (+). Edge bounds are numeric [wmin, wmax].
IntervalMatrix interval_adjacency(const IntervalGraph& g, const SemiringSpec& spec);

// Tab-separated rows.
SemiringMatrix parse_matrix(const std::string& text, const SemiringSpec& spec);
std::string format_matrix(const SemiringMatrix& m);

// Tab-separated rows of `[min,max]` cells in numeric order.
IntervalMatrix parse_interval_matrix(const std::string& text, const SemiringSpec& spec);
std::string format_interval_matrix(const IntervalMatrix& m);

// `n <dim>` header, then `coeff d1 d2 ...` per line with rational exponents.
GenPolynomial parse_polynomial(const std::string& text);
std::string format_polynomial(const GenPolynomial& f);

// Same layout as a polynomial file with real max-plus coefficients; n == 2.
std::vector<TropicalTerm> parse_tropical_terms(const std::string& text);

// `x1 y1; x2 y2; ...` on one line.
std::string format_polytope(const Polytope& p);
Polytope parse_polytope(std::size_t n, const std::string& line);

// CSV with header `base_x,base_y,dir_x,dir_y,t0,t1`.
std::string format_curve(const TropicalCurve& c);
std::vector<CurvePiece> parse_curve(const std::string& text);

// `start <a> step <d> convention <maxplus|minplus>`, then one value per line.
SampledFunction parse_sampled_function(const std::string& text);
std::string format_sampled_function(const SampledFunction& f);

} // namespace tropikit::io
