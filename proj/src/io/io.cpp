#include "tropikit/io.hpp"

#include "tropikit/errors.hpp"

#include <cmath>
#include <sstream>

namespace tropikit::io {
namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

// Non-empty lines with `#` comments removed, split on whitespace.
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream fields(raw);
        Line line{number, {}};
        for (std::string tok; fields >> tok;) {
            line.tokens.push_back(std::move(tok));
        }
        if (!line.tokens.empty()) {
            out.push_back(std::move(line));
        }
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        fail(line, e.what());
    }
}

std::size_t parse_index(const Line& l, const std::string& tok) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        if (tok.empty() || tok.front() == '-' || tok.front() == '+') {
            throw std::invalid_argument(tok);
        }
        v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        fail(l.number, "expected a non-negative integer, got '" + tok + "'");
    }
    if (pos != tok.size()) {
        fail(l.number, "expected a non-negative integer, got '" + tok + "'");
    }
    return static_cast<std::size_t>(v);
}

double parse_finite(const Line& l, const std::string& tok) {
    const ExtReal v = at_line(l.number, [&] { return parse_ext(tok); });
    if (!v.is_finite()) {
        fail(l.number, "expected a finite number, got '" + tok + "'");
    }
    return v.value();
}

// `n <count>` header; returns count and the remaining lines.
std::size_t parse_header(const std::vector<Line>& lines, const char* what) {
    if (lines.empty()) {
        throw ParseError(std::string("empty ") + what + " file");
    }
    const Line& h = lines.front();
    if (h.tokens.size() != 2 || h.tokens[0] != "n") {
        fail(h.number, "expected header 'n <count>'");
    }
    const std::size_t n = parse_index(h, h.tokens[1]);
    if (n == 0) {
        fail(h.number, "count must be positive");
    }
    return n;
}

template <class Fn>
std::vector<std::vector<std::string>> split_rows(const std::string& text, Fn&& check) {
    std::vector<std::vector<std::string>> rows;
    for (const Line& l : tokenize(text)) {
        check(l);
        rows.push_back(l.tokens);
    }
    return rows;
}

std::string join_tab(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) {
            out += '\t';
        }
        out += cells[i];
    }
    return out;
}

std::string format_optional_bound(const std::optional<Rational>& r, const char* inf_token) {
    return r ? format_rational(*r) : inf_token;
}

} // namespace

Graph parse_graph(const std::string& text) {
    const auto lines = tokenize(text);
    const std::size_t n = parse_header(lines, "graph");
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& l = lines[k];
        if (l.tokens.size() != 3) {
            fail(l.number, "expected 'src dst weight'");
        }
        Edge e{parse_index(l, l.tokens[0]), parse_index(l, l.tokens[1]),
               parse_finite(l, l.tokens[2])};
        if (e.src >= n || e.dst >= n) {
            fail(l.number, "node index out of range");
        }
        edges.push_back(e);
    }
    return {n, std::move(edges)};
}

IntervalGraph parse_interval_graph(const std::string& text) {
    const auto lines = tokenize(text);
    IntervalGraph g;
    g.n = parse_header(lines, "interval graph");
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& l = lines[k];
        if (l.tokens.size() != 4) {
            fail(l.number, "expected 'src dst wmin wmax'");
        }
        IntervalEdge e{parse_index(l, l.tokens[0]), parse_index(l, l.tokens[1]),
                       parse_finite(l, l.tokens[2]), parse_finite(l, l.tokens[3])};
        if (e.src >= g.n || e.dst >= g.n) {
            fail(l.number, "node index out of range");
        }
        if (e.wmax < e.wmin) {
            fail(l.number, "wmin exceeds wmax");
        }
        g.edges.push_back(e);
    }
    return g;
}

IntervalMatrix interval_adjacency(const IntervalGraph& g, const SemiringSpec& spec) {
    std::vector<IntervalValue> cells(g.n * g.n, IntervalValue::point(spec.zero(), spec));
    for (const IntervalEdge& e : g.edges) {
        IntervalValue& cell = cells[e.src * g.n + e.dst];
        cell = interval_ops(cell, IntervalValue::from_numeric(e.wmin, e.wmax, spec),
                            IntervalOp::add);
    }
    return {g.n, g.n, std::move(cells)};
}

SemiringMatrix parse_matrix(const std::string& text, const SemiringSpec& spec) {
    std::vector<ExtReal> entries;
    std::size_t cols = 0;
    std::size_t rows = 0;
    for (const Line& l : tokenize(text)) {
        if (rows == 0) {
            cols = l.tokens.size();
        } else if (l.tokens.size() != cols) {
            fail(l.number, "row has " + std::to_string(l.tokens.size()) + " cells, expected " +
                               std::to_string(cols));
        }
        for (const auto& tok : l.tokens) {
            const ExtReal v = at_line(l.number, [&] { return parse_ext(tok); });
            if (!spec.contains(v)) {
                fail(l.number, tok + " is outside the domain of " + spec.name());
            }
            entries.push_back(v);
        }
        ++rows;
    }
    if (rows == 0) {
        throw ParseError("empty matrix");
    }
    return {rows, cols, std::move(entries), spec};
}

std::string format_matrix(const SemiringMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> cells;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells.push_back(format_ext(m(i, j)));
        }
        out += join_tab(cells) + '\n';
    }
    return out;
}

IntervalMatrix parse_interval_matrix(const std::string& text, const SemiringSpec& spec) {
    std::vector<IntervalValue> entries;
    std::size_t cols = 0;
    std::size_t rows = 0;
    for (const Line& l : tokenize(text)) {
        if (rows == 0) {
            cols = l.tokens.size();
        } else if (l.tokens.size() != cols) {
            fail(l.number, "ragged interval matrix");
        }
        for (const auto& tok : l.tokens) {
            const auto comma = tok.find(',');
            if (tok.size() < 5 || tok.front() != '[' || tok.back() != ']' ||
                comma == std::string::npos) {
                fail(l.number, "expected '[min,max]', got '" + tok + "'");
            }
            const ExtReal a = at_line(l.number, [&] { return parse_ext(tok.substr(1, comma - 1)); });
            const ExtReal b = at_line(l.number, [&] {
                return parse_ext(tok.substr(comma + 1, tok.size() - comma - 2));
            });
            if (b.value() < a.value() || !spec.contains(a) || !spec.contains(b)) {
                fail(l.number, "invalid interval '" + tok + "' for " + spec.name());
            }
            entries.push_back(IntervalValue::from_numeric(a, b, spec));
        }
        ++rows;
    }
    if (rows == 0) {
        throw ParseError("empty interval matrix");
    }
    return {rows, cols, std::move(entries)};
}

std::string format_interval_matrix(const IntervalMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> cells;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const IntervalValue& v = m(i, j);
            cells.push_back("[" + format_double(v.numeric_min()) + "," +
                            format_double(v.numeric_max()) + "]");
        }
        out += join_tab(cells) + '\n';
    }
    return out;
}

GenPolynomial parse_polynomial(const std::string& text) {
    const auto lines = tokenize(text);
    const std::size_t n = parse_header(lines, "polynomial");
    std::vector<Term> terms;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& l = lines[k];
        if (l.tokens.size() != n + 1) {
            fail(l.number, "expected a coefficient and " + std::to_string(n) + " exponents");
        }
        Term t{parse_finite(l, l.tokens[0]), {}};
        if (t.coeff == 0.0) {
            fail(l.number, "coefficients must be nonzero");
        }
        for (std::size_t i = 1; i <= n; ++i) {
            t.exponent.push_back(at_line(l.number, [&] { return parse_rational(l.tokens[i]); }));
        }
        terms.push_back(std::move(t));
    }
    if (terms.empty()) {
        throw ParseError("polynomial has no terms");
    }
    try {
        return {n, std::move(terms)};
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string format_polynomial(const GenPolynomial& f) {
    std::string out = "n " + std::to_string(f.dim()) + "\n";
    for (const Term& t : f.terms()) {
        out += format_double(t.coeff);
        for (const auto& d : t.exponent) {
            out += ' ' + format_rational(d);
        }
        out += '\n';
    }
    return out;
}

std::vector<TropicalTerm> parse_tropical_terms(const std::string& text) {
    const auto lines = tokenize(text);
    const std::size_t n = parse_header(lines, "tropical polynomial");
    if (n != 2) {
        fail(lines.front().number, "tropical curves are planar: expected 'n 2'");
    }
    std::vector<TropicalTerm> terms;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& l = lines[k];
        if (l.tokens.size() != 3) {
            fail(l.number, "expected 'coeff d1 d2'");
        }
        terms.push_back({parse_finite(l, l.tokens[0]),
                         {at_line(l.number, [&] { return parse_rational(l.tokens[1]); }),
                          at_line(l.number, [&] { return parse_rational(l.tokens[2]); })}});
    }
    return terms;
}

std::string format_polytope(const Polytope& p) {
    std::string out;
    for (std::size_t k = 0; k < p.vertices().size(); ++k) {
        if (k) {
            out += "; ";
        }
        const auto& v = p.vertices()[k];
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) {
                out += ' ';
            }
            out += format_rational(v[i]);
        }
    }
    return out;
}

Polytope parse_polytope(std::size_t n, const std::string& line) {
    std::vector<RationalVector> pts;
    std::istringstream in(line);
    for (std::string chunk; std::getline(in, chunk, ';');) {
        std::istringstream coords(chunk);
        RationalVector v;
        for (std::string tok; coords >> tok;) {
            v.push_back(parse_rational(tok));
        }
        if (v.size() != n) {
            throw ParseError("vertex with " + std::to_string(v.size()) + " coordinates, expected " +
                             std::to_string(n));
        }
        pts.push_back(std::move(v));
    }
    if (pts.empty()) {
        throw ParseError("polytope has no vertices");
    }
    return {n, std::move(pts)};
}

std::string format_curve(const TropicalCurve& c) {
    std::string out = "base_x,base_y,dir_x,dir_y,t0,t1\n";
    for (const CurvePiece& p : c.pieces) {
        out += format_rational(p.base[0]) + ',' + format_rational(p.base[1]) + ',' +
               format_rational(p.direction[0]) + ',' + format_rational(p.direction[1]) + ',' +
               format_optional_bound(p.t0, "-inf") + ',' + format_optional_bound(p.t1, "inf") +
               '\n';
    }
    return out;
}

std::vector<CurvePiece> parse_curve(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    std::vector<CurvePiece> pieces;
    bool header = false;
    while (std::getline(in, raw)) {
        ++number;
        if (raw.empty()) {
            continue;
        }
        if (!header) {
            if (raw != "base_x,base_y,dir_x,dir_y,t0,t1") {
                fail(number, "missing curve CSV header");
            }
            header = true;
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream fields(raw);
        for (std::string cell; std::getline(fields, cell, ',');) {
            cells.push_back(cell);
        }
        if (cells.size() != 6) {
            fail(number, "expected 6 columns");
        }
        const auto rat = [&](const std::string& s) {
            return at_line(number, [&] { return parse_rational(s); });
        };
        CurvePiece p{{rat(cells[0]), rat(cells[1])}, {rat(cells[2]), rat(cells[3])}, {}, {}};
        if (cells[4] != "-inf") {
            p.t0 = rat(cells[4]);
        }
        if (cells[5] != "inf") {
            p.t1 = rat(cells[5]);
        }
        pieces.push_back(std::move(p));
    }
    if (!header) {
        throw ParseError("empty curve file");
    }
    return pieces;
}

SampledFunction parse_sampled_function(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError("empty sampled-function file");
    }
    const Line& h = lines.front();
    if (h.tokens.size() != 6 || h.tokens[0] != "start" || h.tokens[2] != "step" ||
        h.tokens[4] != "convention") {
        fail(h.number, "expected header 'start <a> step <d> convention <maxplus|minplus>'");
    }
    const double start = parse_finite(h, h.tokens[1]);
    const double step = parse_finite(h, h.tokens[3]);
    Convention conv{};
    if (h.tokens[5] == "maxplus") {
        conv = Convention::maxplus;
    } else if (h.tokens[5] == "minplus") {
        conv = Convention::minplus;
    } else {
        fail(h.number, "convention must be maxplus or minplus");
    }
    std::vector<ExtReal> values;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& l = lines[k];
        if (l.tokens.size() != 1) {
            fail(l.number, "expected one value per line");
        }
        values.push_back(at_line(l.number, [&] { return parse_ext(l.tokens[0]); }));
    }
    try {
        return {start, step, std::move(values), conv};
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string format_sampled_function(const SampledFunction& f) {
    std::string out = "start " + format_double(f.start()) + " step " + format_double(f.step()) +
                      " convention " + to_string(f.convention()) + "\n";
    for (ExtReal v : f.values()) {
        out += format_ext(v) + '\n';
    }
    return out;
}

} // namespace tropikit::io
