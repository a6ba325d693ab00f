// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include "support/oracles.hpp"
#include "tropikit/axioms.hpp"
#include "tropikit/errors.hpp"
#include "tropikit/graph.hpp"
#include "tropikit/interval.hpp"
#include "tropikit/polynomial.hpp"
#include "tropikit/polytope.hpp"
#include "tropikit/transforms.hpp"
#include "tropikit/tropical_curve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace tropikit;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Tolerances and limits pinned here.
constexpr double kRelTol = 1e-12;
constexpr double kIdentityTol = 1e-9;
constexpr double kAxiomSeconds = 5.0;
constexpr double kShortestPathSeconds = 10.0;
constexpr double kIntervalSeconds = 30.0;
constexpr double kTransformSeconds = 20.0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds; // 0: no limit
    std::function<Outcome()> body;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// ---------------------------------------------------------------- 1

SemiringSpec minmax_instance() {
    return SemiringSpec({
        .name = "minmax",
        .domain = "R u {-inf, +inf}",
        .contains = [](double x) { return !std::isnan(x); },
        .add = [](double a, double b) { return std::min(a, b); },
        .mul = [](double a, double b) { return std::max(a, b); },
        .zero = inf,
        .one = -inf,
        .idempotent = true,
    });
}

Outcome axioms() {
    Outcome o;
    SemiringRegistry reg;
    reg.add(minmax_instance());
    std::vector<SemiringSpec> idem;
    for (const auto& name : reg.names()) {
        const auto s = *reg.find(name);
        if (s.idempotent()) {
            idem.push_back(s);
        }
    }
    if (idem.size() != 5) {
        o.fail("expected five idempotent instances, found " + std::to_string(idem.size()));
    }
    const AxiomOptions opts{.samples = 10000, .seed = 1, .rel_tol = kRelTol};
    for (const auto& s : idem) {
        const auto r = check_axioms(s, opts);
        if (!r.passed() || !r.exact) {
            o.fail(s.name() + " failed an exact law");
        }
    }
    for (const auto& s : {nonneg(), deformed(DeformationParam(0.5))}) {
        const auto r = check_axioms(s, opts);
        if (!r.passed() || r.exact) {
            o.fail(s.name() + " did not match the tolerance-based expectations");
        }
        for (const auto& law : r.laws) {
            if (law.law == "add_idempotent" && law.expected_to_hold) {
                o.fail("idempotency expected to hold for " + s.name());
            }
        }
    }
    o.detail = o.pass ? std::to_string(idem.size()) + " idempotent + nonneg + deformed, 10000 "
                                                       "samples each"
                      : o.detail;
    return o;
}

// ---------------------------------------------------------------- 2

Outcome deformation_bound() {
    Outcome o;
    oracle::Rng rng(2);
    std::size_t checks = 0;
    for (int k = 0; k < 1000; ++k) {
        const double u = rng.uniform(-100, 100);
        const double v = rng.uniform(-100, 100);
        for (double h : {1.0, 0.1, 0.01, 0.001}) {
            const DeformationParam hp(h);
            const double gap = deformed_add(u, v, hp).value() - std::max(u, v);
            const double slack = kRelTol * std::max({1.0, std::abs(u), std::abs(v)});
            if (gap < -slack || gap > h * std::numbers::ln2 + slack) {
                o.fail("gap " + fmt(gap) + " out of [0, h ln 2] at h=" + fmt(h));
            }
            const double same = deformed_add(u, u, hp).value() - u;
            if (std::abs(same - h * std::numbers::ln2) > slack) {
                o.fail("u = v does not attain h ln 2 at h=" + fmt(h));
            }
            checks += 2;
        }
    }
    if (o.pass) {
        o.detail = std::to_string(checks) + " checks";
    }
    return o;
}

// ---------------------------------------------------------------- 3

std::vector<Edge> random_edges(oracle::Rng& rng, std::size_t n, double p, int lo, int hi) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (rng.chance(p)) {
                edges.push_back({i, j, static_cast<double>(rng.integer(lo, hi))});
            }
        }
    }
    return edges;
}

std::vector<oracle::Edge> plain(const std::vector<Edge>& edges) {
    std::vector<oracle::Edge> out;
    for (const auto& e : edges) {
        out.push_back({e.src, e.dst, e.weight});
    }
    return out;
}

Outcome shortest_path_oracles() {
    Outcome o;
    oracle::Rng rng(3);
    for (int k = 0; k < 500; ++k) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 12));
        const auto edges = random_edges(rng, n, rng.uniform(0.1, 0.6), 0, 10);
        const Graph g(n, edges);
        const auto sp = shortest_paths(g);
        oracle::Dense bf;
        if (!oracle::bellman_ford_all(n, plain(edges), bf)) {
            o.fail("oracle saw a negative cycle");
            continue;
        }
        const auto dj = oracle::dijkstra_all(n, plain(edges));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (sp(i, j) != ExtReal(bf[i][j]) || sp(i, j) != ExtReal(dj[i][j])) {
                    o.fail("graph " + std::to_string(k) + " differs from the oracles");
                }
            }
        }
        const auto h = adjacency_minplus(g);
        const auto f = SemiringMatrix::identity(n, minplus());
        const auto jac = solve_bellman_jacobi(h, f);
        const auto gs = solve_bellman_gauss_seidel(h, f);
        const auto star = kleene_star(h) * f;
        if (!(jac == gs) || !(jac == star) || !(jac == sp)) {
            o.fail("graph " + std::to_string(k) + ": solvers disagree");
        }
    }
    if (o.pass) {
        o.detail = "500 graphs, all pairs";
    }
    return o;
}

// ---------------------------------------------------------------- 4

Outcome negative_cycles() {
    Outcome o;
    oracle::Rng rng(4);
    for (int k = 0; k < 100; ++k) {
        const auto n = static_cast<std::size_t>(rng.integer(2, 12));
        auto edges = random_edges(rng, n, 0.3, 0, 10);
        // Plant a cycle through a random subset of nodes with negative total.
        std::vector<std::size_t> nodes(n);
        for (std::size_t i = 0; i < n; ++i) {
            nodes[i] = i;
        }
        for (std::size_t i = n - 1; i > 0; --i) {
            std::swap(nodes[i], nodes[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(i)))]);
        }
        const auto len = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n)));
        for (std::size_t i = 0; i < len; ++i) {
            const double w = i == 0 ? -static_cast<double>(10 * len + 1) : 10.0;
            edges.push_back({nodes[i], nodes[(i + 1) % len], w});
        }
        oracle::Dense bf;
        if (oracle::bellman_ford_all(n, plain(edges), bf)) {
            o.fail("planted cycle not negative");
            continue;
        }
        try {
            (void)shortest_paths(Graph(n, edges));
            o.fail("graph " + std::to_string(k) + ": no error");
        } catch (const NegativeCycle& e) {
            if (e.iterations() > n + 1) {
                o.fail("detected after " + std::to_string(e.iterations()) + " iterations");
            }
        }
        try {
            const auto h = adjacency_minplus(Graph(n, edges));
            (void)solve_bellman_jacobi(h, SemiringMatrix::identity(n, minplus()));
            o.fail("graph " + std::to_string(k) + ": Jacobi did not diverge");
        } catch (const NonConvergent& e) {
            if (e.iterations() > n + 1) {
                o.fail("Jacobi gave up after " + std::to_string(e.iterations()) + " iterations");
            }
        }
    }
    if (o.pass) {
        o.detail = "100 graphs";
    }
    return o;
}

// ---------------------------------------------------------------- 5

Outcome interval_containment() {
    Outcome o;
    oracle::Rng rng(5);
    const std::size_t n = 6;
    const auto sp = minplus();
    std::size_t selections = 0;
    for (int k = 0; k < 200; ++k) {
        std::vector<IntervalValue> he;
        for (std::size_t c = 0; c < n * n; ++c) {
            if (rng.chance(0.55)) {
                he.push_back(IntervalValue::point(inf, sp));
            } else {
                const double a = static_cast<double>(rng.integer(0, 10));
                he.push_back(IntervalValue::from_numeric(a, a + rng.uniform(0, 5), sp));
            }
        }
        std::vector<IntervalValue> fe;
        for (std::size_t c = 0; c < n * n; ++c) {
            const bool diag = c / n == c % n;
            fe.push_back(diag ? IntervalValue::from_numeric(0, rng.uniform(0, 2), sp)
                              : IntervalValue::point(inf, sp));
        }
        const IntervalMatrix h(n, n, he);
        const IntervalMatrix f(n, n, fe);
        const auto x = interval_bellman(h, f);
        if (!(x.lower() == solve_bellman_jacobi(h.lower(), f.lower())) ||
            !(x.upper() == solve_bellman_jacobi(h.upper(), f.upper()))) {
            o.fail("instance " + std::to_string(k) + ": endpoints not attained");
        }
        const auto pick = [&](const IntervalValue& c) {
            const double lo = c.numeric_min();
            const double hi = c.numeric_max();
            if (lo == hi) {
                return ExtReal(lo);
            }
            // Hit the endpoints now and then, not only the interior.
            const double r = rng.unit();
            return ExtReal(r < 0.1 ? lo : r < 0.2 ? hi : rng.uniform(lo, hi));
        };
        for (int s = 0; s < 1000; ++s) {
            std::vector<ExtReal> hp, fp;
            for (const auto& c : he) {
                hp.push_back(pick(c));
            }
            for (const auto& c : fe) {
                fp.push_back(pick(c));
            }
            const auto sol = solve_bellman_jacobi(SemiringMatrix(n, n, hp, sp),
                                                  SemiringMatrix(n, n, fp, sp));
            if (!x.contains(sol)) {
                o.fail("instance " + std::to_string(k) + ": point solution escapes");
            }
            ++selections;
        }
    }
    if (o.pass) {
        o.detail = "200 instances, " + std::to_string(selections) + " selections";
    }
    return o;
}

// ---------------------------------------------------------------- 6, 7

RationalVector ints(std::initializer_list<int> xs) {
    RationalVector v;
    for (int x : xs) {
        v.emplace_back(x);
    }
    return v;
}

GenPolynomial random_positive(oracle::Rng& rng) {
    std::vector<Term> terms;
    for (std::int64_t t = 0, c = rng.integer(1, 6); t < c; ++t) {
        terms.push_back({rng.uniform(0.1, 10.0),
                         {Rational(rng.integer(0, 5)), Rational(rng.integer(0, 5))}});
    }
    return GenPolynomial(2, terms);
}

Outcome newton_homomorphism() {
    Outcome o;
    oracle::Rng rng(6);
    for (int k = 0; k < 300; ++k) {
        const auto f = random_positive(rng);
        const auto g = random_positive(rng);
        const auto nf = newton_set(f, true);
        const auto ng = newton_set(g, true);
        if (!(newton_set(f * g) == polytope_semiring_ops(nf, ng, PolytopeOp::mul))) {
            o.fail("pair " + std::to_string(k) + ": N(fg) differs");
        }
        if (!(newton_set(f + g) == polytope_semiring_ops(nf, ng, PolytopeOp::add))) {
            o.fail("pair " + std::to_string(k) + ": N(f+g) differs");
        }
    }
    // Degree example: full-support polynomials of degree n and m.
    const auto dense = [](int deg) {
        std::vector<Term> t;
        for (int i = 0; i <= deg; ++i) {
            t.push_back({1.0 + i, ints({i})});
        }
        return GenPolynomial(1, t);
    };
    for (int n = 0; n <= 6; ++n) {
        for (int m = 0; m <= 6; ++m) {
            const auto nf = newton_set(dense(n));
            if (!(nf == Polytope(1, {ints({0}), ints({n})}))) {
                o.fail("N(f) is not [0, n]");
            }
            const auto prod = polytope_semiring_ops(nf, newton_set(dense(m)), PolytopeOp::mul);
            if (!(prod == Polytope(1, {ints({0}), ints({n + m})})) ||
                !(prod == newton_set(dense(n) * dense(m)))) {
                o.fail("[0,n] (.) [0,m] is not [0,n+m]");
            }
        }
    }
    if (o.pass) {
        o.detail = "300 pairs exact, degrees 0..6";
    }
    return o;
}

Outcome dequantization_limit() {
    Outcome o;
    oracle::Rng rng(7);
    double worst_ratio = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto f = random_positive(rng);
        const auto g = random_positive(rng);
        const double x[] = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
        double max_log = 0.0;
        for (const auto& t : f.terms()) {
            max_log = std::max(max_log, std::abs(std::log(t.coeff)));
        }
        const double lim = dequantize_limit(f, x).value();
        for (double h : {1.0, 0.1, 0.01}) {
            const DeformationParam hp(h);
            const double fh = eval_dequantized(f, x, hp).value();
            const double bound = h * (std::log(static_cast<double>(f.terms().size())) + max_log);
            if (std::abs(fh - lim) > bound + kRelTol * std::max(1.0, std::abs(lim))) {
                o.fail("bound violated at h=" + fmt(h));
            }
            if (bound > 0) {
                worst_ratio = std::max(worst_ratio, std::abs(fh - lim) / bound);
            }
            const double prod = eval_dequantized(f * g, x, hp).value();
            const double sum = fh + eval_dequantized(g, x, hp).value();
            if (std::abs(prod - sum) > kIdentityTol) {
                o.fail("product identity off by " + fmt(prod - sum));
            }
        }
        const double both = dequantize_limit(f + g, x).value();
        if (std::abs(both - std::max(lim, dequantize_limit(g, x).value())) > kIdentityTol) {
            o.fail("max rule for sums violated");
        }
    }
    if (o.pass) {
        o.detail = "100 polynomials, worst |f_h - f|/bound " + fmt(worst_ratio);
    }
    return o;
}

// ---------------------------------------------------------------- 8

Outcome tropical_line() {
    Outcome o;
    const auto p = [](int a, int b) { return Point2{Rational(a), Rational(b)}; };
    const auto c = tropical_curve_2d({{0, p(1, 0)}, {0, p(0, 1)}, {0, p(0, 0)}});
    std::vector<Point2> dirs;
    for (const auto& piece : c.pieces) {
        if (piece.base != p(0, 0) || piece.t0 != Rational(0) || piece.t1.has_value()) {
            o.fail("piece is not a ray from the origin");
        }
        dirs.push_back(piece.direction);
    }
    std::sort(dirs.begin(), dirs.end());
    if (dirs != std::vector<Point2>{p(-1, 0), p(0, -1), p(1, 1)}) {
        o.fail("ray directions differ");
    }
    const auto worst = [&](double h) {
        double w = 0.0;
        for (const auto& q : amoeba_line_sample(DeformationParam(h), 64)) {
            w = std::max(w, distance_to_curve(c, q[0], q[1]));
        }
        return w;
    };
    const double d1 = worst(1.0);
    const double d01 = worst(0.1);
    if (!(d01 < d1)) {
        o.fail("amoeba distance does not shrink");
    }
    if (o.pass) {
        o.detail = "3 rays; max distance " + fmt(d1) + " (h=1) > " + fmt(d01) + " (h=0.1)";
    }
    return o;
}

// ---------------------------------------------------------------- 9

constexpr std::size_t kGrid = 2001;

SampledFunction random_support(oracle::Rng& rng, Convention c, double start, double step) {
    const double zero = c == Convention::maxplus ? -inf : inf;
    std::vector<ExtReal> v(kGrid, ExtReal(zero));
    // Finite support on a random window.
    const auto a = static_cast<std::size_t>(rng.integer(0, kGrid - 1));
    const auto b = static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(a), kGrid - 1));
    for (std::size_t i = a; i <= b; ++i) {
        if (!rng.chance(0.1)) {
            v[i] = ExtReal(static_cast<double>(rng.integer(-64, 64)) / 4);
        }
    }
    return {start, step, std::move(v), c};
}

Outcome transform_laws() {
    Outcome o;
    oracle::Rng rng(9);
    // Dyadic data: every sum and product below is exact in binary.
    const double step = 1.0 / 128;
    const double start = -static_cast<double>(kGrid / 2) * step;
    const Grid xi{-4.0, 0.125, 65};
    for (int k = 0; k < 100; ++k) {
        const auto a = random_support(rng, Convention::maxplus, start, step);
        const auto b = random_support(rng, Convention::maxplus, start, step);
        const auto lhs = legendre(convolution(a, b), xi);
        const auto la = legendre(a, xi);
        const auto lb = legendre(b, xi);
        for (std::size_t i = 0; i < xi.count; ++i) {
            if (lhs[i] != mul(la[i], lb[i], maxplus())) {
                o.fail("convolution theorem inexact at pair " + std::to_string(k));
            }
        }
    }

    {
        const double d = 0.01;
        std::vector<ExtReal> v;
        for (std::size_t i = 0; i < 1001; ++i) {
            const double x = -5.0 + static_cast<double>(i) * d;
            v.emplace_back(-x * x / 2);
        }
        const SampledFunction phi(-5.0, d, v, Convention::maxplus);
        const Grid g{-3.0, 0.01, 601};
        const auto t = legendre(phi, g);
        for (std::size_t i = 0; i < g.count; ++i) {
            const double s = g.at(i);
            if (std::abs(t[i].value() - s * s / 2) > 2 * d * std::abs(s) + d * d) {
                o.fail("Legendre of -x^2/2 outside tolerance at xi=" + fmt(s));
            }
        }
    }

    for (int k = 0; k < 5; ++k) {
        const auto s1 = random_support(rng, Convention::minplus, start, step);
        const auto s2 = random_support(rng, Convention::minplus, start, step);
        const double lambda = static_cast<double>(rng.integer(-40, 40)) / 8;
        const double mu = static_cast<double>(rng.integer(-40, 40)) / 8;
        const EvolveParams p{1.0, 1.0};
        const auto lhs = hopf_lax_evolve(oplus(scale(lambda, s1), scale(mu, s2)), p);
        const auto rhs =
            oplus(scale(lambda, hopf_lax_evolve(s1, p)), scale(mu, hopf_lax_evolve(s2, p)));
        if (!(lhs == rhs)) {
            o.fail("Hopf-Lax linearity inexact");
        }
    }

    {
        const double d = 0.01;
        std::vector<ExtReal> v;
        for (std::size_t i = 0; i < kGrid; ++i) {
            const double x = -10.0 + static_cast<double>(i) * d;
            v.emplace_back(x * x / 2);
        }
        const SampledFunction s0(-10.0, d, v, Convention::minplus);
        const auto twice = hopf_lax_evolve(hopf_lax_evolve(s0, {0.5, 1.0}), {0.5, 1.0});
        const auto once = hopf_lax_evolve(s0, {1.0, 1.0});
        const double tol = 4 * d * 10.0;
        for (std::size_t i = 0; i < kGrid; ++i) {
            if (std::abs(twice[i].value() - once[i].value()) > tol) {
                o.fail("semigroup property outside tolerance");
            }
            const double x = once.x(i);
            if (std::abs(once[i].value() - x * x / 4) > 2 * d * std::abs(x) + d * d) {
                o.fail("evolution of y^2/2 differs from x^2/4");
            }
        }
    }
    if (o.pass) {
        o.detail = "N = " + std::to_string(kGrid);
    }
    return o;
}

// ---------------------------------------------------------------- 10

struct Run {
    int status;
    std::string output;
};

Run run_cli(const std::string& args, int threads) {
    const std::string cmd = "cd '" TROPIKIT_GOLDEN_DIR "' && TROPIKIT_THREADS=" +
                            std::to_string(threads) + " '" TROPIKIT_CLI_PATH "' " + args +
                            " 2>&1";
    Run r{-1, {}};
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.output.append(buf, got);
    }
    const int st = ::pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_golden() {
    Outcome o;
    std::ifstream cases(TROPIKIT_GOLDEN_DIR "/cases.txt");
    if (!cases) {
        o.fail("cases.txt missing");
        return o;
    }
    std::string line;
    std::size_t count = 0;
    std::vector<std::string> seen;
    while (std::getline(cases, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto p1 = line.find('|');
        const auto p2 = line.find('|', p1 + 1);
        const std::string name = line.substr(0, p1);
        const int code = std::stoi(line.substr(p1 + 1, p2 - p1 - 1));
        const std::string args = line.substr(p2 + 1);
        seen.push_back(args.substr(0, args.find(' ')));
        const std::string expected = slurp(TROPIKIT_GOLDEN_DIR "/expected/" + name + ".out");
        for (int threads : {1, 1, 4, 4}) {
            const auto r = run_cli(args, threads);
            if (r.status != code) {
                o.fail(name + ": exit " + std::to_string(r.status));
            } else if (r.output != expected) {
                o.fail(name + ": output differs with TROPIKIT_THREADS=" + std::to_string(threads));
            }
        }
        ++count;
    }
    for (const char* sub : {"axioms", "sp", "bellman", "interval-bellman", "newton", "tropcurve",
                            "amoeba", "legendre", "convolve", "hopflax", "dequant-demo"}) {
        if (std::find(seen.begin(), seen.end(), sub) == seen.end()) {
            o.fail(std::string("no golden case for ") + sub);
        }
    }
    if (o.pass) {
        o.detail = std::to_string(count) + " cases x 4 runs";
    }
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "semiring axioms", kAxiomSeconds, axioms},
        {2, "deformation bound", 0, deformation_bound},
        {3, "shortest paths vs oracles", kShortestPathSeconds, shortest_path_oracles},
        {4, "negative-cycle detection", 0, negative_cycles},
        {5, "interval containment", kIntervalSeconds, interval_containment},
        {6, "Newton-set homomorphism", 0, newton_homomorphism},
        {7, "dequantization limit", 0, dequantization_limit},
        {8, "tropical line and amoeba", 0, tropical_line},
        {9, "transform laws", kTransformSeconds, transform_laws},
        {10, "CLI golden determinism", 0, cli_golden},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.fail("took " + fmt(secs) + " s, limit " + fmt(c.limit_seconds) + " s");
        }
        std::printf("%s  %2d  %-28s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), secs, o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed;
}
