#include "tropikit/cli.hpp"

#include "tropikit/axioms.hpp"
#include "tropikit/errors.hpp"
#include "tropikit/interval.hpp"
#include "tropikit/io.hpp"
#include "tropikit/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace tropikit::cli {
namespace {

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error("Usage", what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("IOError", what) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Names of the options that are set in `cfg`.
std::set<std::string> present_options(const CommandConfig& cfg) {
    std::set<std::string> s;
    const auto mark = [&](bool set, const char* name) {
        if (set) {
            s.insert(name);
        }
    };
    mark(cfg.graph.has_value(), "graph");
    mark(cfg.poly.has_value(), "poly");
    mark(cfg.terms.has_value(), "terms");
    mark(cfg.func.has_value(), "func");
    mark(cfg.func2.has_value(), "func2");
    mark(cfg.hmat.has_value(), "hmat");
    mark(cfg.fmat.has_value(), "fmat");
    mark(cfg.semiring.has_value(), "semiring");
    mark(cfg.method.has_value(), "method");
    mark(!cfg.h.empty(), "h");
    mark(cfg.t.has_value(), "t");
    mark(cfg.m.has_value(), "m");
    mark(cfg.u.has_value(), "u");
    mark(cfg.v.has_value(), "v");
    mark(cfg.samples.has_value(), "samples");
    mark(cfg.max_iter.has_value(), "max-iter");
    mark(cfg.target.has_value(), "target");
    mark(cfg.seed.has_value(), "seed");
    mark(cfg.xi_start.has_value(), "xi-start");
    mark(cfg.xi_step.has_value(), "xi-step");
    mark(cfg.xi_count.has_value(), "xi-count");
    mark(cfg.stats, "stats");
    return s;
}

struct Signature {
    std::set<std::string> required;
    std::set<std::string> optional;
};

const std::map<std::string, Signature>& signatures() {
    static const std::map<std::string, Signature> table = {
        {"axioms", {{"semiring"}, {"samples", "seed"}}},
        {"sp", {{"graph"}, {}}},
        {"bellman", {{"hmat", "fmat", "semiring"}, {"method", "max-iter"}}},
        {"interval-bellman", {{"graph"}, {"semiring", "target", "max-iter"}}},
        {"newton", {{"poly"}, {}}},
        {"tropcurve", {{"terms"}, {}}},
        {"amoeba", {{"h"}, {"samples", "stats"}}},
        {"legendre", {{"func", "xi-start", "xi-step", "xi-count"}, {}}},
        {"convolve", {{"func", "func2"}, {}}},
        {"hopflax", {{"func", "t"}, {"m"}}},
        {"dequant-demo", {{"h", "u", "v"}, {}}},
    };
    return table;
}

void validate(const CommandConfig& cfg) {
    const auto it = signatures().find(cfg.subcommand);
    if (it == signatures().end()) {
        throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
    }
    const Signature& sig = it->second;
    const auto present = present_options(cfg);
    for (const auto& name : sig.required) {
        if (!present.count(name)) {
            throw UsageError(cfg.subcommand + " requires --" + name);
        }
    }
    for (const auto& name : present) {
        if (!sig.required.count(name) && !sig.optional.count(name)) {
            throw UsageError("--" + name + " does not apply to " + cfg.subcommand);
        }
    }
    for (double h : cfg.h) {
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw UsageError("--h values must be positive and finite");
        }
    }
    if (cfg.subcommand == "amoeba" && cfg.h.size() != 1) {
        throw UsageError("amoeba takes a single --h value");
    }
    if (cfg.samples && *cfg.samples == 0) {
        throw UsageError("--samples must be positive");
    }
    if (cfg.xi_count && *cfg.xi_count == 0) {
        throw UsageError("--xi-count must be positive");
    }
    if (cfg.xi_step && !(*cfg.xi_step > 0.0)) {
        throw UsageError("--xi-step must be positive");
    }
    if (cfg.method && *cfg.method != "jacobi" && *cfg.method != "gauss-seidel" &&
        *cfg.method != "star") {
        throw UsageError("--method must be jacobi, gauss-seidel or star");
    }
    if (cfg.t && !(*cfg.t > 0.0)) {
        throw UsageError("--t must be positive");
    }
    if (cfg.m && !(*cfg.m > 0.0)) {
        throw UsageError("--m must be positive");
    }
}

std::string run_axioms(const CommandConfig& cfg, std::ostream& err) {
    const SemiringSpec spec = parse_semiring_id(*cfg.semiring);
    AxiomOptions opts;
    opts.samples = cfg.samples.value_or(opts.samples);
    opts.seed = cfg.seed.value_or(opts.seed);
    const AxiomReport report = check_axioms(spec, opts);
    std::string out = "# semiring " + report.semiring + (report.exact ? " exact" : " tolerance") +
                      "\nlaw\tchecked\tfailures\texpected\tstatus\n";
    for (const LawResult& l : report.laws) {
        out += l.law + '\t' + std::to_string(l.checked) + '\t' + std::to_string(l.failures) +
               '\t' + (l.expected_to_hold ? "holds" : "fails") + '\t' +
               (l.passed() ? "pass" : "FAIL") + '\n';
    }
    if (!report.passed()) {
        err << "ERROR AxiomFailure: " << report.semiring << " violates a semiring law\n";
    }
    return out;
}

SemiringMatrix read_bellman_matrix(const std::string& path, const SemiringSpec& spec) {
    return io::parse_matrix(read_file(path), spec);
}

std::string run_bellman(const CommandConfig& cfg) {
    const SemiringSpec spec = parse_semiring_id(*cfg.semiring);
    const SemiringMatrix h = read_bellman_matrix(*cfg.hmat, spec);
    const SemiringMatrix f = read_bellman_matrix(*cfg.fmat, spec);
    const std::string method = cfg.method.value_or("jacobi");
    if (method == "gauss-seidel") {
        return io::format_matrix(solve_bellman_gauss_seidel(h, f, cfg.max_iter));
    }
    if (method == "star") {
        return io::format_matrix(kleene_star(h, cfg.max_iter) * f);
    }
    return io::format_matrix(solve_bellman_jacobi(h, f, cfg.max_iter));
}

std::string run_interval_bellman(const CommandConfig& cfg) {
    const SemiringSpec spec = parse_semiring_id(cfg.semiring.value_or("minplus"));
    const io::IntervalGraph g = io::parse_interval_graph(read_file(*cfg.graph));
    const IntervalMatrix h = io::interval_adjacency(g, spec);
    std::optional<IntervalMatrix> f;
    if (cfg.target) {
        if (*cfg.target >= g.n) {
            throw UsageError("--target is not a node of the graph");
        }
        SemiringMatrix col = SemiringMatrix::zeros(g.n, 1, spec);
        col.set(*cfg.target, 0, spec.one());
        f.emplace(col, col);
    } else {
        const SemiringMatrix eye = SemiringMatrix::identity(g.n, spec);
        f.emplace(eye, eye);
    }
    return io::format_interval_matrix(interval_bellman(h, *f, cfg.max_iter));
}

std::string run_tropcurve(const CommandConfig& cfg, std::ostream& err) {
    const TropicalCurve curve = tropical_curve_2d(io::parse_tropical_terms(read_file(*cfg.terms)));
    if (curve.merged_duplicate_exponents) {
        err << "WARNING DegenerateInput: repeated exponents were folded by max of coefficients\n";
    }
    return io::format_curve(curve);
}

std::string run_amoeba(const CommandConfig& cfg) {
    const DeformationParam h(cfg.h.front());
    const auto pts = amoeba_line_sample(h, cfg.samples.value_or(64));
    if (cfg.stats) {
        const TropicalCurve line = tropical_curve_2d(
            {{0.0, {Rational(1), Rational(0)}}, {0.0, {Rational(0), Rational(1)}},
             {0.0, {Rational(0), Rational(0)}}});
        double worst = 0.0;
        for (const auto& p : pts) {
            worst = std::max(worst, distance_to_curve(line, p[0], p[1]));
        }
        return "points\t" + std::to_string(pts.size()) + "\nmax_distance\t" +
               format_double(worst) + '\n';
    }
    std::string out = "x,y\n";
    for (const auto& p : pts) {
        out += format_double(p[0]) + ',' + format_double(p[1]) + '\n';
    }
    return out;
}

std::string run_dequant_demo(const CommandConfig& cfg) {
    std::string out;
    for (double h : cfg.h) {
        const ExtReal sum = deformed_add(*cfg.u, *cfg.v, DeformationParam(h));
        const double top = std::max(*cfg.u, *cfg.v);
        out += format_double(h) + '\t' + format_ext(sum) + '\t' +
               format_double(sum.value() - top) + '\n';
    }
    return out;
}

std::string dispatch(const CommandConfig& cfg, std::ostream& err) {
    const std::string& cmd = cfg.subcommand;
    if (cmd == "axioms") {
        return run_axioms(cfg, err);
    }
    if (cmd == "sp") {
        return io::format_matrix(shortest_paths(io::parse_graph(read_file(*cfg.graph))));
    }
    if (cmd == "bellman") {
        return run_bellman(cfg);
    }
    if (cmd == "interval-bellman") {
        return run_interval_bellman(cfg);
    }
    if (cmd == "newton") {
        const Polytope p = newton_set(io::parse_polynomial(read_file(*cfg.poly)));
        return (p.reduced() ? std::string() : std::string("# reduced=false\n")) +
               io::format_polytope(p) + '\n';
    }
    if (cmd == "tropcurve") {
        return run_tropcurve(cfg, err);
    }
    if (cmd == "amoeba") {
        return run_amoeba(cfg);
    }
    if (cmd == "legendre") {
        const SampledFunction phi = io::parse_sampled_function(read_file(*cfg.func));
        return io::format_sampled_function(
            legendre(phi, Grid{*cfg.xi_start, *cfg.xi_step, *cfg.xi_count}));
    }
    if (cmd == "convolve") {
        return io::format_sampled_function(
            convolution(io::parse_sampled_function(read_file(*cfg.func)),
                        io::parse_sampled_function(read_file(*cfg.func2))));
    }
    if (cmd == "hopflax") {
        return io::format_sampled_function(
            hopf_lax_evolve(io::parse_sampled_function(read_file(*cfg.func)),
                            EvolveParams{*cfg.t, cfg.m.value_or(1.0)}));
    }
    return run_dequant_demo(cfg);
}

bool is_usage_error(const Error& e) {
    return dynamic_cast<const UsageError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
           dynamic_cast<const IoError*>(&e);
}

} // namespace

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, sig] : signatures()) {
            v.push_back(name);
        }
        return v;
    }();
    return names;
}

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        std::ostringstream warnings;
        const std::string artifact = dispatch(cfg, warnings);
        const std::string diag = warnings.str();
        if (cfg.output) {
            std::ofstream file(*cfg.output, std::ios::binary);
            if (!file || !(file << artifact)) {
                throw IoError("cannot write '" + *cfg.output + "'");
            }
        } else {
            out << artifact;
        }
        err << diag;
        return diag.rfind("ERROR", 0) == 0 ? kLibraryError : kOk;
    } catch (const Error& e) {
        err << "ERROR " << e.code() << ": " << e.what() << '\n';
        return is_usage_error(e) ? kUsageError : kLibraryError;
    }
}

} // namespace tropikit::cli
