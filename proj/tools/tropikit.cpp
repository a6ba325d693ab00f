// Batch front-end: tropikit <subcommand> [options]. See README.md.

#include "tropikit/cli.hpp"
#include "tropikit/parallel.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

namespace {

std::size_t thread_cap() {
    if (const char* env = std::getenv("TROPIKIT_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

int main(int argc, char** argv) {
    using tropikit::cli::CommandConfig;

    CLI::App app{"Idempotent / tropical algebra toolkit", "tropikit"};
    // -h is not help here: --h is the deformation parameter.
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    CommandConfig cfg;

    auto path = [&](CLI::App* sub, const char* name, std::optional<std::string>& slot,
                    const char* help) { sub->add_option(name, slot, help); };
    auto semiring = [&](CLI::App* sub) {
        sub->add_option("--semiring", cfg.semiring,
                        "bool | maxplus | minplus | maxmin | nonneg | deformed:<h>");
    };
    auto output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", cfg.output, "write the result here instead of stdout");
    };

    auto* axioms = app.add_subcommand("axioms", "check the semiring laws on random triples");
    semiring(axioms);
    axioms->add_option("--samples", cfg.samples, "number of random triples");
    axioms->add_option("--seed", cfg.seed, "random seed");
    output(axioms);

    auto* sp = app.add_subcommand("sp", "all-pairs shortest paths of a graph file");
    path(sp, "--graph", cfg.graph, "graph file: 'n <count>' then 'src dst weight' lines");
    output(sp);

    auto* bellman = app.add_subcommand("bellman", "least solution of X = H X + F");
    path(bellman, "--hmat", cfg.hmat, "H as a TSV matrix");
    path(bellman, "--fmat", cfg.fmat, "F as a TSV matrix");
    semiring(bellman);
    bellman->add_option("--method", cfg.method, "jacobi (default) | gauss-seidel | star");
    bellman->add_option("--max-iter", cfg.max_iter, "iteration budget (default n + 1)");
    output(bellman);

    auto* ib = app.add_subcommand("interval-bellman", "exact interval shortest paths");
    path(ib, "--graph", cfg.graph, "interval graph file: 'src dst wmin wmax' lines");
    semiring(ib);
    ib->add_option("--target", cfg.target, "single target node (default: all pairs)");
    ib->add_option("--max-iter", cfg.max_iter, "iteration budget (default n + 1)");
    output(ib);

    auto* newton = app.add_subcommand("newton", "Newton polytope of a polynomial file");
    path(newton, "--poly", cfg.poly, "polynomial file: 'n <dim>' then 'coeff d1 .. dn' lines");
    output(newton);

    auto* curve = app.add_subcommand("tropcurve", "corner locus of a planar max-plus polynomial");
    path(curve, "--terms", cfg.terms, "'n 2' then 'c d1 d2' lines");
    output(curve);

    auto* amoeba = app.add_subcommand("amoeba", "Log_h sample of the line x + y + 1 = 0");
    amoeba->add_option("--h", cfg.h, "deformation parameter");
    amoeba->add_option("--samples", cfg.samples, "grid nodes per axis (default 64)");
    amoeba->add_flag("--stats", cfg.stats, "print the distance to the tropical line instead");
    output(amoeba);

    auto* legendre = app.add_subcommand("legendre", "sup_x (xi x + phi(x)) on a xi grid");
    path(legendre, "--func", cfg.func, "sampled-function file");
    legendre->add_option("--xi-start", cfg.xi_start, "first xi");
    legendre->add_option("--xi-step", cfg.xi_step, "xi spacing");
    legendre->add_option("--xi-count", cfg.xi_count, "number of xi values");
    output(legendre);

    auto* convolve = app.add_subcommand("convolve", "idempotent convolution of two functions");
    path(convolve, "--f", cfg.func, "first sampled-function file");
    path(convolve, "--g", cfg.func2, "second sampled-function file");
    output(convolve);

    auto* hopflax = app.add_subcommand("hopflax", "free-particle Lax-Oleinik evolution");
    path(hopflax, "--func", cfg.func, "initial min-plus function");
    hopflax->add_option("--t", cfg.t, "time");
    hopflax->add_option("--m", cfg.m, "mass (default 1)");
    output(hopflax);

    auto* demo = app.add_subcommand("dequant-demo", "u (+)_h v for a list of h");
    demo->add_option("--h", cfg.h, "comma-separated h values")->delimiter(',');
    demo->add_option("--u", cfg.u, "first argument");
    demo->add_option("--v", cfg.v, "second argument");
    output(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ERROR Usage: " << e.what() << '\n';
        return tropikit::cli::kUsageError;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    tropikit::set_max_threads(thread_cap());
    return tropikit::cli::run(cfg, std::cout, std::cerr);
}
