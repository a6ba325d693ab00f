#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tropikit::cli {

// One batch command. Paths are read by `run`; options irrelevant to the
// subcommand must be left unset.
struct CommandConfig {
    std::string subcommand;

    std::optional<std::string> graph;
    std::optional<std::string> poly;
    std::optional<std::string> terms;
    std::optional<std::string> func;
    std::optional<std::string> func2;
    std::optional<std::string> hmat;
    std::optional<std::string> fmat;
    std::optional<std::string> output;

    std::optional<std::string> semiring;
    std::optional<std::string> method;

    std::vector<double> h;
    std::optional<double> t;
    std::optional<double> m;
    std::optional<double> u;
    std::optional<double> v;
    std::optional<std::size_t> samples;
    std::optional<std::size_t> max_iter;
    std::optional<std::size_t> target;
    std::optional<std::size_t> seed;
    std::optional<double> xi_start;
    std::optional<double> xi_step;
    std::optional<std::size_t> xi_count;
    bool stats = false;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kLibraryError = 1;
inline constexpr int kUsageError = 2;

const std::vector<std::string>& subcommands();

// Validates the config, runs the subcommand and writes its artifact to
// `out` (or to cfg.output). Errors produce one `ERROR <code>: <message>`
// line on `err`.
int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace tropikit::cli
