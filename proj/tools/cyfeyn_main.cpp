// Command-line frontend. Three subcommands share one engine:
//
//   cyfeyn verify --target 8 --order 30                  identity checks
//   cyfeyn solve  --target 6 --genus 2 --ambiguity zero  correlators + counts
//   cyfeyn graphs --genus 2 --legs 0                     graph listing
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad configuration
// (unknown flags, unreadable files, violated preconditions).

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cyfeyn/cli.hpp"
#include "cyfeyn/errors.hpp"

namespace {

cyfeyn::Gauge load_gauge(const std::string& path) {
    if (path.empty()) return cyfeyn::Gauge();
    std::ifstream in(path);
    if (!in) throw cyfeyn::ConfigError("cannot open gauge file: " + path);
    return cyfeyn::parse_gauge_config(in);
}

// --ambiguity is either one of the literals "zero"/"symbolic" or a file path.
std::map<int, cyfeyn::AmbiguitySpec> load_ambiguity(const std::string& arg, int maxGenus) {
    if (arg.empty()) return {};
    if (arg == "zero" || arg == "symbolic")
        return cyfeyn::ambiguity_shortcut(arg, maxGenus);
    std::ifstream in(arg);
    if (!in) throw cyfeyn::ConfigError("cannot open ambiguity file: " + arg);
    return cyfeyn::parse_ambiguity_config(in);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact higher-genus invariants for the three one-parameter "
                 "hypersurface families (k = 6, 8, 10)"};
    app.require_subcommand(1);

    cyfeyn::RunConfig cfg;
    std::string gaugeFile;
    std::string ambiguityArg;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--target", cfg.target, "hypersurface degree")
            ->check(CLI::IsMember({6, 8, 10}));
        sub->add_option("--order", cfg.order, "q-series truncation order");
        sub->add_option("--genus", cfg.maxGenus, "highest genus to handle");
        sub->add_option("--gauge", gaugeFile, "gauge config file (default: zero gauge)");
        sub->add_option("--jobs", cfg.jobs, "worker threads");
        sub->add_option("--format", cfg.format, "invariant table format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.outDir, "output directory");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the identity check suite");
    add_common(verify);

    CLI::App* solve =
        app.add_subcommand("solve", "solve correlators and extract invariants");
    add_common(solve);
    solve->add_option("--ambiguity", ambiguityArg,
                      "per-genus holomorphic ambiguity: a config file, "
                      "\"zero\" or \"symbolic\"");

    int graphGenus = 2;
    int graphLegs = 0;
    CLI::App* graphs = app.add_subcommand("graphs", "list stable graphs with |Aut|");
    graphs->add_option("--genus", graphGenus, "total genus");
    graphs->add_option("--legs", graphLegs, "number of legs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    return cyfeyn::run_guarded(
        [&]() -> int {
            if (graphs->parsed()) return cyfeyn::cmd_graphs(graphGenus, graphLegs, std::cout);
            cfg.gauge = load_gauge(gaugeFile);
            if (solve->parsed()) {
                cfg.ambiguity = load_ambiguity(ambiguityArg, cfg.maxGenus);
                return cyfeyn::cmd_solve(cfg, std::cout);
            }
            return cyfeyn::cmd_verify(cfg, std::cout);
        },
        std::cerr);
}
