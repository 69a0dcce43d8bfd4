#include "commands.hpp"

#include <djg/errors.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>

using namespace djg::cli;

namespace {
    enum ExitCode
    {
        ok = 0,
        invariant_violation = 1,
        domain_error = 2,
        resource_error = 3,
        internal_error = 4
    };

    auto add_host(CLI::App & cmd, RunConfig & c) -> void
    {
        cmd.add_option("--n", c.n, "ground set size, 2k+1 <= n <= 63")->check(CLI::Range(1, 63))->capture_default_str();
        cmd.add_option("--k", c.k, "lower subset size, k >= 1")->check(CLI::Range(1, 31))->capture_default_str();
    }

    auto add_length(CLI::App & cmd, RunConfig & c) -> void
    {
        cmd.add_option("--cycle,--length", c.length, "cycle length, even and >= 6")->check(CLI::Range(6, 1000))->capture_default_str();
    }

    auto add_subgraph(CLI::App & cmd, RunConfig & c) -> void
    {
        cmd.add_option("--mask", c.mask_hex, "subgraph as a hex edge mask (bit i = edge i)");
        cmd.add_option("--input", c.input_path, "subgraph as an edge list file written by generate --format text");
        cmd.add_flag("--random", c.random_subgraph, "use a seeded random subgraph instead of the full host");
        cmd.add_option("--density", c.density, "edge density in tenths for --random, 0..10")->check(CLI::Range(0, 10))->capture_default_str();
        cmd.add_option("--seed", c.seed, "PRNG seed (mt19937_64)")->capture_default_str();
    }

    auto add_budgets(CLI::App & cmd, RunConfig & c) -> void
    {
        cmd.add_option("--node-budget", c.node_budget, "search node budget")->capture_default_str();
        cmd.add_option("--cycle-cap", c.cycle_cap, "cap on enumerated cycles")->capture_default_str();
        cmd.add_option("--workers", c.workers, "search threads; witnesses are reproducible only with 1")
                ->check(CLI::Range(1u, 256u))->capture_default_str();
    }

    auto add_output(CLI::App & cmd, RunConfig & c) -> void
    {
        static const std::map<std::string, Format> formats{ { "json", Format::json }, { "csv", Format::csv }, { "text", Format::text } };
        cmd.add_option("--output", c.output, "output file (default: stdout, or $DJG_OUTPUT_DIR/<subcommand>.<ext>)");
        cmd.add_option("--format", c.format, "json, csv or text")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
                ->capture_default_str();
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{ "Doubled Johnson graph toolkit: cycles, chi statistics, auxiliary graphs, extremal search and bounds" };
    app.set_version_flag("--version", std::string{ DJG_VERSION });
    app.require_subcommand(1);

    RunConfig config;
    std::map<CLI::App *, std::function<Outcome (const RunConfig &)>> handlers;

    auto * generate = app.add_subcommand("generate", "export a host graph or a random subgraph");
    add_host(*generate, config);
    add_subgraph(*generate, config);
    add_output(*generate, config);
    handlers[generate] = run_generate;

    auto * cycles = app.add_subcommand("cycles", "count or enumerate cycles of one length");
    add_host(*cycles, config);
    add_length(*cycles, config);
    cycles->add_flag("--count", config.count_only, "print only the count");
    add_subgraph(*cycles, config);
    add_budgets(*cycles, config);
    add_output(*cycles, config);
    handlers[cycles] = run_cycles;

    auto * chi = app.add_subcommand("chi", "chi vector of a subgraph with identity and inequality checks");
    add_host(*chi, config);
    add_subgraph(*chi, config);
    add_budgets(*chi, config);
    add_output(*chi, config);
    handlers[chi] = run_chi;

    auto * aux = app.add_subcommand("aux", "build H_x or H_gamma, or check their edge-sum identities");
    add_host(*aux, config);
    aux->add_option("--center", config.center, "vertex x of H_x, e.g. {1,2}");
    aux->add_option("--gamma", config.gamma, "(k-1)-set gamma of H_gamma, e.g. {1}");
    add_subgraph(*aux, config);
    add_output(*aux, config);
    handlers[aux] = run_aux;

    auto * extremal = app.add_subcommand("extremal", "largest subgraph without a cycle of the given length");
    add_host(*extremal, config);
    add_length(*extremal, config);
    extremal->add_flag("--heuristic", config.heuristic, "greedy deletion and local search instead of exact search");
    extremal->add_option("--strategy", config.strategy, "exact strategy: auto, hitting-set or inclusion")
            ->check(CLI::IsMember({ "auto", "hitting-set", "inclusion" }))->capture_default_str();
    extremal->add_flag("!--no-symmetry", config.symmetry_breaking, "do not fix the first branching edge");
    add_budgets(*extremal, config);
    add_output(*extremal, config);
    handlers[extremal] = run_extremal;

    auto * bounds = app.add_subcommand("bounds", "bound tables for one host or a range of doubled Odd hosts");
    add_host(*bounds, config);
    add_length(*bounds, config);
    bounds->add_option("--k-max", config.k_max, "report doubled Odd hosts n = 2k+1 for k = --k .. --k-max")->check(CLI::Range(0, 31));
    bounds->add_option("--c-l", config.c_l, "constant c_l in the C_4l bound, >= 0")->check(CLI::NonNegativeNumber)->capture_default_str();
    bounds->add_flag("--search", config.with_search, "run exact search and compare");
    add_budgets(*bounds, config);
    add_output(*bounds, config);
    handlers[bounds] = run_bounds;

    auto * ramsey = app.add_subcommand("ramsey", "look for monochromatic cycles in edge colorings");
    add_host(*ramsey, config);
    add_length(*ramsey, config);
    ramsey->add_option("--colors", config.colors, "number of colors, 1..255")->check(CLI::Range(1, 255))->capture_default_str();
    ramsey->add_option("--coloring", config.coloring, "random, acyclic or greedy")
            ->check(CLI::IsMember({ "random", "acyclic", "greedy" }))->capture_default_str();
    ramsey->add_option("--trials", config.trials, "random colorings to try")->check(CLI::Range(1, 1'000'000))->capture_default_str();
    ramsey->add_option("--seed", config.seed, "PRNG seed (mt19937_64)")->capture_default_str();
    add_output(*ramsey, config);
    handlers[ramsey] = run_ramsey;

    auto * verify = app.add_subcommand("verify", "run the property suite on every host with n <= max-n");
    verify->add_option("--max-n", config.max_n, "largest ground set size, 3..63")->check(CLI::Range(3, 63))->capture_default_str();
    verify->add_option("--seed", config.seed, "PRNG seed (mt19937_64)")->capture_default_str();
    verify->add_option("--corpus-size", config.corpus_size, "random subgraphs per host")->capture_default_str();
    add_budgets(*verify, config);
    add_output(*verify, config);
    handlers[verify] = run_verify;

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? ok : domain_error;
    }

    auto * chosen = app.get_subcommands().front();
    config.subcommand = chosen->get_name();
    try {
        auto outcome = handlers.at(chosen)(config);
        emit(config, outcome);
        if (! outcome.invariants_hold) {
            std::cerr << "djg: invariant violation\n";
            return invariant_violation;
        }
        return ok;
    }
    catch (const djg::DomainError & e) {
        std::cerr << "djg: " << e.what() << "\n";
        return domain_error;
    }
    catch (const djg::ParseError & e) {
        std::cerr << "djg: " << e.what() << "\n";
        return domain_error;
    }
    catch (const djg::ResourceError & e) {
        std::cerr << "djg: " << e.what() << "\n";
        return resource_error;
    }
    catch (const std::exception & e) {
        std::cerr << "djg: " << e.what() << "\n";
        return internal_error;
    }
}
