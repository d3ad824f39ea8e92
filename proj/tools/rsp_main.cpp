// rsp - replacement shortest paths for single edge/vertex failures.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rsp/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Replacement shortest paths after single edge or vertex failures"};
    app.require_subcommand(1);

    rsp::RunConfig cfg;
    std::string format = "tsv";
    std::string input_format = "dimacs";

    auto add_graph_opts = [&](CLI::App* sub, bool required) {
        sub->add_option("--input", cfg.input_path, "graph file")->required(required);
        sub->add_option("--source", cfg.source,
                        "source vertex id (in the input format's id base)")
            ->required(required);
        sub->add_option("--target", cfg.target, "target vertex id")->required(required);
        sub->add_option("--input-format", input_format, "dimacs|edgelist")
            ->check(CLI::IsMember({"dimacs", "edgelist"}));
    };
    auto add_output_opts = [&](CLI::App* sub) {
        sub->add_option("--format", format, "tsv|json")
            ->check(CLI::IsMember({"tsv", "json"}));
        sub->add_flag("--emit-paths", cfg.emit_paths, "include replacement paths");
    };
    auto add_corpus_opts = [&](CLI::App* sub) {
        sub->add_option("--random", cfg.corpus.count, "number of random instances")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.corpus.seed, "corpus seed (RSP_SEED overrides)");
        sub->add_option("--min-n", cfg.corpus.min_n)->check(CLI::PositiveNumber);
        sub->add_option("--max-n", cfg.corpus.max_n)->check(CLI::PositiveNumber);
        sub->add_option("--min-m", cfg.corpus.min_m);
        sub->add_option("--max-m", cfg.corpus.max_m);
        sub->add_option("--min-weight", cfg.corpus.min_w)->check(CLI::PositiveNumber);
        sub->add_option("--max-weight", cfg.corpus.max_w)->check(CLI::PositiveNumber);
    };

    CLI::App* edges = app.add_subcommand("edges", "replacement paths per failed path edge");
    CLI::App* nodes = app.add_subcommand("nodes", "replacement paths per failed path vertex");
    CLI::App* all = app.add_subcommand("all", "both edge and node replacement paths");
    for (CLI::App* sub : {edges, nodes, all}) {
        add_graph_opts(sub, true);
        add_output_opts(sub);
    }

    CLI::App* check = app.add_subcommand("check", "compare against the brute-force oracle");
    CLI::App* bench = app.add_subcommand("bench", "timing and operation counts");
    for (CLI::App* sub : {check, bench}) {
        add_graph_opts(sub, false);
        add_corpus_opts(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // normalize every usage failure to the documented exit code,
        // but keep 0 for --help
        const int code = app.exit(e);
        return code == 0 ? 0 : rsp::kExitUsage;
    }

    if (edges->parsed()) cfg.mode = rsp::Mode::kEdges;
    if (nodes->parsed()) cfg.mode = rsp::Mode::kNodes;
    if (all->parsed()) cfg.mode = rsp::Mode::kAll;
    if (check->parsed()) cfg.mode = rsp::Mode::kCheck;
    if (bench->parsed()) cfg.mode = rsp::Mode::kBench;

    cfg.output = format == "json" ? rsp::OutputFormat::kJson : rsp::OutputFormat::kTsv;
    cfg.input_format =
        input_format == "edgelist" ? rsp::GraphFormat::kEdgeList : rsp::GraphFormat::kDimacs;

    if (cfg.mode == rsp::Mode::kCheck || cfg.mode == rsp::Mode::kBench) {
        const CLI::App* sub = check->parsed() ? check : bench;
        cfg.use_random = sub->count("--random") > 0;
        if (!cfg.use_random && cfg.input_path.empty()) {
            std::cerr << "error: " << (check->parsed() ? "check" : "bench")
                      << " needs --input or --random\n";
            return rsp::kExitUsage;
        }
    }

    return rsp::run(cfg, std::cout, std::cerr);
}
