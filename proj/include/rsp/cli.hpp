// cli.hpp - the command-line pipeline as a testable library function.

#ifndef RSP_CLI_HPP
#define RSP_CLI_HPP

#include <iosfwd>
#include <string>

#include "rsp/graph.hpp"
#include "rsp/pipeline.hpp"
#include "rsp/random_graphs.hpp"

namespace rsp {

enum class Mode { kEdges, kNodes, kAll, kCheck, kBench };
enum class OutputFormat { kTsv, kJson };

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;   // check found disagreements
constexpr int kExitUsage = 2;      // parse/config errors
constexpr int kExitUnreachable = 3;
constexpr int kExitInternal = 4;   // invariant violation

struct RunConfig {
    Mode mode = Mode::kAll;
    std::string input_path;
    GraphFormat input_format = GraphFormat::kDimacs;
    long source = -1; // external ids, interpreted in the input format's base
    long target = -1;
    OutputFormat output = OutputFormat::kTsv;
    bool emit_paths = false;
    bool use_random = false; // check/bench: corpus instead of a file
    CorpusParams corpus;
};

// Full run: load or generate, solve, render. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Deterministic rendering of replacement reports (reconstruction may refine
// report swap edges, hence non-const solution). Used by run() and directly
// by the acceptance suite.
std::string render_reports(const Graph& g, int id_base, Solution& sol, Mode mode,
                           OutputFormat format, bool emit_paths);

} // namespace rsp

#endif
