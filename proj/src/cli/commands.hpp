#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace bfall::cli {

/// One command's outcome. Serialised with sorted keys and `schema: 1`.
struct RunReport {
    std::string command;
    std::string digest; // of the input graph, when there is one
    std::string path;   // algorithm path taken
    nlohmann::json result = nlohmann::json::object();
    nlohmann::json witness; // null when absent
    double seconds = 0.0;
    std::uint64_t nodes = 0;
    std::string status = "ok"; // ok, no, inconclusive, error

    nlohmann::json to_json() const;
    int exit_code() const;
};

struct SolveOptions {
    bool force_oracle = false;
    std::optional<std::uint64_t> node_limit;
};

RunReport cmd_analyze(const std::string &path);
RunReport cmd_tightb(const std::string &path, const SolveOptions &opts);
RunReport cmd_fall(const std::string &path, const SolveOptions &opts);

/// `h` is a pattern name or a graph file; problem is b, tightb or fall.
RunReport cmd_classify(const std::string &h, const std::string &problem);
RunReport cmd_hfree(const std::string &path, const std::string &pattern);

/// Writes <out>.col and <out>.json. `input` is a graph file, or a formula
/// file for kind one_in_three.
RunReport cmd_gadget(const std::string &kind, const std::string &input, const std::string &out);

/// Re-runs construction, checks and oracles; when `instance` is given, its
/// digest must match the rebuilt instance.
RunReport cmd_verify(const std::string &kind, const std::string &input, const std::optional<std::string> &instance,
                     const SolveOptions &opts);

/// which: chromatic, bchromatic, tight, fall, edge3, mmm, clique, one_in_three.
RunReport cmd_oracle(const std::string &which, const std::string &path, const SolveOptions &opts);

/// Parses argv, runs one command, prints its JSON report; returns the exit code.
int run(int argc, char **argv);

} // namespace bfall::cli
