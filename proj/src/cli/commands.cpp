#include "commands.hpp"

#include "bfall/colouring.hpp"
#include "bfall/fall_solver.hpp"
#include "bfall/gadgets.hpp"
#include "bfall/io.hpp"
#include "bfall/oracles.hpp"
#include "bfall/pattern.hpp"
#include "bfall/tight_solver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace bfall::cli {

using nlohmann::json;

namespace {

OracleBudget budget_for(const SolveOptions &opts)
{
    auto b = OracleBudget::from_environment();
    if (opts.node_limit)
        b.node_limit = *opts.node_limit;
    return b;
}

json sets_json(const std::vector<VertexSet> &sets)
{
    json out = json::array();
    for (const auto &s : sets)
        out.push_back(s);
    return out;
}

json checks_json(const std::vector<StructuralCheck> &checks)
{
    json out = json::object();
    for (const auto &c : checks)
        out[c.name] = c.passed;
    return out;
}

RunReport start(const std::string &command, const Graph &g)
{
    RunReport r;
    r.command = command;
    r.digest = digest(g);
    return r;
}

} // namespace

json RunReport::to_json() const
{
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["digest"] = digest;
    j["path"] = path;
    j["result"] = result;
    j["witness"] = witness;
    j["timing_seconds"] = seconds;
    j["nodes_explored"] = nodes;
    j["status"] = status;
    return j;
}

int RunReport::exit_code() const
{
    if (status == "ok")
        return 0;
    if (status == "no")
        return 1;
    if (status == "inconclusive")
        return 2;
    return 3;
}

RunReport cmd_analyze(const std::string &path)
{
    Graph g = load_graph(path);
    RunReport r = start("analyze", g);
    r.path = "direct";
    auto a = analyze_tight(g);
    r.result["n"] = g.order();
    r.result["edges"] = g.size();
    r.result["m"] = a.m;
    r.result["dense"] = a.dense;
    r.result["boundary"] = a.boundary;
    r.result["tight"] = a.is_tight;
    r.result["min_degree"] = g.order() ? g.min_degree() : 0;
    r.result["max_degree"] = g.order() ? g.max_degree() : 0;
    r.result["co_components"] = sets_json(co_components(g));
    return r;
}

RunReport cmd_tightb(const std::string &path, const SolveOptions &opts)
{
    Graph g = load_graph(path);
    RunReport r = start("tightb", g);
    auto a = analyze_tight(g);
    if (!a.is_tight) {
        r.status = "error";
        r.result["error"] = "graph is not tight: " + std::to_string(a.dense.size()) + " vertices have degree >= m-1 = " +
                            std::to_string(a.m - 1) + " (need exactly m of degree exactly m-1)";
        return r;
    }
    r.result["m"] = a.m;

    std::optional<Colouring> colouring;
    if (!opts.force_oracle && is_h_free(g, pattern_graph("2P2+P1"))) {
        r.path = "2p2p1-free";
        auto ans = tight_b_2p2p1_free(g);
        colouring = ans.colouring;
        if (!ans)
            r.result["reason"] = ans.reason;
    } else if (!opts.force_oracle && is_h_free(g, pattern_graph("P3+P1"))) {
        r.path = "p3p1-free";
        auto ans = tight_b_p3p1_free(g);
        colouring = ans.colouring;
        if (!ans)
            r.result["reason"] = ans.reason;
    } else {
        r.path = "oracle";
        auto res = tight_b_exact(g, budget_for(opts));
        r.nodes = res.nodes;
        if (res.status == SearchStatus::Inconclusive) {
            r.status = "inconclusive";
            r.result["answer"] = "inconclusive";
            return r;
        }
        colouring = res.witness;
    }
    r.result["answer"] = colouring ? "yes" : "no";
    if (!colouring) {
        r.status = "no";
        return r;
    }
    if (!is_tight_b_colouring(g, *colouring))
        throw std::logic_error("produced colouring failed validation");
    r.witness = colouring->values();
    return r;
}

RunReport cmd_fall(const std::string &path, const SolveOptions &opts)
{
    Graph g = load_graph(path);
    RunReport r = start("fall", g);
    std::vector<int> spectrum;
    std::vector<Colouring> witnesses;
    if (!opts.force_oracle && g.order() > 0 && is_h_free(g, pattern_graph("P3+P1"))) {
        r.path = "p3p1-free";
        auto res = fall_p3p1_free(g);
        spectrum = res.spectrum;
        if (res.colouring)
            witnesses.push_back(*res.colouring);
    } else {
        r.path = "oracle";
        auto res = fall_spectrum(g, budget_for(opts));
        r.nodes = res.nodes;
        spectrum = res.values;
        witnesses = res.witnesses;
    }
    r.result["spectrum"] = spectrum;
    r.result["fall_unique"] = spectrum.size() == 1;
    if (spectrum.empty()) {
        r.status = "no";
        r.result["fall_chromatic"] = nullptr;
        r.result["fall_achromatic"] = nullptr;
        return r;
    }
    r.result["fall_chromatic"] = spectrum.front();
    r.result["fall_achromatic"] = spectrum.back();
    r.witness = json::array();
    for (const auto &c : witnesses) {
        if (!is_fall_colouring(g, c))
            throw std::logic_error("produced colouring failed validation");
        r.witness.push_back(c.values());
    }
    return r;
}

RunReport cmd_classify(const std::string &h, const std::string &problem)
{
    Graph pattern = std::filesystem::exists(h) ? load_graph(h) : pattern_graph(h);
    RunReport r = start("classify", pattern);
    r.path = "dichotomy";
    DichotomyVerdict v;
    if (problem == "b")
        v = classify_b(pattern);
    else if (problem == "tightb")
        v = classify_tight(pattern);
    else if (problem == "fall")
        v = classify_fall(pattern);
    else
        throw std::invalid_argument("unknown problem: " + problem + " (expected b, tightb or fall)");
    r.result["problem"] = problem;
    r.result["verdict"] = to_string(v.verdict);
    r.result["reason"] = v.reason;
    if (!v.family.empty())
        r.result["family"] = v.family;
    return r;
}

RunReport cmd_hfree(const std::string &path, const std::string &pattern)
{
    Graph g = load_graph(path);
    RunReport r = start("hfree", g);
    r.path = "induced-search";
    r.result["pattern"] = canonical_pattern_name(pattern);
    auto hit = contains_induced(g, pattern_graph(pattern));
    r.result["free"] = !hit.has_value();
    if (hit) {
        r.witness = *hit;
        r.status = "no";
    }
    return r;
}

namespace {

json certificate_json(const ReductionCertificate &cert)
{
    json j;
    j["kind"] = cert.kind;
    j["input"] = cert.input_summary;
    j["instance_digest"] = digest(cert.instance);
    j["instance_order"] = cert.instance.order();
    j["instance_edges"] = cert.instance.size();
    j["checks"] = checks_json(cert.checks);
    j["checks_pass"] = cert.checks_pass();
    j["forward_status"] = cert.forward_status;
    j["backward_status"] = cert.backward_status;
    j["forward_witness"] = cert.forward_witness ? json(cert.forward_witness->values()) : json(nullptr);
    j["backward_witness"] = cert.backward_witness ? json(*cert.backward_witness) : json(nullptr);
    json measurements = json::object();
    for (const auto &[k, v] : cert.measurements)
        measurements[k] = v;
    j["measurements"] = measurements;
    j["equivalence"] = to_string(cert.equivalence);
    return j;
}

ReductionCertificate build_certificate(const std::string &kind, const std::string &input, const OracleBudget &budget,
                                       bool solve, std::string &input_digest)
{
    if (kind == "one_in_three") {
        Formula33 f = load_formula(input);
        input_digest = "";
        return verify_reduction(f, budget, solve);
    }
    Graph g = load_graph(input);
    input_digest = digest(g);
    return verify_reduction(kind, g, budget, solve);
}

} // namespace

RunReport cmd_gadget(const std::string &kind, const std::string &input, const std::string &out)
{
    RunReport r;
    r.command = "gadget";
    r.path = kind;
    auto cert = build_certificate(kind, input, OracleBudget::from_environment(), false, r.digest);
    save_graph(out + ".col", cert.instance, kind + " instance");
    json cj = certificate_json(cert);
    cj["schema"] = 1;
    std::ofstream(out + ".json") << cj.dump(2) << '\n';
    r.result = cj;
    r.result["files"] = {out + ".col", out + ".json"};
    if (!cert.checks_pass())
        r.status = "error";
    return r;
}

RunReport cmd_verify(const std::string &kind, const std::string &input, const std::optional<std::string> &instance,
                     const SolveOptions &opts)
{
    RunReport r;
    r.command = "verify";
    r.path = kind;
    auto cert = build_certificate(kind, input, budget_for(opts), true, r.digest);
    r.result = certificate_json(cert);
    if (instance) {
        bool same = digest(load_graph(*instance)) == digest(cert.instance);
        r.result["instance_matches"] = same;
        if (!same) {
            r.status = "error";
            return r;
        }
    }
    if (cert.forward_witness)
        r.witness = cert.forward_witness->values();
    if (!cert.checks_pass() || cert.equivalence == Equivalence::Inconsistent)
        r.status = "error";
    else if (cert.equivalence == Equivalence::Inconclusive)
        r.status = "inconclusive";
    return r;
}

RunReport cmd_oracle(const std::string &which, const std::string &path, const SolveOptions &opts)
{
    auto budget = budget_for(opts);
    if (which == "one_in_three") {
        Formula33 f = load_formula(path);
        RunReport r;
        r.command = "oracle";
        r.path = which;
        auto res = one_in_three_sat(f, budget);
        r.nodes = res.nodes;
        r.result["value"] = res.found();
        if (res.found()) {
            json a = json::array();
            for (bool b : *res.witness)
                a.push_back(b);
            r.witness = a;
        }
        r.status = res.status == SearchStatus::Inconclusive ? "inconclusive" : res.found() ? "ok" : "no";
        return r;
    }

    Graph g = load_graph(path);
    RunReport r = start("oracle", g);
    r.path = which;
    if (which == "chromatic") {
        auto v = chromatic_number(g, budget);
        r.result["value"] = v.value;
        r.witness = v.witness.values();
        r.nodes = v.nodes;
    } else if (which == "bchromatic") {
        auto v = b_chromatic_number(g, budget);
        r.result["value"] = v.value;
        r.witness = v.witness.values();
        r.nodes = v.nodes;
    } else if (which == "tight") {
        auto res = tight_b_exact(g, budget);
        r.nodes = res.nodes;
        r.result["value"] = to_string(res.status);
        if (res.found())
            r.witness = res.witness->values();
        r.status = res.status == SearchStatus::Inconclusive ? "inconclusive" : res.found() ? "ok" : "no";
    } else if (which == "fall") {
        auto s = fall_spectrum(g, budget);
        r.nodes = s.nodes;
        r.result["value"] = s.values;
        r.witness = json::array();
        for (const auto &c : s.witnesses)
            r.witness.push_back(c.values());
        if (s.empty())
            r.status = "no";
    } else if (which == "edge3") {
        auto res = three_edge_colouring(g, budget);
        r.nodes = res.nodes;
        r.result["value"] = to_string(res.status);
        if (res.found())
            r.witness = *res.witness;
        r.status = res.status == SearchStatus::Inconclusive ? "inconclusive" : res.found() ? "ok" : "no";
    } else if (which == "mmm") {
        r.result["value"] = min_maximal_matching_size(g, budget);
    } else if (which == "clique") {
        r.result["value"] = clique_number(g);
    } else {
        throw std::invalid_argument("unknown oracle: " + which);
    }
    return r;
}

int run(int argc, char **argv)
{
    CLI::App app{"b-colouring and fall colouring toolkit"};
    app.require_subcommand(1);
    std::string path, pattern, problem = "tightb", kind, out, which;
    std::optional<std::string> instance;
    SolveOptions opts;
    std::uint64_t node_limit = 0;

    auto add_solve_flags = [&](CLI::App *sub) {
        sub->add_flag("--force-oracle", opts.force_oracle, "skip the polynomial path and use exhaustive search");
        sub->add_option("--budget", node_limit, "search node limit");
    };

    auto *analyze = app.add_subcommand("analyze", "m-degree, dense set, boundary, tightness, co-components");
    analyze->add_option("graph", path)->required();
    auto *tightb = app.add_subcommand("tightb", "decide tight b-colourability");
    tightb->add_option("graph", path)->required();
    add_solve_flags(tightb);
    auto *fall = app.add_subcommand("fall", "fall spectrum");
    fall->add_option("graph", path)->required();
    add_solve_flags(fall);
    auto *classify = app.add_subcommand("classify", "complexity verdict for H-free graphs");
    classify->add_option("H", path, "pattern name or graph file")->required();
    classify->add_option("--problem", problem)->check(CLI::IsMember({"b", "tightb", "fall"}));
    auto *hfree = app.add_subcommand("hfree", "induced pattern search");
    hfree->add_option("graph", path)->required();
    hfree->add_option("--pattern", pattern)->required();
    auto *gadget = app.add_subcommand("gadget", "build a reduction instance");
    gadget->add_option("kind", kind)->required()->check(
        CLI::IsMember({"bonomo", "hss", "hss3p2", "hss2p3", "one_in_three", "c3free", "line"}));
    gadget->add_option("input", path)->required();
    gadget->add_option("--out", out)->required();
    auto *verify = app.add_subcommand("verify", "check a reduction against the oracles");
    verify->add_option("kind", kind)->required()->check(
        CLI::IsMember({"bonomo", "hss", "hss3p2", "hss2p3", "one_in_three", "c3free", "line"}));
    verify->add_option("input", path)->required();
    verify->add_option("--instance", instance);
    add_solve_flags(verify);
    auto *oracle = app.add_subcommand("oracle", "run an exhaustive solver");
    oracle->add_option("which", which)->required()->check(
        CLI::IsMember({"chromatic", "bchromatic", "tight", "fall", "edge3", "mmm", "clique", "one_in_three"}));
    oracle->add_option("input", path)->required();
    add_solve_flags(oracle);

    CLI11_PARSE(app, argc, argv);
    if (node_limit > 0)
        opts.node_limit = node_limit;

    auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    try {
        if (analyze->parsed())
            report = cmd_analyze(path);
        else if (tightb->parsed())
            report = cmd_tightb(path, opts);
        else if (fall->parsed())
            report = cmd_fall(path, opts);
        else if (classify->parsed())
            report = cmd_classify(path, problem);
        else if (hfree->parsed())
            report = cmd_hfree(path, pattern);
        else if (gadget->parsed())
            report = cmd_gadget(kind, path, out);
        else if (verify->parsed())
            report = cmd_verify(kind, path, instance, opts);
        else
            report = cmd_oracle(which, path, opts);
    } catch (const std::exception &e) {
        report.command = app.get_subcommands().front()->get_name();
        report.status = "error";
        report.result = {{"error", e.what()}};
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << report.to_json().dump(2) << '\n';
    return report.exit_code();
}

} // namespace bfall::cli
