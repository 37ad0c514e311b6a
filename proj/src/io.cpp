#include "bfall/io.hpp"

#include <fstream>
#include <sstream>

namespace bfall {

namespace {

bool blank(const std::string &line)
{
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

long parse_int(std::istringstream &ss, const char *what, int line)
{
    long value = 0;
    if (!(ss >> value))
        throw ParseError(std::string("expected ") + what, line);
    return value;
}

void expect_end(std::istringstream &ss, int line)
{
    std::string rest;
    if (ss >> rest)
        throw ParseError("unexpected trailing token '" + rest + "'", line);
}

std::ifstream open_for_read(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return in;
}

bool has_suffix(const std::string &s, const std::string &suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

Graph read_dimacs(std::istream &in)
{
    std::string line;
    int lineno = 0;
    long n = -1, declared_edges = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line))
            continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (n >= 0)
                throw ParseError("duplicate problem line", lineno);
            std::string kind;
            ss >> kind;
            if (kind != "edge" && kind != "col")
                throw ParseError("unsupported problem kind '" + kind + "'", lineno);
            n = parse_int(ss, "vertex count", lineno);
            declared_edges = parse_int(ss, "edge count", lineno);
            expect_end(ss, lineno);
            if (n < 0 || declared_edges < 0)
                throw ParseError("negative count", lineno);
        } else if (tag == "e") {
            if (n < 0)
                throw ParseError("edge before problem line", lineno);
            long u = parse_int(ss, "endpoint", lineno);
            long v = parse_int(ss, "endpoint", lineno);
            expect_end(ss, lineno);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("endpoint out of range 1.." + std::to_string(n), lineno);
            if (u == v)
                throw ParseError("self-loop", lineno);
            edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
        } else {
            throw ParseError("unknown line tag '" + tag + "'", lineno);
        }
    }
    if (n < 0)
        throw ParseError("missing problem line", lineno);
    return Graph(static_cast<int>(n), edges);
}

void write_dimacs(std::ostream &out, const Graph &g, const std::string &comment)
{
    if (!comment.empty()) {
        std::istringstream ss(comment);
        std::string line;
        while (std::getline(ss, line))
            out << "c " << line << '\n';
    }
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_edge_list(std::istream &in)
{
    std::string line;
    int lineno = 0;
    long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line) || line.find_first_not_of(" \t") == line.find('#'))
            continue;
        std::istringstream ss(line);
        if (n < 0) {
            n = parse_int(ss, "vertex count", lineno);
            expect_end(ss, lineno);
            if (n < 0)
                throw ParseError("negative vertex count", lineno);
            continue;
        }
        long u = parse_int(ss, "endpoint", lineno);
        long v = parse_int(ss, "endpoint", lineno);
        expect_end(ss, lineno);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("endpoint out of range 0.." + std::to_string(n - 1), lineno);
        if (u == v)
            throw ParseError("self-loop", lineno);
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (n < 0)
        throw ParseError("missing vertex count", lineno);
    return Graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream &out, const Graph &g)
{
    out << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

Graph load_graph(const std::string &path)
{
    auto in = open_for_read(path);
    return has_suffix(path, ".el") ? read_edge_list(in) : read_dimacs(in);
}

void save_graph(const std::string &path, const Graph &g, const std::string &comment)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    if (has_suffix(path, ".el"))
        write_edge_list(out, g);
    else
        write_dimacs(out, g, comment);
}

Formula33 read_formula(std::istream &in)
{
    std::string line;
    int lineno = 0;
    long n = -1;
    std::vector<Formula33::Clause> clauses;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line))
            continue;
        std::istringstream ss(line);
        std::string first;
        ss >> first;
        if (first == "c")
            continue;
        if (first == "p") {
            std::string kind;
            ss >> kind;
            if (kind != "13sat")
                throw ParseError("expected 'p 13sat n'", lineno);
            n = parse_int(ss, "variable count", lineno);
            expect_end(ss, lineno);
            continue;
        }
        if (n < 0)
            throw ParseError("clause before problem line", lineno);
        std::istringstream clause_ss(line);
        Formula33::Clause clause{};
        for (int &x : clause) {
            long v = parse_int(clause_ss, "variable index", lineno);
            if (v < 1 || v > n)
                throw ParseError("variable out of range 1.." + std::to_string(n), lineno);
            x = static_cast<int>(v - 1);
        }
        expect_end(clause_ss, lineno);
        clauses.push_back(clause);
    }
    if (n < 0)
        throw ParseError("missing problem line", lineno);
    if (static_cast<long>(clauses.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " clauses, found " + std::to_string(clauses.size()), lineno);
    return Formula33(std::move(clauses));
}

void write_formula(std::ostream &out, const Formula33 &f)
{
    out << "p 13sat " << f.variable_count() << '\n';
    for (const auto &c : f.clauses())
        out << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << '\n';
}

Formula33 load_formula(const std::string &path)
{
    auto in = open_for_read(path);
    return read_formula(in);
}

} // namespace bfall
