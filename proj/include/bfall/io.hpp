#pragma once

#include "bfall/formula.hpp"
#include "bfall/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace bfall {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

// DIMACS: `c` comments, one `p edge n m` (or `p col n m`) line, `e u v` lines
// with 1-based vertices.
Graph read_dimacs(std::istream &in);
void write_dimacs(std::ostream &out, const Graph &g, const std::string &comment = {});

// Edge list: `#` comments, first data line is the vertex count, then one
// 0-based `u v` pair per line.
Graph read_edge_list(std::istream &in);
void write_edge_list(std::ostream &out, const Graph &g);

/// Dispatches on extension (.el -> edge list, anything else -> DIMACS).
Graph load_graph(const std::string &path);
void save_graph(const std::string &path, const Graph &g, const std::string &comment = {});

// Formula: `c` comments, `p 13sat n`, then one clause per line as three
// 1-based variable indices.
Formula33 read_formula(std::istream &in);
void write_formula(std::ostream &out, const Formula33 &f);
Formula33 load_formula(const std::string &path);

} // namespace bfall
