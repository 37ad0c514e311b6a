#include "bfall/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace bfall {

namespace {

Graph path(int r)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < r; ++i)
        edges.push_back({i, i + 1});
    return Graph(r, edges);
}

Graph cycle(int r)
{
    if (r < 3)
        throw std::invalid_argument("cycles need at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
        edges.push_back({i, (i + 1) % r});
    return Graph(r, edges);
}

Graph complete(int r)
{
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            edges.push_back({i, j});
    return Graph(r, edges);
}

Graph star(int r)
{
    std::vector<Edge> edges;
    for (int i = 1; i <= r; ++i)
        edges.push_back({0, i});
    return Graph(r + 1, edges);
}

struct BaseEntry {
    std::string_view prefix;     // matched case-insensitively
    std::string_view canonical;  // spelling used in canonical names
    bool takes_size;
    std::function<Graph(int)> build;
};

const std::vector<BaseEntry> &base_table()
{
    static const std::vector<BaseEntry> table = {
        {"claw", "claw", false, [](int) { return star(3); }},
        {"paw", "paw", false, [](int) { return Graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}); }},
        {"K_{1,", "K1,", true, star},
        {"K1,", "K1,", true, star},
        {"P", "P", true, path},
        {"C", "C", true, cycle},
        {"K", "K", true, complete},
    };
    return table;
}

bool starts_with_ci(std::string_view s, std::string_view prefix)
{
    if (s.size() < prefix.size())
        return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(s[i])) != std::tolower(static_cast<unsigned char>(prefix[i])))
            return false;
    return true;
}

struct Term {
    int multiplicity;
    const BaseEntry *base;
    int size;
};

std::vector<Term> parse_pattern(std::string_view name)
{
    std::string compact;
    for (char ch : name)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            compact += ch;
    if (compact.empty())
        throw std::invalid_argument("empty pattern name");

    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        std::size_t end = pos;
        int depth = 0;
        while (end < compact.size() && (compact[end] != '+' || depth > 0)) {
            depth += compact[end] == '{' ? 1 : compact[end] == '}' ? -1 : 0;
            ++end;
        }
        std::string_view term(compact.data() + pos, end - pos);
        if (term.empty())
            throw std::invalid_argument("malformed pattern '" + std::string(name) + "'");

        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits])))
            ++digits;
        int multiplicity = digits ? std::stoi(std::string(term.substr(0, digits))) : 1;
        std::string_view rest = term.substr(digits);

        const BaseEntry *match = nullptr;
        for (const auto &entry : base_table())
            if (starts_with_ci(rest, entry.prefix)) {
                match = &entry;
                break;
            }
        if (!match || multiplicity < 1)
            throw std::invalid_argument("unknown pattern term '" + std::string(term) + "'");
        int size = 0;
        if (match->takes_size) {
            std::string_view number = rest.substr(match->prefix.size());
            if (!number.empty() && number.back() == '}')
                number.remove_suffix(1);
            if (number.empty() || !std::all_of(number.begin(), number.end(), [](char ch) {
                    return std::isdigit(static_cast<unsigned char>(ch));
                }))
                throw std::invalid_argument("pattern term '" + std::string(term) + "' needs a size");
            size = std::stoi(std::string(number));
            if (size < 1)
                throw std::invalid_argument("pattern size must be positive");
        } else if (rest.size() != match->prefix.size()) {
            throw std::invalid_argument("unknown pattern term '" + std::string(term) + "'");
        }
        terms.push_back({multiplicity, match, size});
        if (end == compact.size())
            break;
        pos = end + 1;
    }
    return terms;
}

// Ordered induced-subgraph code: bit (b*(b-1)/2 + a) is set iff the a-th and
// b-th chosen vertices (a < b) are adjacent.
constexpr int pair_offset(int b) { return b * (b - 1) / 2; }

} // namespace

Graph pattern_graph(std::string_view name)
{
    Graph out(0);
    for (const auto &term : parse_pattern(name))
        for (int i = 0; i < term.multiplicity; ++i)
            out = disjoint_union(out, term.base->build(term.size));
    return out;
}

std::string canonical_pattern_name(std::string_view name)
{
    std::string out;
    for (const auto &term : parse_pattern(name)) {
        if (!out.empty())
            out += '+';
        if (term.multiplicity > 1)
            out += std::to_string(term.multiplicity);
        out += term.base->canonical;
        if (term.base->takes_size)
            out += std::to_string(term.size);
    }
    return out;
}

namespace {

class InducedMatcher {
public:
    explicit InducedMatcher(const Graph &h) : h_(h), k_(h.order())
    {
        if (k_ <= kTableLimit) {
            allowed_.resize(k_ + 1);
            for (int j = 0; j <= k_; ++j)
                allowed_[j].assign(std::size_t{1} << pair_offset(j), 0);
            std::vector<int> tuple;
            std::vector<char> used(k_, 0);
            enumerate_tuples(tuple, used, 0);
        }
    }

    std::optional<std::vector<Vertex>> find(const Graph &g)
    {
        if (k_ > g.order())
            return std::nullopt;
        g_ = &g;
        chosen_.assign(k_, 0);
        if (!search(0, -1, 0))
            return std::nullopt;
        std::vector<Vertex> witness(k_);
        if (k_ <= kTableLimit) {
            const auto &tuple = full_tuples_.at(found_code_);
            for (int i = 0; i < k_; ++i)
                witness[tuple[i]] = chosen_[i];
        } else {
            auto tuple = embed(k_);
            for (int i = 0; i < k_; ++i)
                witness[(*tuple)[i]] = chosen_[i];
        }
        return witness;
    }

private:
    static constexpr int kTableLimit = 7;

    void enumerate_tuples(std::vector<int> &tuple, std::vector<char> &used, std::uint32_t code)
    {
        const int j = static_cast<int>(tuple.size());
        allowed_[j][code] = 1;
        if (j == k_) {
            full_tuples_.try_emplace(code, tuple);
            return;
        }
        for (int w = 0; w < k_; ++w) {
            if (used[w])
                continue;
            std::uint32_t next = code;
            for (int a = 0; a < j; ++a)
                if (h_.adjacent(tuple[a], w))
                    next |= std::uint32_t{1} << (pair_offset(j) + a);
            used[w] = 1;
            tuple.push_back(w);
            enumerate_tuples(tuple, used, next);
            tuple.pop_back();
            used[w] = 0;
        }
    }

    // Direct check for large patterns: can chosen_[0..j) be mapped injectively
    // into h preserving adjacency and non-adjacency?
    std::optional<std::vector<int>> embed(int j) const
    {
        std::vector<int> image(j, -1);
        std::vector<char> used(k_, 0);
        std::function<bool(int)> place = [&](int i) {
            if (i == j)
                return true;
            for (int w = 0; w < k_; ++w) {
                if (used[w])
                    continue;
                bool ok = true;
                for (int a = 0; a < i && ok; ++a)
                    ok = g_->adjacent(chosen_[a], chosen_[i]) == h_.adjacent(image[a], w);
                if (!ok)
                    continue;
                used[w] = 1;
                image[i] = w;
                if (place(i + 1))
                    return true;
                used[w] = 0;
            }
            return false;
        };
        if (!place(0))
            return std::nullopt;
        return image;
    }

    bool search(int depth, int last, std::uint32_t code)
    {
        if (depth == k_) {
            found_code_ = code;
            return true;
        }
        const int n = g_->order();
        for (int v = last + 1; v <= n - (k_ - depth); ++v) {
            chosen_[depth] = v;
            if (k_ <= kTableLimit) {
                std::uint32_t next = code;
                for (int a = 0; a < depth; ++a)
                    if (g_->adjacent(chosen_[a], v))
                        next |= std::uint32_t{1} << (pair_offset(depth) + a);
                if (!allowed_[depth + 1][next])
                    continue;
                if (search(depth + 1, v, next))
                    return true;
            } else {
                if (!embed(depth + 1))
                    continue;
                if (search(depth + 1, v, 0))
                    return true;
            }
        }
        return false;
    }

    const Graph &h_;
    int k_;
    std::vector<std::vector<std::uint8_t>> allowed_;
    std::unordered_map<std::uint32_t, std::vector<int>> full_tuples_;
    const Graph *g_ = nullptr;
    std::vector<Vertex> chosen_;
    std::uint32_t found_code_ = 0;
};

bool is_forest(const Graph &g)
{
    return g.size() + components(g).size() == static_cast<std::size_t>(g.order());
}

} // namespace

std::optional<std::vector<Vertex>> contains_induced(const Graph &g, const Graph &h)
{
    InducedMatcher matcher(h);
    return matcher.find(g);
}

bool is_h_free(const Graph &g, const Graph &h)
{
    return !contains_induced(g, h).has_value();
}

bool is_induced_subgraph_of(const Graph &h, std::string_view pattern)
{
    return contains_induced(pattern_graph(pattern), h).has_value();
}

bool is_linear_forest(const Graph &g)
{
    return g.max_degree() <= 2 && is_forest(g);
}

OlariuKind olariu_kind(const Graph &g)
{
    static const Graph three_p1 = pattern_graph("3P1");
    if (is_h_free(g, three_p1))
        return OlariuKind::ThreeP1Free;
    for (const auto &comp : components(g))
        if (!is_clique(g, comp))
            return OlariuKind::Neither;
    return OlariuKind::CliqueUnion;
}

const char *to_string(OlariuKind kind)
{
    switch (kind) {
    case OlariuKind::ThreeP1Free:
        return "3P1-free";
    case OlariuKind::CliqueUnion:
        return "clique-union";
    case OlariuKind::Neither:
        return "neither";
    }
    return "?";
}

const char *to_string(Complexity c)
{
    switch (c) {
    case Complexity::Poly:
        return "poly";
    case Complexity::NPHard:
        return "np-hard";
    case Complexity::NPComplete:
        return "np-complete";
    case Complexity::Open:
        return "open";
    }
    return "?";
}

namespace {

void require_nonempty(const Graph &h)
{
    if (h.empty())
        throw PreconditionError("pattern graph must have at least one vertex");
}

bool contains(const Graph &h, std::string_view pattern)
{
    return contains_induced(h, pattern_graph(pattern)).has_value();
}

// Reason for hardness when h is not a linear forest.
std::string non_linear_forest_reason(const Graph &h)
{
    if (contains(h, "C3"))
        return "H contains induced C3 (hard on bipartite graphs)";
    if (!is_forest(h))
        return "H contains an induced cycle of length >= 4 (hard on split graphs plus three stars)";
    return "H contains induced claw (hard on line graphs)";
}

std::string open_family(const Graph &h)
{
    int singles = 0;
    std::vector<int> paths;
    for (const auto &comp : components(h)) {
        if (comp.size() == 1)
            ++singles;
        else
            paths.push_back(static_cast<int>(comp.size()));
    }
    std::sort(paths.begin(), paths.end(), std::greater<>());
    const std::vector<int> p42{4, 2}, p4{4}, p32{3, 2}, p3{3}, p22{2, 2}, p2{2};
    if (paths == p42)
        return "P4+P2+sP1 (s>=0)";
    if (paths == p4 && singles >= 1)
        return "P4+sP1 (s>=1)";
    if (paths == p32)
        return "P3+P2+sP1 (s>=0)";
    if (paths == p3 && singles >= 2)
        return "P3+sP1 (s>=2)";
    if (paths == p22 && singles >= 2)
        return "2P2+sP1 (s>=2)";
    if (paths == p2 && singles >= 3)
        return "P2+sP1 (s>=3)";
    if (paths.empty() && singles >= 4)
        return "sP1 (s>=4)";
    throw std::logic_error("linear forest outside every open family");
}

} // namespace

DichotomyVerdict classify_b(const Graph &h)
{
    require_nonempty(h);
    if (is_induced_subgraph_of(h, "P4"))
        return {Complexity::Poly, "H is an induced subgraph of P4 (P4-free graphs)", {}};
    if (!is_forest(h))
        return {Complexity::NPHard, non_linear_forest_reason(h), {}};
    if (contains(h, "2P2"))
        return {Complexity::NPHard, "H contains induced 2P2 (hard on 2P2-free co-bipartite graphs)", {}};
    if (contains(h, "3P1"))
        return {Complexity::NPHard, "H contains induced 3P1 (hard on 2P2-free co-bipartite graphs)", {}};
    throw std::logic_error("(3P1,2P2)-free forest that is not an induced subgraph of P4");
}

DichotomyVerdict classify_tight(const Graph &h)
{
    require_nonempty(h);
    if (is_induced_subgraph_of(h, "P4"))
        return {Complexity::Poly, "H is an induced subgraph of P4 (P4-free graphs)", {}};
    if (is_induced_subgraph_of(h, "P3+P1"))
        return {Complexity::Poly, "H is an induced subgraph of P3+P1 (co-component decomposition)", {}};
    if (is_induced_subgraph_of(h, "2P2+P1"))
        return {Complexity::Poly, "H is an induced subgraph of 2P2+P1 (b-precolouring extension)", {}};
    if (!is_linear_forest(h))
        return {Complexity::NPComplete, non_linear_forest_reason(h), {}};
    if (contains(h, "P5"))
        return {Complexity::NPComplete, "H contains induced P5 (hard on split graphs plus three stars)", {}};
    if (contains(h, "3P2"))
        return {Complexity::NPComplete, "H contains induced 3P2 (modified star gadget)", {}};
    if (contains(h, "2P3"))
        return {Complexity::NPComplete, "H contains induced 2P3 (clique-chain gadget)", {}};
    auto family = open_family(h);
    return {Complexity::Open, "linear forest in an unresolved family", family};
}

DichotomyVerdict classify_fall(const Graph &h)
{
    require_nonempty(h);
    if (is_induced_subgraph_of(h, "P4"))
        return {Complexity::Poly, "H is an induced subgraph of P4 (P4-free graphs)", {}};
    if (is_induced_subgraph_of(h, "P3+P1"))
        return {Complexity::Poly, "H is an induced subgraph of P3+P1 (co-component decomposition)", {}};
    if (contains(h, "C3"))
        return {Complexity::NPHard, "H contains induced C3 (fall 3-colouring of bipartite graphs plus gadget)", {}};
    if (!is_forest(h))
        return {Complexity::NPHard, "H contains an induced cycle of length >= 4 (hard on chordal graphs)", {}};
    if (!is_linear_forest(h))
        return {Complexity::NPHard, "H contains induced claw (fall 3-colouring of line graphs plus C3)", {}};
    for (const char *p : {"4P1", "P2+2P1", "2P2"})
        if (contains(h, p))
            return {Complexity::NPHard,
                    std::string("H contains induced ") + p + " (one-in-three SAT gadget, (C5,2P2,P2+2P1,4P1)-free)",
                    {}};
    throw std::logic_error("linear forest escaped the fall classification");
}

} // namespace bfall
