#include "bfall/formula.hpp"

#include "bfall/graph.hpp"

#include <string>

namespace bfall {

Formula33::Formula33(std::vector<Clause> clauses) : clauses_(std::move(clauses))
{
    const int n = static_cast<int>(clauses_.size());
    std::vector<int> occurrences(n, 0);
    for (std::size_t j = 0; j < clauses_.size(); ++j) {
        const auto &c = clauses_[j];
        for (int x : c) {
            if (x < 0 || x >= n)
                throw PreconditionError("clause " + std::to_string(j + 1) + " uses variable " + std::to_string(x + 1) +
                                        " outside 1.." + std::to_string(n));
            ++occurrences[x];
        }
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
            throw PreconditionError("clause " + std::to_string(j + 1) + " repeats a variable");
    }
    for (int x = 0; x < n; ++x)
        if (occurrences[x] != 3)
            throw PreconditionError("variable " + std::to_string(x + 1) + " occurs " +
                                    std::to_string(occurrences[x]) + " times, expected 3");
}

bool Formula33::one_in_three(const std::vector<bool> &assignment) const
{
    if (static_cast<int>(assignment.size()) != variable_count())
        return false;
    for (const auto &c : clauses_) {
        int set = 0;
        for (int x : c)
            set += assignment[x] ? 1 : 0;
        if (set != 1)
            return false;
    }
    return true;
}

} // namespace bfall
