#pragma once

#include <array>
#include <vector>

namespace bfall {

/// Positive 3-literal formula where every variable occurs in exactly three
/// clauses, so there are as many clauses as variables. Variables are 0-based.
class Formula33 {
public:
    using Clause = std::array<int, 3>;

    /// Throws PreconditionError when the occurrence/distinctness invariants fail.
    explicit Formula33(std::vector<Clause> clauses);

    int variable_count() const { return static_cast<int>(clauses_.size()); }
    int clause_count() const { return static_cast<int>(clauses_.size()); }
    const std::vector<Clause> &clauses() const { return clauses_; }

    /// True when exactly one literal of every clause is set.
    bool one_in_three(const std::vector<bool> &assignment) const;

    friend bool operator==(const Formula33 &, const Formula33 &) = default;

private:
    std::vector<Clause> clauses_;
};

} // namespace bfall
