#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pull/board.hpp"

namespace pull {

// Literal: variable index (1-based) with polarity.
struct Literal {
    int var = 0;
    bool positive = true;

    auto operator<=>(const Literal&) const = default;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<Literal>> clauses;

    // Direct evaluation. assignment[i] is the value of variable i+1.
    bool satisfied_by(const std::vector<bool>& assignment) const;
    // All satisfying assignments by truth table (requires num_vars <= 20).
    std::vector<std::vector<bool>> all_satisfying_assignments() const;
};

// DIMACS CNF: 'c' comment lines, 'p cnf <vars> <clauses>' header,
// zero-terminated clauses. Duplicate literals within a clause collapse.
CnfFormula parse_dimacs(const std::string& text);
std::string render_dimacs(const CnfFormula& f);

}  // namespace pull
