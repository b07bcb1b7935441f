#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pull/catalog.hpp"
#include "pull/cnf.hpp"
#include "pull/engine.hpp"

namespace pull {

// Placement of one gadget instance on the board.
struct GadgetPlacement {
    std::string instance_id;   // e.g. "var1", "clause2", "nr3"
    std::string catalog_id;    // template id
    Orientation orientation = Orientation::Identity;
    Pos anchor;                // top-left of the transformed tile
    GadgetTemplate tile;       // transformed template
};

struct WireSegment {
    std::string id;            // e.g. "wire_go_c1_s0"
    std::vector<Pos> cells;    // walk order, board coordinates
};

struct LayoutPlan {
    std::vector<GadgetPlacement> gadgets;
    std::vector<WireSegment> wires;
};

struct CompiledBoard {
    Board board;
    LayoutPlan plan;
    // Every floor cell maps to a gadget instance id or wire id.
    std::map<Pos, std::string> provenance;
    // (clause index, slot index) -> (variable, polarity, go wire id, return wire id)
    struct LiteralRoute {
        int var;
        bool positive;
        std::string go_wire, return_wire;
    };
    std::map<std::pair<int, int>, LiteralRoute> literal_routing;
    CnfFormula cnf;

    std::string provenance_text() const;  // `cell <row> <col> <id>` lines
};

CompiledBoard compile(const CnfFormula& cnf, Variant variant);

// Reads the witness's pulls and reports the branch each variable gadget was
// taken through. Throws std::invalid_argument if the witness does not replay
// or touches both branches of one variable.
std::vector<bool> extract_assignment(const CompiledBoard& compiled,
                                     const std::vector<Move>& witness);

// Canonical solution for a satisfying assignment; the result replays to goal.
// Throws std::invalid_argument if the assignment does not satisfy the formula.
std::vector<Move> synthesize_solution(const CompiledBoard& compiled,
                                      const std::vector<bool>& assignment);

struct CompileStats {
    int height = 0, width = 0;
    int variable_gadgets = 0, clause_gadgets = 0, crossovers = 0, no_returns = 0;
    int wire_cells = 0;
    int total_literals = 0;
    uint64_t area = 0;
    // area <= size_bound_coefficient * (vars + literal occurrences)^3
    uint64_t size_bound = 0;

    std::string text() const;  // `key value` lines, fixed order
};

CompileStats stats(const CompiledBoard& compiled);

// CLI entry: writes <base>.board, <base>.prov, <base>.stats.
int run_compile_command(const std::string& cnfPath, const std::string& variantFlag,
                        const std::string& outBase);

}  // namespace pull
