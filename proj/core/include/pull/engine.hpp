#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pull/board.hpp"

namespace pull {

// One pull: the box at box_from moves one cell in dir; the player ends two
// cells from box_from in dir.
struct Move {
    Pos box_from;
    Dir dir = Dir::L;

    auto operator<=>(const Move&) const = default;
};

// Search node: sorted box configuration plus the canonical key of the
// player's walk-reachable region (lexicographically smallest cell).
struct State {
    std::vector<Box> boxes;  // sorted
    Pos region_key;

    bool operator==(const State&) const = default;
};

struct StateHash {
    size_t operator()(const State& s) const;
};

// 4-connected floor cells reachable from `player` without crossing fixed
// cells or boxes. `boxes` must be sorted.
std::vector<Pos> player_region(const Board& board, const std::vector<Box>& boxes, Pos player);

// Scratch buffer reused across region computations.
class RegionScratch {
public:
    void reset(const Grid& grid);
    // Marks the region of `player`; returns its lexicographically smallest cell.
    Pos flood(const Board& board, const std::vector<Box>& boxes, Pos player);
    bool marked(Pos p) const { return mark_[grid_->index(p)] == stamp_; }
    const Grid* grid() const { return grid_; }

private:
    const Grid* grid_ = nullptr;
    std::vector<uint32_t> mark_;
    std::vector<Pos> queue_;
    uint32_t stamp_ = 0;
};

State initial_state(const Board& board);
State make_state(const Board& board, const std::vector<Box>& boxes, Pos player);

// Moves legal in `state`, ordered by box position row-major, then L,R,U,D.
std::vector<Move> legal_moves(const Board& board, const State& state);

// Precondition: m is legal in `state` (throws std::invalid_argument otherwise).
State apply_move(const Board& board, const State& state, Move m);

struct ReplayResult {
    bool ok = false;
    size_t failed_index = 0;   // valid when !ok
    std::string error;         // valid when !ok
    State final_state;         // valid when ok
    bool goal_reached = false; // valid when ok
};

// Applies moves in order, verifying legality of each.
ReplayResult replay(const Board& board, const std::vector<Move>& moves);

bool goal_reachable(const Board& board, const State& state);

// Witness text format: one `pull <row> <col> <L|R|U|D>` line per move;
// lines starting with ';' are comments.
std::string render_witness(const std::vector<Move>& moves);
std::vector<Move> parse_witness(const std::string& text);

}  // namespace pull
