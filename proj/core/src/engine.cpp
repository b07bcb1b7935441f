#include "pull/engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pull {

size_t StateHash::operator()(const State& s) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(s.region_key.row) << 32 | static_cast<uint32_t>(s.region_key.col));
    for (const Box& b : s.boxes) {
        mix(static_cast<uint64_t>(b.pos.row) << 40 |
            static_cast<uint64_t>(static_cast<uint32_t>(b.pos.col)) << 8 | b.handles.raw());
    }
    return static_cast<size_t>(h);
}

namespace {

bool box_at_sorted(const std::vector<Box>& boxes, Pos p) {
    auto it = std::lower_bound(boxes.begin(), boxes.end(), p,
                               [](const Box& b, Pos q) { return b.pos < q; });
    return it != boxes.end() && it->pos == p;
}

}  // namespace

void RegionScratch::reset(const Grid& grid) {
    grid_ = &grid;
    mark_.assign(static_cast<size_t>(grid.height()) * grid.width(), 0);
    stamp_ = 0;
}

Pos RegionScratch::flood(const Board& board, const std::vector<Box>& boxes, Pos player) {
    if (grid_ != &board.grid) reset(board.grid);
    ++stamp_;
    queue_.clear();
    queue_.push_back(player);
    mark_[grid_->index(player)] = stamp_;
    Pos best = player;
    size_t head = 0;
    while (head < queue_.size()) {
        Pos p = queue_[head++];
        if (p < best) best = p;
        for (Dir d : kAllDirs) {
            Pos q = p + d;
            if (!grid_->is_floor(q)) continue;
            size_t idx = grid_->index(q);
            if (mark_[idx] == stamp_) continue;
            if (box_at_sorted(boxes, q)) continue;
            mark_[idx] = stamp_;
            queue_.push_back(q);
        }
    }
    return best;
}

std::vector<Pos> player_region(const Board& board, const std::vector<Box>& boxes, Pos player) {
    RegionScratch scratch;
    scratch.flood(board, boxes, player);
    std::vector<Pos> out;
    for (int r = 0; r < board.grid.height(); ++r)
        for (int c = 0; c < board.grid.width(); ++c)
            if (scratch.marked({r, c})) out.push_back({r, c});
    return out;
}

State make_state(const Board& board, const std::vector<Box>& boxes, Pos player) {
    State s;
    s.boxes = boxes;
    std::sort(s.boxes.begin(), s.boxes.end());
    RegionScratch scratch;
    s.region_key = scratch.flood(board, s.boxes, player);
    return s;
}

State initial_state(const Board& board) {
    return make_state(board, board.boxes, board.player_start);
}

std::vector<Move> legal_moves(const Board& board, const State& state) {
    RegionScratch scratch;
    scratch.flood(board, state.boxes, state.region_key);
    std::vector<Move> out;
    for (const Box& b : state.boxes) {
        for (Dir d : kAllDirs) {
            if (!b.handles.contains(d)) continue;
            Pos hand = b.pos + d;       // player stands here
            Pos dest = hand + d;        // player steps here
            if (!board.grid.is_floor(hand) || box_at_sorted(state.boxes, hand)) continue;
            if (!scratch.marked(hand)) continue;
            if (!board.grid.is_floor(dest) || box_at_sorted(state.boxes, dest)) continue;
            out.push_back({b.pos, d});
        }
    }
    return out;
}

State apply_move(const Board& board, const State& state, Move m) {
    // Validate against the state rather than trusting the caller.
    RegionScratch scratch;
    scratch.flood(board, state.boxes, state.region_key);
    auto it = std::lower_bound(state.boxes.begin(), state.boxes.end(), m.box_from,
                               [](const Box& b, Pos q) { return b.pos < q; });
    if (it == state.boxes.end() || it->pos != m.box_from)
        throw std::invalid_argument("apply_move: no box at move origin");
    if (!it->handles.contains(m.dir))
        throw std::invalid_argument("apply_move: direction not in handle set");
    Pos hand = m.box_from + m.dir;
    Pos dest = hand + m.dir;
    if (!board.grid.is_floor(hand) || box_at_sorted(state.boxes, hand) || !scratch.marked(hand))
        throw std::invalid_argument("apply_move: pull position unreachable");
    if (!board.grid.is_floor(dest) || box_at_sorted(state.boxes, dest))
        throw std::invalid_argument("apply_move: player destination blocked");

    State next;
    next.boxes = state.boxes;
    next.boxes[static_cast<size_t>(it - state.boxes.begin())].pos = hand;
    std::sort(next.boxes.begin(), next.boxes.end());
    next.region_key = scratch.flood(board, next.boxes, dest);
    return next;
}

ReplayResult replay(const Board& board, const std::vector<Move>& moves) {
    ReplayResult res;
    State s = initial_state(board);
    for (size_t i = 0; i < moves.size(); ++i) {
        try {
            s = apply_move(board, s, moves[i]);
        } catch (const std::invalid_argument& e) {
            res.ok = false;
            res.failed_index = i;
            res.error = e.what();
            return res;
        }
    }
    res.ok = true;
    res.final_state = s;
    res.goal_reached = goal_reachable(board, s);
    return res;
}

bool goal_reachable(const Board& board, const State& state) {
    if (box_at_sorted(state.boxes, board.goal)) return false;
    RegionScratch scratch;
    scratch.flood(board, state.boxes, state.region_key);
    return scratch.marked(board.goal);
}

std::string render_witness(const std::vector<Move>& moves) {
    std::ostringstream os;
    for (const Move& m : moves)
        os << "pull " << m.box_from.row << " " << m.box_from.col << " " << dir_char(m.dir) << "\n";
    return os.str();
}

std::vector<Move> parse_witness(const std::string& text) {
    std::vector<Move> out;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == ';') continue;
        std::istringstream ls(line);
        std::string kw, dirs;
        int row = 0, col = 0;
        ls >> kw >> row >> col >> dirs;
        if (kw != "pull" || dirs.size() != 1) {
            std::ostringstream os;
            os << "witness line " << lineno << ": expected 'pull <row> <col> <L|R|U|D>'";
            throw ParseError(os.str());
        }
        auto d = dir_from_char(dirs[0]);
        if (!d) throw ParseError("witness: bad direction on line " + std::to_string(lineno));
        out.push_back({{row, col}, *d});
    }
    return out;
}

}  // namespace pull
