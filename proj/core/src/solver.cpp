#include "pull/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace pull {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Solvable: return "SOLVABLE";
        case Verdict::Unsolvable: return "UNSOLVABLE";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    explicit Deadline(double seconds)
        : end(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(seconds))) {}
    bool expired() const { return Clock::now() >= end; }
};

int column_potential(const std::vector<Box>& boxes) {
    int sum = 0;
    for (const Box& b : boxes) sum += b.pos.col;
    return sum;
}

}  // namespace

SolveOutcome solve(const Board& board, const SolveLimits& limits) {
    SolveOutcome out;
    Deadline deadline(limits.max_seconds);

    struct Node {
        State state;
        uint32_t parent;
        Move via;
        uint32_t depth;
    };
    std::vector<Node> nodes;
    std::unordered_map<State, uint32_t, StateHash> seen;

    State start = initial_state(board);
    nodes.push_back({start, UINT32_MAX, Move{}, 0});
    seen.emplace(start, 0);

    auto reconstruct = [&](uint32_t idx) {
        std::vector<Move> moves;
        while (nodes[idx].parent != UINT32_MAX) {
            moves.push_back(nodes[idx].via);
            idx = nodes[idx].parent;
        }
        std::reverse(moves.begin(), moves.end());
        return moves;
    };

    if (goal_reachable(board, start)) {
        out.verdict = Verdict::Solvable;
        out.states_explored = 1;
        out.frontier_peak = 1;
        return out;
    }

    size_t head = 0;
    uint64_t explored = 0;
    while (head < nodes.size()) {
        if (nodes.size() - head > out.frontier_peak) out.frontier_peak = nodes.size() - head;
        uint32_t cur = static_cast<uint32_t>(head++);
        ++explored;
        if (explored > limits.max_states || deadline.expired()) {
            out.verdict = Verdict::Unknown;
            out.states_explored = explored - 1;
            return out;
        }
        State state = nodes[cur].state;  // copy: nodes may reallocate
        uint32_t depth = nodes[cur].depth;
        for (Move m : legal_moves(board, state)) {
            State next = apply_move(board, state, m);
            auto [it, inserted] = seen.emplace(next, static_cast<uint32_t>(nodes.size()));
            if (!inserted) {
                if (board.variant == Variant::PullOne &&
                    nodes[it->second].depth != depth + 1) {
                    ++out.potential_violations;
                }
                continue;
            }
            nodes.push_back({std::move(next), cur, m, depth + 1});
            if (goal_reachable(board, nodes.back().state)) {
                out.verdict = Verdict::Solvable;
                out.witness = reconstruct(static_cast<uint32_t>(nodes.size() - 1));
                out.states_explored = explored;
                return out;
            }
        }
    }
    out.verdict = Verdict::Unsolvable;
    out.states_explored = explored;
    return out;
}

std::optional<uint64_t> count_reachable_states(const Board& board, const SolveLimits& limits) {
    Deadline deadline(limits.max_seconds);
    std::deque<State> frontier;
    std::unordered_map<State, char, StateHash> seen;
    State start = initial_state(board);
    frontier.push_back(start);
    seen.emplace(std::move(start), 0);
    uint64_t count = 0;
    while (!frontier.empty()) {
        State s = std::move(frontier.front());
        frontier.pop_front();
        ++count;
        if (count > limits.max_states || deadline.expired()) return std::nullopt;
        for (Move m : legal_moves(board, s)) {
            State next = apply_move(board, s, m);
            if (seen.emplace(next, 0).second) frontier.push_back(std::move(next));
        }
    }
    return count;
}

namespace {

// Exact search node: player cell plus box configuration.
struct ExactState {
    std::vector<Box> boxes;
    Pos player;
    bool operator==(const ExactState&) const = default;
};

struct ExactHash {
    size_t operator()(const ExactState& s) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(static_cast<uint64_t>(s.player.row) << 32 | static_cast<uint32_t>(s.player.col));
        for (const Box& b : s.boxes)
            mix(static_cast<uint64_t>(b.pos.row) << 40 |
                static_cast<uint64_t>(static_cast<uint32_t>(b.pos.col)) << 8 | b.handles.raw());
        return static_cast<size_t>(h);
    }
};

bool exact_box_at(const std::vector<Box>& boxes, Pos p) {
    auto it = std::lower_bound(boxes.begin(), boxes.end(), p,
                               [](const Box& b, Pos q) { return b.pos < q; });
    return it != boxes.end() && it->pos == p;
}

}  // namespace

SolveOutcome naive_solve(const Board& board, const SolveLimits& limits) {
    if (board.grid.height() * board.grid.width() > 64)
        throw std::invalid_argument("naive_solve: board larger than 64 cells");
    if (board.boxes.size() > 4)
        throw std::invalid_argument("naive_solve: more than 4 boxes");

    SolveOutcome out;
    Deadline deadline(limits.max_seconds);

    struct Entry {
        uint32_t id;
        uint32_t dist;
    };
    std::vector<ExactState> states;
    std::vector<uint32_t> parent;       // via-pull parent state id (or UINT32_MAX)
    std::vector<Move> parent_move;
    std::vector<uint32_t> dist;
    std::vector<char> settled;
    std::unordered_map<ExactState, uint32_t, ExactHash> ids;

    auto intern = [&](ExactState s) -> uint32_t {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(states.size());
        ids.emplace(s, id);
        states.push_back(std::move(s));
        parent.push_back(UINT32_MAX);
        parent_move.push_back({});
        dist.push_back(UINT32_MAX);
        settled.push_back(0);
        return id;
    };

    ExactState start{board.boxes, board.player_start};
    std::sort(start.boxes.begin(), start.boxes.end());
    uint32_t start_id = intern(std::move(start));
    dist[start_id] = 0;

    // 0-1 BFS: walking costs 0 pulls, pulling costs 1.
    std::deque<Entry> queue;
    queue.push_back({start_id, 0});
    uint64_t explored = 0;

    std::optional<uint32_t> goal_id;
    while (!queue.empty()) {
        Entry e = queue.front();
        queue.pop_front();
        if (settled[e.id]) continue;
        if (e.dist > dist[e.id]) continue;
        settled[e.id] = 1;
        ++explored;
        if (explored > limits.max_states || deadline.expired()) {
            out.verdict = Verdict::Unknown;
            out.states_explored = explored - 1;
            return out;
        }
        if (queue.size() > out.frontier_peak) out.frontier_peak = queue.size();
        ExactState cur = states[e.id];  // copy: states may reallocate
        if (cur.player == board.goal) {
            goal_id = e.id;
            break;
        }
        // Walk edges (cost 0).
        for (Dir d : kAllDirs) {
            Pos q = cur.player + d;
            if (!board.grid.is_floor(q) || exact_box_at(cur.boxes, q)) continue;
            ExactState next{cur.boxes, q};
            uint32_t nid = intern(std::move(next));
            if (dist[e.id] < dist[nid]) {
                dist[nid] = dist[e.id];
                // Walking keeps the same pull lineage.
                parent[nid] = parent[e.id];
                parent_move[nid] = parent_move[e.id];
                queue.push_front({nid, dist[nid]});
            }
        }
        // Pull edges (cost 1).
        for (size_t i = 0; i < cur.boxes.size(); ++i) {
            const Box& b = cur.boxes[i];
            for (Dir d : kAllDirs) {
                if (!b.handles.contains(d)) continue;
                Pos hand = b.pos + d;
                Pos dest = hand + d;
                if (cur.player != hand) continue;
                if (!board.grid.is_floor(dest) || exact_box_at(cur.boxes, dest)) continue;
                ExactState next = cur;
                next.boxes[i].pos = hand;
                next.player = dest;
                std::sort(next.boxes.begin(), next.boxes.end());
                uint32_t nid = intern(std::move(next));
                if (dist[e.id] + 1 < dist[nid]) {
                    dist[nid] = dist[e.id] + 1;
                    parent[nid] = e.id;
                    parent_move[nid] = {b.pos, d};
                    queue.push_back({nid, dist[nid]});
                }
            }
        }
    }

    out.states_explored = explored;
    if (!goal_id) {
        out.verdict = Verdict::Unsolvable;
        return out;
    }
    out.verdict = Verdict::Solvable;
    // Reconstruct the pull sequence by following pull parents.
    std::vector<Move> moves;
    uint32_t at = *goal_id;
    while (parent[at] != UINT32_MAX) {
        moves.push_back(parent_move[at]);
        at = parent[at];
    }
    std::reverse(moves.begin(), moves.end());
    out.witness = std::move(moves);
    return out;
}

}  // namespace pull
