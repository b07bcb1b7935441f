#include "pull/lts.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <sstream>
#include <unordered_map>

namespace pull {

namespace {

using Clock = std::chrono::steady_clock;

struct ConfigHash {
    size_t operator()(const std::vector<Box>& boxes) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (const Box& b : boxes)
            mix(static_cast<uint64_t>(b.pos.row) << 40 |
                static_cast<uint64_t>(static_cast<uint32_t>(b.pos.col)) << 8 | b.handles.raw());
        return static_cast<size_t>(h);
    }
};

}  // namespace

std::vector<PortLts::Transition> PortLts::from(int state) const {
    std::vector<Transition> out;
    for (const Transition& t : transitions)
        if (t.from == state) out.push_back(t);
    return out;
}

PortLts build_port_lts(const GadgetTemplate& t, int stub_len, const LtsLimits& limits) {
    Arena arena = build_arena(t, stub_len);
    Board board = arena.as_board(arena.stub_outer.empty() ? Pos{0, 0} : arena.stub_outer[0],
                                 {0, 0}, t.variant);
    board.boxes.clear();  // search works off explicit states

    const int nports = static_cast<int>(t.ports.size());
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(limits.max_seconds));

    std::vector<std::vector<Box>> configs;  // arena coordinates
    std::unordered_map<std::vector<Box>, int, ConfigHash> configIds;
    auto intern = [&](std::vector<Box> boxes) {
        auto it = configIds.find(boxes);
        if (it != configIds.end()) return it->second;
        int id = static_cast<int>(configs.size());
        configIds.emplace(boxes, id);
        configs.push_back(std::move(boxes));
        return id;
    };
    intern(arena.boxes);

    // Raw transitions between configurations.
    std::vector<std::array<int, 4>> raw;  // {from, in, out, to}
    uint64_t explored = 0;

    RegionScratch scratch;
    for (int cfg = 0; cfg < static_cast<int>(configs.size()); ++cfg) {
        for (int entry = 0; entry < nports; ++entry) {
            std::vector<Box> start = configs[cfg];  // copy: configs grows below
            // Entry blocked when a box sits on the stub's outer end.
            if (std::binary_search(start.begin(), start.end(), Box{arena.stub_outer[entry], {}},
                                   [](const Box& a, const Box& b) { return a.pos < b.pos; }))
                continue;
            // Exhaustive search over normalized states from this entry.
            std::unordered_map<State, char, StateHash> seen;
            std::vector<State> queue;
            State s0;
            s0.boxes = start;
            s0.region_key = scratch.flood(board, s0.boxes, arena.stub_outer[entry]);
            seen.emplace(s0, 0);
            queue.push_back(std::move(s0));
            size_t head = 0;
            while (head < queue.size()) {
                State s = queue[head++];
                ++explored;
                if (explored > limits.max_exact_states)
                    throw LtsLimitError("state limit exceeded while building port LTS", explored);
                if (Clock::now() > deadline)
                    throw LtsLimitError("time limit exceeded while building port LTS", explored);
                // Exit events: any stub outer end inside the player's region.
                scratch.flood(board, s.boxes, s.region_key);
                for (int out = 0; out < nports; ++out) {
                    Pos outer = arena.stub_outer[out];
                    if (board.grid.is_floor(outer) && scratch.marked(outer)) {
                        int to = intern(s.boxes);
                        raw.push_back({cfg, entry, out, to});
                    }
                }
                for (Move m : legal_moves(board, s)) {
                    State next = apply_move(board, s, m);
                    if (seen.emplace(next, 0).second) queue.push_back(std::move(next));
                }
            }
        }
    }

    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // Bisimulation quotient via signature refinement.
    int n = static_cast<int>(configs.size());
    std::vector<int> block(n, 0);
    int nblocks = 1;
    std::vector<std::vector<std::array<int, 3>>> outgoing(n);  // {in, out, to}
    for (auto& r : raw) outgoing[r[0]].push_back({r[1], r[2], r[3]});
    for (;;) {
        std::map<std::pair<int, std::vector<std::array<int, 3>>>, int> sigIds;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<std::array<int, 3>> sig;
            sig.reserve(outgoing[i].size());
            for (auto& tr : outgoing[i]) sig.push_back({tr[0], tr[1], block[tr[2]]});
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            auto key = std::make_pair(block[i], std::move(sig));
            auto [it, inserted] = sigIds.emplace(std::move(key), static_cast<int>(sigIds.size()));
            next[i] = it->second;
        }
        int newCount = static_cast<int>(sigIds.size());
        if (newCount == nblocks) {
            block = std::move(next);
            break;
        }
        block = std::move(next);
        nblocks = newCount;
    }

    // Restrict to blocks reachable from the initial block.
    std::vector<std::vector<std::array<int, 3>>> blockOut(nblocks);
    for (int i = 0; i < n; ++i)
        for (auto& tr : outgoing[i]) blockOut[block[i]].push_back({tr[0], tr[1], block[tr[2]]});
    for (auto& v : blockOut) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    std::vector<int> remap(nblocks, -1);
    std::vector<int> order;
    remap[block[0]] = 0;
    order.push_back(block[0]);
    for (size_t head = 0; head < order.size(); ++head) {
        for (auto& tr : blockOut[order[head]]) {
            if (remap[tr[2]] < 0) {
                remap[tr[2]] = static_cast<int>(order.size());
                order.push_back(tr[2]);
            }
        }
    }

    PortLts lts;
    for (const Port& p : t.ports) lts.port_names.push_back(p.name);
    lts.num_states = static_cast<int>(order.size());
    lts.initial = 0;
    lts.exact_states_explored = explored;
    lts.raw_configs = static_cast<uint64_t>(n);
    lts.representatives.resize(order.size());
    for (int i = 0; i < n; ++i) {
        int b = remap[block[i]];
        if (b >= 0 && lts.representatives[b].empty()) {
            std::vector<Box> rep;
            for (const Box& bx : configs[i])
                rep.push_back({{bx.pos.row - arena.tile_offset.row,
                                bx.pos.col - arena.tile_offset.col},
                               bx.handles});
            if (rep.empty()) rep.push_back({{-1000, -1000}, HandleSet{}});  // marker for "no boxes"
            lts.representatives[b] = std::move(rep);
        }
    }
    for (int ob = 0; ob < nblocks; ++ob) {
        if (remap[ob] < 0) continue;
        for (auto& tr : blockOut[ob]) {
            if (remap[tr[2]] < 0) continue;  // unreachable target cannot occur
            lts.transitions.push_back({remap[ob], tr[0], tr[1], remap[tr[2]]});
        }
    }
    std::sort(lts.transitions.begin(), lts.transitions.end());
    lts.transitions.erase(std::unique(lts.transitions.begin(), lts.transitions.end()),
                          lts.transitions.end());
    return lts;
}

namespace {

std::string event_str(const PortLts& lts, int in, int out) {
    return lts.port_names[static_cast<size_t>(in)] + "->" +
           lts.port_names[static_cast<size_t>(out)];
}

}  // namespace

std::string CheckReport::summary() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL");
    for (const CheckIssue& issue : issues) {
        os << "\n  " << issue.message;
        if (!issue.trace.empty()) {
            os << "\n    trace:";
            for (const TraceEvent& e : issue.trace) os << " " << e.in << "->" << e.out;
        }
    }
    return os.str();
}

CheckReport check_contract(const PortLts& lts, const PortContract& contract) {
    CheckReport report;

    // Port names referenced by the contract must exist on the tile.
    auto port_idx = [&](const std::string& name) -> int {
        for (size_t i = 0; i < lts.port_names.size(); ++i)
            if (lts.port_names[i] == name) return static_cast<int>(i);
        return -1;
    };
    for (const std::string& name : contract.port_names()) {
        if (port_idx(name) < 0) {
            report.issues.push_back({CheckIssue::Kind::PortMismatch,
                                     "contract references port '" + name + "' missing from gadget",
                                     {}});
        }
    }
    if (!report.issues.empty()) return report;

    const int nports = static_cast<int>(lts.port_names.size());
    const int ncs = static_cast<int>(contract.states.size());
    if (ncs > 64) {
        report.issues.push_back({CheckIssue::Kind::PortMismatch, "contract too large (<=64 states)", {}});
        return report;
    }
    // step[in][out][q] = bitmask of successor contract states.
    std::vector<std::vector<std::vector<uint64_t>>> step(
        static_cast<size_t>(nports),
        std::vector<std::vector<uint64_t>>(static_cast<size_t>(nports),
                                           std::vector<uint64_t>(static_cast<size_t>(ncs), 0)));
    for (const auto& tr : contract.transitions) {
        int i = port_idx(tr.in), o = port_idx(tr.out);
        step[static_cast<size_t>(i)][static_cast<size_t>(o)][static_cast<size_t>(tr.from)] |=
            1ull << tr.to;
    }

    std::vector<std::vector<PortLts::Transition>> out(static_cast<size_t>(lts.num_states));
    for (const auto& tr : lts.transitions) out[static_cast<size_t>(tr.from)].push_back(tr);

    // ---- Safety: product of LTS with the contract's subset automaton.
    struct ProductNode {
        int state;
        uint64_t mask;
        int parent;     // index into nodes
        int in, out;    // event taken from parent (-1 for root)
    };
    std::vector<ProductNode> nodes;
    std::map<std::pair<int, uint64_t>, int> seen;
    nodes.push_back({lts.initial, 1ull << contract.initial, -1, -1, -1});
    seen[{lts.initial, 1ull << contract.initial}] = 0;

    auto trace_to = [&](int nodeIdx, int in, int out) {
        std::vector<TraceEvent> trace;
        for (int at = nodeIdx; at >= 0 && nodes[static_cast<size_t>(at)].in >= 0;
             at = nodes[static_cast<size_t>(at)].parent) {
            const auto& n = nodes[static_cast<size_t>(at)];
            trace.push_back({lts.port_names[static_cast<size_t>(n.in)],
                             lts.port_names[static_cast<size_t>(n.out)]});
        }
        std::reverse(trace.begin(), trace.end());
        trace.push_back({lts.port_names[static_cast<size_t>(in)],
                         lts.port_names[static_cast<size_t>(out)]});
        return trace;
    };

    size_t safetyIssues = 0;
    for (size_t head = 0; head < nodes.size(); ++head) {
        ProductNode cur = nodes[head];
        for (const auto& tr : out[static_cast<size_t>(cur.state)]) {
            uint64_t nextMask;
            if (tr.in == tr.out) {
                nextMask = cur.mask;  // probes are projected away
            } else {
                nextMask = 0;
                uint64_t m = cur.mask;
                while (m) {
                    int q = std::countr_zero(m);
                    m &= m - 1;
                    nextMask |=
                        step[static_cast<size_t>(tr.in)][static_cast<size_t>(tr.out)][static_cast<size_t>(q)];
                }
                if (nextMask == 0) {
                    if (safetyIssues < 5) {
                        report.issues.push_back(
                            {CheckIssue::Kind::Safety,
                             "traversal " + event_str(lts, tr.in, tr.out) +
                                 " not permitted by the contract at this point",
                             trace_to(static_cast<int>(head), tr.in, tr.out)});
                    }
                    ++safetyIssues;
                    continue;
                }
            }
            auto key = std::make_pair(tr.to, nextMask);
            if (seen.find(key) == seen.end()) {
                seen[key] = static_cast<int>(nodes.size());
                nodes.push_back({tr.to, nextMask, static_cast<int>(head), tr.in, tr.out});
            }
        }
    }
    report.product_states = nodes.size();

    // ---- Liveness: each must_allow word realizable (probes free between steps).
    for (const TraceWord& word : contract.must_allow) {
        std::vector<std::vector<char>> visited(
            static_cast<size_t>(lts.num_states),
            std::vector<char>(word.size() + 1, 0));
        std::vector<std::pair<int, size_t>> stack{{lts.initial, 0}};
        visited[static_cast<size_t>(lts.initial)][0] = 1;
        bool ok = false;
        while (!stack.empty() && !ok) {
            auto [s, pos] = stack.back();
            stack.pop_back();
            if (pos == word.size()) {
                ok = true;
                break;
            }
            for (const auto& tr : out[static_cast<size_t>(s)]) {
                size_t npos;
                if (tr.in == tr.out) {
                    npos = pos;
                } else if (lts.port_names[static_cast<size_t>(tr.in)] == word[pos].first &&
                           lts.port_names[static_cast<size_t>(tr.out)] == word[pos].second) {
                    npos = pos + 1;
                } else {
                    continue;
                }
                if (!visited[static_cast<size_t>(tr.to)][npos]) {
                    visited[static_cast<size_t>(tr.to)][npos] = 1;
                    stack.push_back({tr.to, npos});
                }
            }
        }
        for (int s = 0; s < lts.num_states && !ok; ++s)
            if (visited[static_cast<size_t>(s)][word.size()]) ok = true;
        if (!ok) {
            report.issues.push_back({CheckIssue::Kind::Liveness,
                                     "required traversal sequence not realizable: " +
                                         render_trace_word(word),
                                     {}});
        }
    }

    // ---- Explicit forbid checks.
    for (const auto& f : contract.must_forbid) {
        // States reachable with projected trace == f.history.
        std::vector<std::vector<char>> visited(
            static_cast<size_t>(lts.num_states),
            std::vector<char>(f.history.size() + 1, 0));
        std::vector<std::pair<int, size_t>> stack{{lts.initial, 0}};
        visited[static_cast<size_t>(lts.initial)][0] = 1;
        while (!stack.empty()) {
            auto [s, pos] = stack.back();
            stack.pop_back();
            for (const auto& tr : out[static_cast<size_t>(s)]) {
                size_t npos;
                if (tr.in == tr.out) {
                    npos = pos;
                } else if (pos < f.history.size() &&
                           lts.port_names[static_cast<size_t>(tr.in)] == f.history[pos].first &&
                           lts.port_names[static_cast<size_t>(tr.out)] == f.history[pos].second) {
                    npos = pos + 1;
                } else {
                    continue;
                }
                if (!visited[static_cast<size_t>(tr.to)][npos]) {
                    visited[static_cast<size_t>(tr.to)][npos] = 1;
                    stack.push_back({tr.to, npos});
                }
            }
        }
        bool violated = false;
        for (int s = 0; s < lts.num_states && !violated; ++s) {
            if (!visited[static_cast<size_t>(s)][f.history.size()]) continue;
            for (const auto& tr : out[static_cast<size_t>(s)]) {
                if (lts.port_names[static_cast<size_t>(tr.in)] == f.in &&
                    lts.port_names[static_cast<size_t>(tr.out)] == f.out) {
                    std::vector<TraceEvent> trace;
                    for (const auto& [in, outp] : f.history) trace.push_back({in, outp});
                    trace.push_back({f.in, f.out});
                    report.issues.push_back(
                        {CheckIssue::Kind::Forbid,
                         "forbidden traversal " + f.in + "->" + f.out + " possible after history [" +
                             render_trace_word(f.history) + "]",
                         trace});
                    violated = true;
                    break;
                }
            }
        }
    }

    report.pass = report.issues.empty();
    return report;
}

ScriptReport script_replay(const GadgetTemplate& t, const PortContract* contract, int stub_len) {
    ScriptReport report;
    Arena arena = build_arena(t, stub_len);
    Board board = arena.as_board({0, 0}, {0, 0}, t.variant);
    board.boxes.clear();

    RegionScratch scratch;
    for (size_t si = 0; si < t.scripts.size(); ++si) {
        const TraversalScript& script = t.scripts[si];
        std::vector<Box> boxes = arena.boxes;
        uint64_t cmask = contract ? (1ull << contract->initial) : 0;
        bool failed = false;
        for (size_t leg = 0; leg < script.word.size() && !failed; ++leg) {
            const auto& [inName, outName] = script.word[leg];
            int in = t.port_index(inName);
            int outp = t.port_index(outName);
            Pos player = arena.stub_outer[static_cast<size_t>(in)];
            auto fail = [&](const std::string& msg) {
                report.issues.push_back({si, "leg " + std::to_string(leg + 1) + " (" + inName +
                                                 "->" + outName + "): " + msg});
                failed = true;
            };
            if (std::binary_search(boxes.begin(), boxes.end(), Box{player, {}},
                                   [](const Box& a, const Box& b) { return a.pos < b.pos; })) {
                fail("entry stub blocked by a box");
                break;
            }
            for (size_t mi = 0; mi < script.legs[leg].size() && !failed; ++mi) {
                Move m = script.legs[leg][mi];
                Pos from{m.box_from.row + arena.tile_offset.row,
                         m.box_from.col + arena.tile_offset.col};
                auto it = std::lower_bound(boxes.begin(), boxes.end(), from,
                                           [](const Box& b, Pos q) { return b.pos < q; });
                if (it == boxes.end() || it->pos != from) {
                    fail("move " + std::to_string(mi + 1) + ": no box at " +
                         std::to_string(m.box_from.row) + "," + std::to_string(m.box_from.col));
                    break;
                }
                if (!it->handles.contains(m.dir)) {
                    fail("move " + std::to_string(mi + 1) + ": direction not in handle set");
                    break;
                }
                Pos hand = from + m.dir;
                Pos dest = hand + m.dir;
                scratch.flood(board, boxes, player);
                auto blocked = [&](Pos p) {
                    return !board.grid.is_floor(p) ||
                           std::binary_search(boxes.begin(), boxes.end(), Box{p, {}},
                                              [](const Box& a, const Box& b) { return a.pos < b.pos; });
                };
                if (blocked(hand) || !scratch.marked(hand)) {
                    fail("move " + std::to_string(mi + 1) + ": pull position unreachable");
                    break;
                }
                if (blocked(dest)) {
                    fail("move " + std::to_string(mi + 1) + ": player destination blocked");
                    break;
                }
                it->pos = hand;
                std::sort(boxes.begin(), boxes.end());
                player = dest;
            }
            if (failed) break;
            scratch.flood(board, boxes, player);
            Pos exitCell = arena.stub_outer[static_cast<size_t>(outp)];
            if (std::binary_search(boxes.begin(), boxes.end(), Box{exitCell, {}},
                                   [](const Box& a, const Box& b) { return a.pos < b.pos; }) ||
                !scratch.marked(exitCell)) {
                fail("exit port unreachable after scripted pulls");
                break;
            }
            if (contract && inName != outName) {
                uint64_t next = 0;
                for (const auto& tr : contract->transitions) {
                    if (tr.in == inName && tr.out == outName && (cmask >> tr.from & 1))
                        next |= 1ull << tr.to;
                }
                if (next == 0) {
                    fail("traversal not a contract transition at this point");
                    break;
                }
                cmask = next;
            }
        }
    }
    report.pass = report.issues.empty();
    return report;
}

bool lts_isomorphic(const PortLts& a, const PortLts& b) {
    if (a.num_states != b.num_states) return false;
    if (a.port_names.size() != b.port_names.size()) return false;
    // Map b's port indices onto a's by name.
    std::vector<int> pmap(b.port_names.size(), -1);
    for (size_t i = 0; i < b.port_names.size(); ++i) {
        for (size_t j = 0; j < a.port_names.size(); ++j)
            if (a.port_names[j] == b.port_names[i]) pmap[i] = static_cast<int>(j);
        if (pmap[i] < 0) return false;
    }
    int n = a.num_states;
    int total = n + b.num_states;
    std::vector<std::vector<std::array<int, 3>>> outgoing(static_cast<size_t>(total));
    for (const auto& tr : a.transitions)
        outgoing[static_cast<size_t>(tr.from)].push_back({tr.in, tr.out, tr.to});
    for (const auto& tr : b.transitions)
        outgoing[static_cast<size_t>(n + tr.from)].push_back(
            {pmap[static_cast<size_t>(tr.in)], pmap[static_cast<size_t>(tr.out)], n + tr.to});

    std::vector<int> block(static_cast<size_t>(total), 0);
    int nblocks = 1;
    for (;;) {
        std::map<std::pair<int, std::vector<std::array<int, 3>>>, int> sigIds;
        std::vector<int> next(static_cast<size_t>(total));
        for (int i = 0; i < total; ++i) {
            std::vector<std::array<int, 3>> sig;
            for (auto& tr : outgoing[static_cast<size_t>(i)])
                sig.push_back({tr[0], tr[1], block[static_cast<size_t>(tr[2])]});
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            auto key = std::make_pair(block[static_cast<size_t>(i)], std::move(sig));
            auto [it, inserted] = sigIds.emplace(std::move(key), static_cast<int>(sigIds.size()));
            next[static_cast<size_t>(i)] = it->second;
        }
        int newCount = static_cast<int>(sigIds.size());
        bool stable = newCount == nblocks;
        block = std::move(next);
        nblocks = newCount;
        if (stable) break;
    }
    if (block[static_cast<size_t>(a.initial)] != block[static_cast<size_t>(n + b.initial)])
        return false;
    // Both inputs are bisimulation-minimal, so blocks must pair states 1:1.
    std::map<int, std::pair<int, int>> counts;
    for (int i = 0; i < n; ++i) counts[block[static_cast<size_t>(i)]].first++;
    for (int i = n; i < total; ++i) counts[block[static_cast<size_t>(i)]].second++;
    for (auto& [blk, c] : counts)
        if (c.first != c.second) return false;
    return true;
}

}  // namespace pull
