#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pull/contract.hpp"
#include "pull/gadget.hpp"

namespace pull {

struct LtsLimits {
    uint64_t max_exact_states = 10'000'000;  // total across all searches
    double max_seconds = 60.0;
};

class LtsLimitError : public std::runtime_error {
public:
    LtsLimitError(const std::string& msg, uint64_t explored)
        : std::runtime_error(msg), explored(explored) {}
    uint64_t explored;
};

// Exhaustive port-to-port semantics of a tile: states are reachable internal
// box configurations quotiented by bisimulation; transitions are realizable
// (entry port -> exit port) plays, including same-port probes.
struct PortLts {
    std::vector<std::string> port_names;
    int num_states = 0;
    int initial = 0;
    struct Transition {
        int from;
        int in, out;  // port indices
        int to;
        auto operator<=>(const Transition&) const = default;
    };
    std::vector<Transition> transitions;  // sorted, unique

    // One representative box configuration per quotient state (tile coords).
    std::vector<std::vector<Box>> representatives;
    uint64_t exact_states_explored = 0;
    uint64_t raw_configs = 0;  // configurations before quotienting

    std::vector<Transition> from(int state) const;
};

PortLts build_port_lts(const GadgetTemplate& t, int stub_len, const LtsLimits& limits = {});

// Human-readable trace of LTS events for counterexamples.
struct TraceEvent {
    std::string in, out;
    bool probe() const { return in == out; }
};

struct CheckIssue {
    enum class Kind { Safety, Liveness, Forbid, PortMismatch } kind;
    std::string message;
    std::vector<TraceEvent> trace;  // counterexample, when applicable
};

struct CheckReport {
    bool pass = false;
    std::vector<CheckIssue> issues;
    uint64_t product_states = 0;

    std::string summary() const;
};

// Safety: every cross-traversal trace of the LTS is a trace of the contract
// automaton (probes are projected away, their state effects kept).
// Liveness: every must_allow word is realizable. Every must_forbid triple is
// checked explicitly.
CheckReport check_contract(const PortLts& lts, const PortContract& contract);

struct ScriptIssue {
    size_t script_index;
    std::string message;
};

struct ScriptReport {
    bool pass = false;
    std::vector<ScriptIssue> issues;
};

// Replays every declared script with stubs attached; when a contract is
// given, also checks each script's word is a trace of the automaton.
ScriptReport script_replay(const GadgetTemplate& t, const PortContract* contract = nullptr,
                           int stub_len = 3);

// True when the two minimized LTSs are isomorphic (used for the
// stub-length stability property).
bool lts_isomorphic(const PortLts& a, const PortLts& b);

}  // namespace pull
