#pragma once

#include <string>
#include <vector>

#include "pull/board.hpp"

namespace pull {

// Traversal event: entry port -> exit port, by name.
using PortPair = std::pair<std::string, std::string>;
using TraceWord = std::vector<PortPair>;

// Finite automaton over cross-traversal events; the machine-checkable form
// of a gadget's behavioral guarantee.
struct PortContract {
    std::string name;
    std::vector<std::string> states;
    int initial = -1;
    struct Transition {
        int from;
        std::string in, out;
        int to;
        bool operator==(const Transition&) const = default;
    };
    std::vector<Transition> transitions;
    std::vector<TraceWord> must_allow;
    struct Forbid {
        TraceWord history;
        std::string in, out;
    };
    std::vector<Forbid> must_forbid;

    int state_index(const std::string& s) const;
    // Port names mentioned anywhere in the contract.
    std::vector<std::string> port_names() const;
    void validate() const;  // throws ParseError
};

// Contract text format:
//   contract <id>
//   state <name> [initial]
//   trans <state> <in> <out> <state>
//   allow <in>-><out>[, <in>-><out>]*
//   forbid [<history word>] ; <in> -> <out>
// ';' at line start marks a comment (the forbid separator is internal).
PortContract parse_contract(const std::string& text);
std::string render_contract(const PortContract& c);

// "A1->A2, B1->B2" <-> trace word
TraceWord parse_trace_word(const std::string& text);
std::string render_trace_word(const TraceWord& w);

}  // namespace pull
