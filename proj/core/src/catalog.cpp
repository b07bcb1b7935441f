#include "pull/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pull/tilekit.hpp"

namespace pull {

namespace {

// ---------------------------------------------------------------- contracts

const char* kNoReturnContract = R"(contract no_return
state fresh initial
state used
trans fresh A B used
allow A->B
forbid ; B -> A
forbid A->B ; A -> B
forbid A->B ; B -> A
)";

// The physical two-way is two antiparallel one-way doors; entering the inner
// side first spends the return door, so the automaton tracks both.
const char* kTwoWayContract = R"(contract two_way
state nn initial
state un
state nu
state uu
trans nn A B un
trans nn B A nu
trans un B A uu
trans nu A B uu
allow A->B, B->A
forbid A->B ; A -> B
forbid A->B, B->A ; A -> B
forbid A->B, B->A ; B -> A
)";

// ------------------------------------------------------------------- tiles

// One-handle one-way door (west to east): the box is pulled left out of the
// east corridor, plugging the shaft that connects the entrance. The player
// rejoins east through the basement loop.
const char* kNoReturnOne = R"(pull-gadget v1
name no_return.one
variant PULL_ONE
size 6 6
######
...###
##.###
#..<..
#...##
######
port A 1 0 h
port B 3 5 h
orient identity flipV
contract no_return
script A->B : 3 3 L
)";

// Opposite-handles one-way door (north to south). The horizontal box seals
// the entrance column behind the player; the vertical box swaps the open
// half of the east column from top to bottom. Undoing either pull entombs
// the puller, so the door cannot be reopened.
const char* kNoReturnOpp = R"(pull-gadget v1
name no_return.opp
variant PULL_OPP
size 7 6
##.###
##.###
#..H.#
#.#..#
#...V#
####.#
###..#
port A 0 2 v
port B 6 3 v
orient identity rot90 rot180 rot270 flipH flipV flipMain flipAnti
contract no_return
script A->B : 2 3 L, 4 4 U
)";


// One-handle one-way door, north to south. Same plug mechanism as the
// west-to-east door, turned by construction since PULL_ONE tiles cannot
// rotate.
const char* kNoReturnSouthOne = R"(pull-gadget v1
name no_return_south.one
variant PULL_ONE
size 7 7
##.####
##.####
##.####
#..<..#
#...#.#
####..#
####.##
port A 0 2 v
port B 6 4 v
orient identity flipV
contract no_return
script A->B : 3 3 L
)";

// All-handles one-way door (north to south): the entrance box pair is
// dragged up the east lane; the boxes end up stacked across the entrance
// column, which no reachable pull can reopen.
const char* kNoReturnPull = R"(pull-gadget v1
name no_return.pull
variant PULL
size 7 6
##.#..
##....
####..
####..
####B.
####B#
###..#
port A 0 2 v
port B 6 3 v
orient identity rot90 rot180 rot270 flipH flipV flipMain flipAnti
contract no_return
script A->B : 4 4 U, 3 4 U, 2 4 U, 5 4 U, 4 4 U
)";
struct RawEntry {
    const char* id;
    const char* gadget;
    const char* contract;
};

const RawEntry kRawEntries[] = {
    {"no_return.one", kNoReturnOne, kNoReturnContract},
    {"no_return.opp", kNoReturnOpp, kNoReturnContract},
    {"no_return_south.one", kNoReturnSouthOne, kNoReturnContract},
    {"no_return.pull", kNoReturnPull, kNoReturnContract},
};

const RawEntry* find_raw(const std::string& id) {
    for (const RawEntry& e : kRawEntries)
        if (id == e.id) return &e;
    return nullptr;
}

// ------------------------------------------------------------- composites

// Two one-way doors in antiparallel between two junction corridors.
GadgetTemplate build_two_way(Variant v) {
    if (v != Variant::PullOpp) throw std::invalid_argument("two_way built for PULL_OPP");
    GadgetTemplate nr = catalog_entry("no_return.opp").tmpl;
    GadgetTemplate down = nr;                               // A top, B bottom
    GadgetTemplate up = transform(nr, Orientation::Rot180);  // A bottom, B top

    // Canvas: doors side by side, junction rows above and below.
    TileCanvas canvas(11, 16);
    Pos downAt{2, 1};
    Pos upAt{2, 9};
    canvas.blit(down, downAt);
    canvas.blit(up, upAt);
    Pos downIn = placed_port(down, downAt, "A");   // (2,3)
    Pos downOut = placed_port(down, downAt, "B");  // (8,4)
    Pos upIn = placed_port(up, upAt, "A");         // bottom of the up door
    Pos upOut = placed_port(up, upAt, "B");        // top of the up door

    // Outer junction: port A on the top edge, linked to both door tops.
    canvas.carve_path({{0, 3}, {1, 3}, {1, upOut.col}, {2, upOut.col}});
    canvas.carve({1, downIn.col}, downIn);
    // Inner junction: port B on the bottom edge, linked to both door bottoms.
    canvas.carve_path({{10, 4}, {9, 4}, {9, upIn.col}, upIn});
    canvas.carve({9, downOut.col}, downOut);

    std::vector<Port> ports{{"A", {0, 3}, false}, {"B", {10, 4}, false}};
    GadgetTemplate t = canvas.to_template("two_way.opp", v, ports,
                                          {Orientation::Identity, Orientation::Rot90,
                                           Orientation::Rot180, Orientation::Rot270,
                                           Orientation::FlipH, Orientation::FlipV,
                                           Orientation::FlipMain, Orientation::FlipAnti},
                                          "two_way");
    TraversalScript script;
    script.word = {{"A", "B"}, {"B", "A"}};
    script.legs.resize(2);
    for (const auto& leg : nr.scripts.at(0).legs.at(0)) {
        script.legs[0].push_back(
            {{leg.box_from.row + downAt.row, leg.box_from.col + downAt.col}, leg.dir});
    }
    for (const auto& leg : up.scripts.at(0).legs.at(0)) {
        script.legs[1].push_back(
            {{leg.box_from.row + upAt.row, leg.box_from.col + upAt.col}, leg.dir});
    }
    t.scripts.push_back(std::move(script));
    return t;
}

struct CompositeEntry {
    const char* id;
    const char* contract;
    GadgetTemplate (*build)();
};

const CompositeEntry kComposites[] = {
    {"two_way.opp", kTwoWayContract, [] { return build_two_way(Variant::PullOpp); }},
};

const CompositeEntry* find_composite(const std::string& id) {
    for (const CompositeEntry& e : kComposites)
        if (id == e.id) return &e;
    return nullptr;
}

}  // namespace

std::vector<std::string> catalog_ids() {
    std::vector<std::string> out;
    for (const RawEntry& e : kRawEntries) out.push_back(e.id);
    for (const CompositeEntry& e : kComposites) out.push_back(e.id);
    return out;
}

bool catalog_has(const std::string& id) { return find_raw(id) || find_composite(id); }

CatalogEntry catalog_entry(const std::string& id) {
    if (const RawEntry* raw = find_raw(id)) {
        CatalogEntry e;
        e.id = id;
        e.tmpl = load_gadget(raw->gadget);
        e.contract = parse_contract(raw->contract);
        return e;
    }
    if (const CompositeEntry* comp = find_composite(id)) {
        CatalogEntry e;
        e.id = id;
        e.tmpl = comp->build();
        e.contract = parse_contract(comp->contract);
        return e;
    }
    throw std::invalid_argument("unknown catalog gadget: " + id);
}

GadgetTemplate make_clause_tile(int literals, Variant v) {
    (void)literals;
    (void)v;
    throw std::logic_error("make_clause_tile: not implemented yet");
}

PortContract make_clause_contract(int literals) {
    (void)literals;
    throw std::logic_error("make_clause_contract: not implemented yet");
}

GadgetTemplate make_variable_tile(int pos_occurrences, int neg_occurrences, Variant v) {
    (void)pos_occurrences;
    (void)neg_occurrences;
    (void)v;
    throw std::logic_error("make_variable_tile: not implemented yet");
}

PortContract make_variable_contract(int pos_occurrences, int neg_occurrences) {
    (void)pos_occurrences;
    (void)neg_occurrences;
    throw std::logic_error("make_variable_contract: not implemented yet");
}

void write_catalog(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::map<std::string, std::string> contracts;
    for (const std::string& id : catalog_ids()) {
        CatalogEntry e = catalog_entry(id);
        std::ofstream g(fs::path(dir) / (id + ".gadget"));
        g << render_gadget(e.tmpl);
        contracts[e.contract.name] = render_contract(e.contract);
    }
    for (auto& [name, text] : contracts) {
        std::ofstream f(fs::path(dir) / (name + ".contract"));
        f << text;
    }
}

}  // namespace pull
