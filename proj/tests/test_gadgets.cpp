#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pull/catalog.hpp"
#include "pull/lts.hpp"

using namespace pull;

namespace {

// Bare straight corridor: two ports, no boxes.
const char* kCorridor = R"(pull-gadget v1
name corridor
variant PULL
size 3 5
#####
.....
#####
port A 1 0 h
port B 1 4 h
orient identity rot90 rot180 rot270 flipH flipV flipMain flipAnti
contract corridor_open
script A->B :
script B->A :
)";

const char* kCorridorContract = R"(contract corridor_open
state s initial
trans s A B s
trans s B A s
allow A->B
allow B->A
allow A->B, B->A, A->B
)";

int count_transitions(const PortLts& lts, const std::string& in, const std::string& out) {
    int n = 0;
    for (const auto& tr : lts.transitions) {
        if (lts.port_names[static_cast<size_t>(tr.in)] == in &&
            lts.port_names[static_cast<size_t>(tr.out)] == out)
            ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("corridor tile: one-state LTS with all four events") {
    GadgetTemplate t = load_gadget(kCorridor);
    PortLts lts = build_port_lts(t, 3);
    CHECK(lts.num_states == 1);
    CHECK(count_transitions(lts, "A", "B") == 1);
    CHECK(count_transitions(lts, "B", "A") == 1);
    CHECK(count_transitions(lts, "A", "A") == 1);
    CHECK(count_transitions(lts, "B", "B") == 1);
    PortContract c = parse_contract(kCorridorContract);
    CheckReport report = check_contract(lts, c);
    CHECK(report.pass);
}

TEST_CASE("corridor vs no_return contract fails liveness/safety") {
    GadgetTemplate t = load_gadget(kCorridor);
    PortLts lts = build_port_lts(t, 3);
    PortContract c = parse_contract(R"(contract no_return
state fresh initial
state used
trans fresh A B used
allow A->B
forbid ; B -> A
)");
    CheckReport report = check_contract(lts, c);
    CHECK(!report.pass);
}

TEST_CASE("port name mismatch reported") {
    GadgetTemplate t = load_gadget(kCorridor);
    PortLts lts = build_port_lts(t, 3);
    PortContract c = parse_contract(R"(contract other
state s initial
trans s X Y s
allow X->Y
)");
    CheckReport report = check_contract(lts, c);
    REQUIRE(!report.pass);
    CHECK(report.issues[0].kind == CheckIssue::Kind::PortMismatch);
}

TEST_CASE("gadget text round-trip") {
    GadgetTemplate t = load_gadget(kCorridor);
    std::string text = render_gadget(t);
    GadgetTemplate back = load_gadget(text);
    CHECK(render_gadget(back) == text);
    CHECK(back.ports.size() == t.ports.size());
    CHECK(back.scripts.size() == t.scripts.size());
}

TEST_CASE("contract text round-trip") {
    CatalogEntry e = catalog_entry("no_return.one");
    std::string text = render_contract(e.contract);
    PortContract back = parse_contract(text);
    CHECK(render_contract(back) == text);
}

TEST_CASE("transform geometry and handles") {
    GadgetTemplate t = load_gadget(kCorridor);
    GadgetTemplate r = transform(t, Orientation::Rot90);
    CHECK(r.grid.height() == t.grid.width());
    CHECK(r.grid.width() == t.grid.height());
    // Horizontal corridor becomes vertical: ports now on top/bottom edges.
    CHECK(!r.ports[0].horizontal);
    CHECK(!r.ports[1].horizontal);
    PortLts lts = build_port_lts(r, 3);
    CHECK(lts.num_states == 1);
}

TEST_CASE("transform rejects illegal handle remap") {
    CatalogEntry e = catalog_entry("no_return.one");
    CHECK_THROWS_AS(transform(e.tmpl, Orientation::Rot180), ParseError);  // not allowed
    GadgetTemplate flipped = transform(e.tmpl, Orientation::FlipV);       // allowed, legal
    CHECK(flipped.boxes[0].handles == HandleSet::of({Dir::L}));
}

TEST_CASE("one-handle no-return passes its contract") {
    CatalogEntry e = catalog_entry("no_return.one");
    PortLts lts = build_port_lts(e.tmpl, 3);
    CHECK(lts.num_states == 2);
    CheckReport report = check_contract(lts, e.contract);
    INFO(report.summary());
    CHECK(report.pass);
}

TEST_CASE("no-return orientation stability") {
    CatalogEntry e = catalog_entry("no_return.one");
    for (Orientation o : e.tmpl.allowed_orientations) {
        GadgetTemplate t = transform(e.tmpl, o);
        PortLts lts = build_port_lts(t, 3);
        CheckReport report = check_contract(lts, e.contract);
        INFO(orientation_name(o), ": ", report.summary());
        CHECK(report.pass);
    }
}

TEST_CASE("no-return stub-length stability") {
    CatalogEntry e = catalog_entry("no_return.one");
    PortLts a = build_port_lts(e.tmpl, 3);
    PortLts b = build_port_lts(e.tmpl, 4);
    CHECK(lts_isomorphic(a, b));
}

TEST_CASE("script replay catches broken scripts") {
    CatalogEntry e = catalog_entry("no_return.one");
    ScriptReport ok = script_replay(e.tmpl, &e.contract, 3);
    CHECK(ok.pass);

    GadgetTemplate broken = e.tmpl;
    broken.scripts[0].legs[0][0].dir = Dir::U;  // box has no U handle
    ScriptReport bad = script_replay(broken, &e.contract, 3);
    CHECK(!bad.pass);
}

TEST_CASE("mutated tile fails the contract with a counterexample") {
    CatalogEntry e = catalog_entry("no_return.one");
    // Open the wall right of the shaft: the entrance reconnects past the plug.
    GadgetTemplate mutated = e.tmpl;
    mutated.grid.set({2, 3}, Cell::Floor);
    PortLts lts = build_port_lts(mutated, 3);
    CheckReport report = check_contract(lts, e.contract);
    CHECK(!report.pass);
    bool hasTrace = false;
    for (const auto& issue : report.issues) hasTrace |= !issue.trace.empty();
    CHECK(hasTrace);
}

TEST_CASE("limit errors carry counts") {
    CatalogEntry e = catalog_entry("no_return.one");
    LtsLimits tiny;
    tiny.max_exact_states = 2;
    CHECK_THROWS_AS(build_port_lts(e.tmpl, 3, tiny), LtsLimitError);
}
