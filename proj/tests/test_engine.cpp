#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pull/engine.hpp"

using namespace pull;

namespace {

std::string lines(std::initializer_list<std::string> rows) {
    std::string out;
    for (const auto& r : rows) out += r + "\n";
    return out;
}

Board corridor(const std::string& interior, Variant v = Variant::PullOne) {
    // Ports a detached goal pocket when the interior lacks one, so the
    // board always validates.
    bool hasGoal = interior.find('G') != std::string::npos;
    std::string walls(interior.size() + 2, '#');
    std::string rows = "pull-board v1\nvariant " + std::string(variant_name(v)) + "\n";
    int height = hasGoal ? 3 : 4;
    rows += "size " + std::to_string(height) + " " + std::to_string(interior.size() + 2) + "\n";
    rows += walls + "\n#" + interior + "#\n" + walls + "\n";
    if (!hasGoal) {
        std::string goalRow = walls;
        goalRow[1] = 'G';
        rows += goalRow + "\n";
    }
    return parse_board(rows);
}

}  // namespace

TEST_CASE("player_region in an open room") {
    Board b = parse_board(lines({
        "pull-board v1", "variant PULL", "size 5 5",
        "#####",
        "#...#",
        "#.P.#",
        "#..G#",
        "#####",
    }));
    auto region = player_region(b, b.boxes, b.player_start);
    CHECK(region.size() == 9);
}

TEST_CASE("player_region cut by wall") {
    Board b = parse_board(lines({
        "pull-board v1", "variant PULL", "size 5 5",
        "#####",
        "#P.#.",
        "#..#.",
        "#..#G",
        "#####",
    }));
    auto region = player_region(b, b.boxes, b.player_start);
    CHECK(region.size() == 6);
}

TEST_CASE("player_region cut by boxes") {
    Board b = parse_board(lines({
        "pull-board v1", "variant PULL", "size 5 5",
        "#####",
        "#PB.#",
        "#.B.#",
        "#.BG#",
        "#####",
    }));
    auto region = player_region(b, b.boxes, b.player_start);
    CHECK(region.size() == 3);  // left column only
}

TEST_CASE("region is a fixed point of its members") {
    Board b = parse_board(lines({
        "pull-board v1", "variant PULL", "size 5 6",
        "######",
        "#P...#",
        "#.B..#",
        "#...G#",
        "######",
    }));
    auto region = player_region(b, b.boxes, b.player_start);
    for (Pos p : region) {
        auto again = player_region(b, b.boxes, p);
        CHECK(again == region);
    }
}

TEST_CASE("blocked pull: player destination inside wall") {
    // #P<# : pulling L needs the player to step into the wall.
    Board b = corridor("P<");
    State s = initial_state(b);
    CHECK(legal_moves(b, s).empty());
}

TEST_CASE("simple pull moves box onto player's old cell") {
    // #.P<# -> #<P.#
    Board b = corridor(".P<");
    State s = initial_state(b);
    auto moves = legal_moves(b, s);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0] == Move{{1, 3}, Dir::L});
    State after = apply_move(b, s, moves[0]);
    REQUIRE(after.boxes.size() == 1);
    CHECK(after.boxes[0].pos == Pos{1, 2});  // box where the player stood
    CHECK(after.region_key == Pos{1, 1});    // player walked to the left end
    CHECK(legal_moves(b, after).empty());
}

TEST_CASE("apply_move preserves handles and box count") {
    Board b = corridor("..PB.", Variant::Pull);
    State s = initial_state(b);
    for (Move m : legal_moves(b, s)) {
        State after = apply_move(b, s, m);
        REQUIRE(after.boxes.size() == s.boxes.size());
        CHECK(after.boxes[0].handles == s.boxes[0].handles);
        int moved = 0;
        for (const Box& bx : after.boxes) {
            bool found = false;
            for (const Box& ox : s.boxes) found |= ox.pos == bx.pos;
            if (!found) ++moved;
        }
        CHECK(moved == 1);
    }
}

TEST_CASE("normalization is idempotent") {
    Board b = corridor("..P<.");
    State s = initial_state(b);
    auto moves = legal_moves(b, s);
    REQUIRE(!moves.empty());
    State after = apply_move(b, s, moves[0]);
    State again = make_state(b, after.boxes, after.region_key);
    CHECK(after == again);
}

TEST_CASE("illegal apply throws") {
    Board b = corridor("P.<");
    State s = initial_state(b);
    CHECK_THROWS_AS(apply_move(b, s, Move{{1, 1}, Dir::L}), std::invalid_argument);  // no box
    CHECK_THROWS_AS(apply_move(b, s, Move{{1, 3}, Dir::R}), std::invalid_argument);  // no handle
}

TEST_CASE("replay: empty witness reaches goal when start region contains it") {
    Board b = corridor("P.G", Variant::Pull);
    ReplayResult r = replay(b, {});
    CHECK(r.ok);
    CHECK(r.goal_reached);
}

TEST_CASE("replay reports failing index") {
    Board b = corridor("..P<G");
    std::vector<Move> witness{{{1, 4}, Dir::L}, {{1, 3}, Dir::L}, {{1, 2}, Dir::L}};
    ReplayResult r = replay(b, witness);
    CHECK(!r.ok);
    CHECK(r.failed_index == 2);  // third pull would push the player into the wall
}

TEST_CASE("witness round-trip") {
    std::vector<Move> moves{{{1, 3}, Dir::L}, {{2, 5}, Dir::D}, {{0, 0}, Dir::U}};
    std::string text = render_witness(moves);
    CHECK(parse_witness(text) == moves);
    CHECK(parse_witness("; comment\n" + text) == moves);
}
