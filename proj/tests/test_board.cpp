#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pull/board.hpp"

using namespace pull;

namespace {

std::string lines(std::initializer_list<std::string> rows) {
    std::string out;
    for (const auto& r : rows) out += r + "\n";
    return out;
}

}  // namespace

TEST_CASE("parse minimal pull-one corridor") {
    // Interior P.<G framed by explicit walls.
    std::string text = lines({
        "pull-board v1",
        "variant PULL_ONE",
        "size 3 6",
        "######",
        "#P.<G#",
        "######",
    });
    Board b = parse_board(text);
    CHECK(b.variant == Variant::PullOne);
    CHECK(b.player_start == Pos{1, 1});
    CHECK(b.goal == Pos{1, 4});
    REQUIRE(b.boxes.size() == 1);
    CHECK(b.boxes[0].pos == Pos{1, 3});
    CHECK(b.boxes[0].handles == HandleSet::of({Dir::L}));
}

TEST_CASE("variant legality enforced at parse") {
    std::string text = lines({
        "pull-board v1",
        "variant PULL_OPP",
        "size 3 6",
        "######",
        "#P.<G#",
        "######",
    });
    CHECK_THROWS_AS(parse_board(text), ParseError);
}

TEST_CASE("H and V box characters") {
    std::string text = lines({
        "pull-board v1",
        "variant PULL_OPP",
        "size 4 6",
        "######",
        "#P.H.#",
        "#G.V.#",
        "######",
    });
    Board b = parse_board(text);
    REQUIRE(b.boxes.size() == 2);
    CHECK(b.boxes[0].handles == HandleSet::of({Dir::L, Dir::R}));
    CHECK(b.boxes[1].handles == HandleSet::of({Dir::U, Dir::D}));
    CHECK(render_board(b).find('H') != std::string::npos);
    CHECK(render_board(b).find('V') != std::string::npos);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_board("nonsense"), ParseError);
    // Missing goal.
    CHECK_THROWS_AS(parse_board(lines({"pull-board v1", "variant PULL", "size 3 4", "####",
                                       "#P.#", "####"})),
                    ParseError);
    // Duplicate player.
    CHECK_THROWS_AS(parse_board(lines({"pull-board v1", "variant PULL", "size 3 5", "#####",
                                       "#PPG#", "#####"})),
                    ParseError);
    // Non-rectangular grid.
    CHECK_THROWS_AS(parse_board(lines({"pull-board v1", "variant PULL", "size 3 5", "#####",
                                       "#P.G##", "#####"})),
                    ParseError);
    // Unknown cell character.
    CHECK_THROWS_AS(parse_board(lines({"pull-board v1", "variant PULL", "size 3 5", "#####",
                                       "#PxG#", "#####"})),
                    ParseError);
}

TEST_CASE("comment lines ignored") {
    std::string text = lines({
        "; a comment",
        "pull-board v1",
        "variant PULL",
        "; another",
        "size 3 5",
        "#####",
        "#P.G#",
        "#####",
    });
    Board b = parse_board(text);
    CHECK(b.player_start == Pos{1, 1});
}

namespace {

Board random_board(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(4, 7);
    std::uniform_int_distribution<int> variantPick(0, 2);
    Variant variant = static_cast<Variant>(variantPick(rng));
    for (;;) {
        int h = dim(rng), w = dim(rng);
        Board b;
        b.variant = variant;
        b.grid = Grid(h, w, Cell::Fixed);
        std::vector<Pos> floors;
        std::uniform_int_distribution<int> cellPick(0, 3);
        for (int r = 1; r < h - 1; ++r)
            for (int c = 1; c < w - 1; ++c)
                if (cellPick(rng) != 0) {
                    b.grid.set({r, c}, Cell::Floor);
                    floors.push_back({r, c});
                }
        if (floors.size() < 4) continue;
        std::shuffle(floors.begin(), floors.end(), rng);
        b.player_start = floors[0];
        b.goal = floors[1];
        std::uniform_int_distribution<int> nboxes(0, 2);
        int n = std::min<int>(nboxes(rng), static_cast<int>(floors.size()) - 2);
        for (int i = 0; i < n; ++i) {
            HandleSet hs;
            switch (variant) {
                case Variant::Pull: hs = HandleSet::all(); break;
                case Variant::PullOpp:
                    hs = (rng() & 1) ? HandleSet::of({Dir::L, Dir::R})
                                     : HandleSet::of({Dir::U, Dir::D});
                    break;
                case Variant::PullOne: hs = HandleSet::of({Dir::L}); break;
            }
            b.boxes.push_back({floors[2 + i], hs});
        }
        b.sort_boxes();
        return b;
    }
}

}  // namespace

TEST_CASE("parse/render round-trip on random boards") {
    std::mt19937 rng(20240901);
    for (int i = 0; i < 100; ++i) {
        Board b = random_board(rng);
        std::string text = render_board(b);
        Board back = parse_board(text);
        CHECK(back == b);
        CHECK(render_board(back) == text);
    }
}

TEST_CASE("render is deterministic") {
    std::mt19937 rng(7);
    Board b = random_board(rng);
    CHECK(render_board(b) == render_board(b));
}

TEST_CASE("handle transforms") {
    CHECK(HandleSet::of({Dir::L}).transformed(Orientation::Rot90) == HandleSet::of({Dir::U}));
    CHECK(HandleSet::of({Dir::U}).transformed(Orientation::Rot90) == HandleSet::of({Dir::R}));
    CHECK(HandleSet::of({Dir::R}).transformed(Orientation::Rot90) == HandleSet::of({Dir::D}));
    CHECK(HandleSet::of({Dir::D}).transformed(Orientation::Rot90) == HandleSet::of({Dir::L}));
    CHECK(HandleSet::of({Dir::L}).transformed(Orientation::FlipH) == HandleSet::of({Dir::R}));
    CHECK(HandleSet::of({Dir::U}).transformed(Orientation::FlipH) == HandleSet::of({Dir::U}));
    CHECK(HandleSet::of({Dir::L}).transformed(Orientation::FlipV) == HandleSet::of({Dir::L}));
    CHECK(HandleSet::of({Dir::U}).transformed(Orientation::FlipV) == HandleSet::of({Dir::D}));
    CHECK(HandleSet::of({Dir::L, Dir::R}).transformed(Orientation::Rot90) ==
          HandleSet::of({Dir::U, Dir::D}));
}
