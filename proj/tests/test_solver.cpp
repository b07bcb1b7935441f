#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pull/solver.hpp"

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

Board random_small_board(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(4, 6);
    std::uniform_int_distribution<int> variantPick(0, 2);
    Variant variant = static_cast<Variant>(variantPick(rng));
    for (;;) {
        int h = dim(rng), w = dim(rng);
        Board b;
        b.variant = variant;
        b.grid = Grid(h, w, Cell::Fixed);
        std::vector<Pos> floors;
        std::uniform_int_distribution<int> cellPick(0, 4);
        for (int r = 1; r < h - 1; ++r)
            for (int c = 1; c < w - 1; ++c)
                if (cellPick(rng) != 0) {
                    b.grid.set({r, c}, Cell::Floor);
                    floors.push_back({r, c});
                }
        if (floors.size() < 5) continue;
        std::shuffle(floors.begin(), floors.end(), rng);
        b.player_start = floors[0];
        b.goal = floors[1];
        std::uniform_int_distribution<int> nboxes(1, 3);
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

TEST_CASE("goal already reachable -> empty witness") {
    Board b = corridor("P..G", Variant::Pull);
    SolveOutcome out = solve(b);
    CHECK(out.verdict == Verdict::Solvable);
    CHECK(out.witness.empty());
}

TEST_CASE("goal behind immovable box -> unsolvable") {
    Board b = corridor("P<G");
    SolveOutcome out = solve(b);
    CHECK(out.verdict == Verdict::Unsolvable);
    SolveOutcome naive = naive_solve(b);
    CHECK(naive.verdict == Verdict::Unsolvable);
}

TEST_CASE("single pull opens a doorway") {
    // The box blocks the doorway to the goal pocket; pulling it aside and
    // walking around it opens the way.
    Board b = parse_board(lines({
        "pull-board v1", "variant PULL", "size 4 6",
        "######",
        "#P...#",
        "#.B..#",
        "##G###",
    }));
    SolveOutcome out = solve(b);
    REQUIRE(out.verdict == Verdict::Solvable);
    CHECK(out.witness.size() == 1);
    CHECK(out.witness[0] == Move{{2, 2}, Dir::R});
    ReplayResult r = replay(b, out.witness);
    CHECK(r.ok);
    CHECK(r.goal_reached);
}

TEST_CASE("count_reachable_states") {
    SUBCASE("no boxes") {
        Board b = corridor("P..G", Variant::Pull);
        CHECK(count_reachable_states(b) == 1);
    }
    SUBCASE("corridor with one pull") {
        Board b = corridor(".P<");
        CHECK(count_reachable_states(b) == 2);
    }
    SUBCASE("deterministic across runs") {
        std::mt19937 rng(11);
        Board b = random_small_board(rng);
        auto a = count_reachable_states(b);
        auto c = count_reachable_states(b);
        CHECK(a == c);
    }
}

TEST_CASE("limits produce UNKNOWN") {
    std::mt19937 rng(5);
    Board b = random_small_board(rng);
    SolveLimits tiny;
    tiny.max_states = 0;
    SolveOutcome out = solve(b, tiny);
    CHECK(out.verdict == Verdict::Unknown);
}

TEST_CASE("naive guard rejects big boards") {
    Board b;
    b.grid = Grid(9, 9, Cell::Floor);
    b.player_start = {0, 0};
    b.goal = {8, 8};
    b.variant = Variant::Pull;
    CHECK_THROWS_AS(naive_solve(b), std::invalid_argument);
}

TEST_CASE("solver agrees with naive oracle on 500 random boards") {
    std::mt19937 rng(424242);
    int solvable = 0, unsolvable = 0;
    for (int i = 0; i < 500; ++i) {
        Board b = random_small_board(rng);
        SolveOutcome fast = solve(b);
        SolveOutcome slow = naive_solve(b);
        REQUIRE(fast.verdict == slow.verdict);
        if (fast.verdict == Verdict::Solvable) {
            ++solvable;
            CHECK(fast.witness.size() == slow.witness.size());  // minimal pull count agrees
            ReplayResult r = replay(b, fast.witness);
            CHECK(r.ok);
            CHECK(r.goal_reached);
        } else {
            ++unsolvable;
        }
        CHECK(slow.states_explored >= fast.states_explored);
        if (b.variant == Variant::PullOne) CHECK(fast.potential_violations == 0);
    }
    // The corpus must exercise both verdicts to be meaningful.
    CHECK(solvable > 50);
    CHECK(unsolvable > 50);
}

TEST_CASE("witness mutation fails replay or goal check") {
    // Scan for boards whose solution needs several pulls, then delete moves.
    std::mt19937 rng(777);
    int exercised = 0;
    while (exercised < 10) {
        Board b = random_small_board(rng);
        SolveOutcome out = solve(b);
        if (out.verdict != Verdict::Solvable || out.witness.size() < 2) continue;
        ++exercised;
        ReplayResult full = replay(b, out.witness);
        REQUIRE(full.ok);
        REQUIRE(full.goal_reached);
        for (size_t drop = 0; drop < out.witness.size(); ++drop) {
            std::vector<Move> mutated = out.witness;
            mutated.erase(mutated.begin() + static_cast<long>(drop));
            ReplayResult r = replay(b, mutated);
            // A minimal witness with a pull deleted cannot still reach the goal.
            CHECK((!r.ok || !r.goal_reached));
        }
    }
}

TEST_CASE("unsolvable verdicts are closed under larger limits") {
    std::mt19937 rng(99);
    int checked = 0;
    for (int i = 0; i < 60 && checked < 20; ++i) {
        Board b = random_small_board(rng);
        SolveLimits small;
        small.max_states = 100'000;
        SolveOutcome out = solve(b, small);
        if (out.verdict != Verdict::Unsolvable) continue;
        ++checked;
        SolveLimits big;
        big.max_states = 1'000'000;
        CHECK(solve(b, big).verdict == Verdict::Unsolvable);
    }
    CHECK(checked > 0);
}

TEST_CASE("pull-one searches never revisit states") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 100; ++i) {
        Board b = random_small_board(rng);
        if (b.variant != Variant::PullOne) continue;
        SolveOutcome out = solve(b);
        CHECK(out.potential_violations == 0);
    }
}
