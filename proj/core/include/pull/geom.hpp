#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pull {

// Grid position. Row 0 is the top row; L decreases the column.
struct Pos {
    int row = 0;
    int col = 0;

    auto operator<=>(const Pos&) const = default;
};

enum class Dir : uint8_t { L = 0, R = 1, U = 2, D = 3 };

inline constexpr std::array<Dir, 4> kAllDirs = {Dir::L, Dir::R, Dir::U, Dir::D};

constexpr Pos delta(Dir d) {
    switch (d) {
        case Dir::L: return {0, -1};
        case Dir::R: return {0, 1};
        case Dir::U: return {-1, 0};
        case Dir::D: return {1, 0};
    }
    return {0, 0};
}

constexpr Dir opposite(Dir d) {
    switch (d) {
        case Dir::L: return Dir::R;
        case Dir::R: return Dir::L;
        case Dir::U: return Dir::D;
        case Dir::D: return Dir::U;
    }
    return Dir::L;
}

constexpr bool horizontal(Dir d) { return d == Dir::L || d == Dir::R; }

inline Pos operator+(Pos p, Dir d) {
    Pos dl = delta(d);
    return {p.row + dl.row, p.col + dl.col};
}

inline Pos& operator+=(Pos& p, Dir d) {
    p = p + d;
    return p;
}

constexpr char dir_char(Dir d) {
    switch (d) {
        case Dir::L: return 'L';
        case Dir::R: return 'R';
        case Dir::U: return 'U';
        case Dir::D: return 'D';
    }
    return '?';
}

std::optional<Dir> dir_from_char(char c);

// The eight grid symmetries. Rot90 is clockwise: a box pulled L in the
// source tile is pulled U in the rotated tile.
enum class Orientation : uint8_t {
    Identity = 0,
    Rot90,
    Rot180,
    Rot270,
    FlipH,   // mirror columns
    FlipV,   // mirror rows
    FlipMain,  // transpose (FlipH then Rot90)
    FlipAnti,  // anti-transpose (FlipV then Rot90)
};

inline constexpr std::array<Orientation, 8> kAllOrientations = {
    Orientation::Identity, Orientation::Rot90,  Orientation::Rot180,
    Orientation::Rot270,   Orientation::FlipH,  Orientation::FlipV,
    Orientation::FlipMain, Orientation::FlipAnti,
};

std::string_view orientation_name(Orientation o);
std::optional<Orientation> orientation_from_name(std::string_view name);

// Maps a source-tile position into the transformed tile, for a source of
// the given dimensions.
Pos transform_pos(Pos p, Orientation o, int height, int width);

// Dimensions of the transformed tile.
void transform_dims(Orientation o, int height, int width, int& out_height, int& out_width);

// Direction of motion in the transformed tile corresponding to d in the
// source tile.
Dir transform_dir(Dir d, Orientation o);

}  // namespace pull
