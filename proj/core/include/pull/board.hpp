#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pull/geom.hpp"

namespace pull {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

enum class Variant : uint8_t {
    Pull,     // every box has all four handles
    PullOpp,  // each box has exactly {L,R} or {U,D}
    PullOne,  // every box has exactly {L}
};

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

// Set of directions in which a box may be pulled (direction of box motion).
class HandleSet {
public:
    constexpr HandleSet() = default;
    static constexpr HandleSet of(std::initializer_list<Dir> dirs) {
        HandleSet h;
        for (Dir d : dirs) h.bits_ |= mask(d);
        return h;
    }
    static constexpr HandleSet all() { return of({Dir::L, Dir::R, Dir::U, Dir::D}); }

    constexpr bool contains(Dir d) const { return bits_ & mask(d); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr uint8_t raw() const { return bits_; }
    static constexpr HandleSet from_raw(uint8_t bits) {
        HandleSet h;
        h.bits_ = bits & 0xF;
        return h;
    }

    HandleSet transformed(Orientation o) const;
    bool legal_for(Variant v) const;

    // Board character for a box with these handles, if representable.
    std::optional<char> box_char() const;
    static std::optional<HandleSet> from_box_char(char c);

    auto operator<=>(const HandleSet&) const = default;

private:
    static constexpr uint8_t mask(Dir d) { return static_cast<uint8_t>(1u << static_cast<uint8_t>(d)); }
    uint8_t bits_ = 0;
};

struct Box {
    Pos pos;
    HandleSet handles;

    auto operator<=>(const Box&) const = default;
};

enum class Cell : uint8_t { Floor = 0, Fixed = 1 };

// Static geometry: floor/fixed cells. Out-of-range positions count as fixed.
class Grid {
public:
    Grid() = default;
    Grid(int height, int width, Cell fill = Cell::Fixed)
        : height_(height), width_(width), cells_(static_cast<size_t>(height) * width, fill) {}

    int height() const { return height_; }
    int width() const { return width_; }
    bool in_bounds(Pos p) const {
        return p.row >= 0 && p.row < height_ && p.col >= 0 && p.col < width_;
    }
    Cell at(Pos p) const {
        return in_bounds(p) ? cells_[index(p)] : Cell::Fixed;
    }
    void set(Pos p, Cell c) { cells_[index(p)] = c; }
    bool is_floor(Pos p) const { return at(p) == Cell::Floor; }
    size_t index(Pos p) const { return static_cast<size_t>(p.row) * width_ + p.col; }

    auto operator<=>(const Grid&) const = default;

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<Cell> cells_;
};

struct Board {
    Grid grid;
    std::vector<Box> boxes;  // sorted by position
    Pos player_start;
    Pos goal;
    Variant variant = Variant::Pull;

    bool operator==(const Board&) const = default;

    const Box* box_at(Pos p) const;
    void sort_boxes();
    // Throws ParseError describing the first violated invariant, if any.
    void validate() const;
};

// Board text format:
//   pull-board v1
//   variant <PULL|PULL_OPP|PULL_ONE>
//   size <height> <width>
//   <height> rows of cell characters
// Cell characters: '#' fixed, '.' floor, 'P' player, 'G' goal,
// boxes 'B'={L,R,U,D}, 'H'={L,R}, 'V'={U,D}, '<'={L}, '>'={R}, '^'={U}, ','={D}.
// Lines starting with ';' are comments.
Board parse_board(const std::string& text);
std::string render_board(const Board& board);

}  // namespace pull
