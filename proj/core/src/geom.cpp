#include "pull/geom.hpp"

namespace pull {

std::optional<Dir> dir_from_char(char c) {
    switch (c) {
        case 'L': return Dir::L;
        case 'R': return Dir::R;
        case 'U': return Dir::U;
        case 'D': return Dir::D;
        default: return std::nullopt;
    }
}

std::string_view orientation_name(Orientation o) {
    switch (o) {
        case Orientation::Identity: return "identity";
        case Orientation::Rot90: return "rot90";
        case Orientation::Rot180: return "rot180";
        case Orientation::Rot270: return "rot270";
        case Orientation::FlipH: return "flipH";
        case Orientation::FlipV: return "flipV";
        case Orientation::FlipMain: return "flipMain";
        case Orientation::FlipAnti: return "flipAnti";
    }
    return "?";
}

std::optional<Orientation> orientation_from_name(std::string_view name) {
    for (Orientation o : kAllOrientations) {
        if (orientation_name(o) == name) return o;
    }
    return std::nullopt;
}

Pos transform_pos(Pos p, Orientation o, int h, int w) {
    switch (o) {
        case Orientation::Identity: return p;
        case Orientation::Rot90: return {p.col, h - 1 - p.row};
        case Orientation::Rot180: return {h - 1 - p.row, w - 1 - p.col};
        case Orientation::Rot270: return {w - 1 - p.col, p.row};
        case Orientation::FlipH: return {p.row, w - 1 - p.col};
        case Orientation::FlipV: return {h - 1 - p.row, p.col};
        case Orientation::FlipMain: return {p.col, p.row};
        case Orientation::FlipAnti: return {w - 1 - p.col, h - 1 - p.row};
    }
    return p;
}

void transform_dims(Orientation o, int h, int w, int& oh, int& ow) {
    switch (o) {
        case Orientation::Identity:
        case Orientation::Rot180:
        case Orientation::FlipH:
        case Orientation::FlipV:
            oh = h;
            ow = w;
            return;
        default:
            oh = w;
            ow = h;
            return;
    }
}

Dir transform_dir(Dir d, Orientation o) {
    // Transform the unit vector and read the direction back.
    Pos dl = delta(d);
    Pos origin = transform_pos({1, 1}, o, 3, 3);
    Pos moved = transform_pos({1 + dl.row, 1 + dl.col}, o, 3, 3);
    int dr = moved.row - origin.row;
    int dc = moved.col - origin.col;
    if (dr == 0 && dc == -1) return Dir::L;
    if (dr == 0 && dc == 1) return Dir::R;
    if (dr == -1 && dc == 0) return Dir::U;
    return Dir::D;
}

}  // namespace pull
