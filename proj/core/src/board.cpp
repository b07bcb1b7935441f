#include "pull/board.hpp"

#include <algorithm>
#include <sstream>

namespace pull {

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::Pull: return "PULL";
        case Variant::PullOpp: return "PULL_OPP";
        case Variant::PullOne: return "PULL_ONE";
    }
    return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
    if (name == "PULL") return Variant::Pull;
    if (name == "PULL_OPP") return Variant::PullOpp;
    if (name == "PULL_ONE") return Variant::PullOne;
    return std::nullopt;
}

HandleSet HandleSet::transformed(Orientation o) const {
    HandleSet out;
    for (Dir d : kAllDirs) {
        if (contains(d)) out.bits_ |= mask(transform_dir(d, o));
    }
    return out;
}

bool HandleSet::legal_for(Variant v) const {
    switch (v) {
        case Variant::Pull:
            return *this == HandleSet::all();
        case Variant::PullOpp:
            return *this == HandleSet::of({Dir::L, Dir::R}) ||
                   *this == HandleSet::of({Dir::U, Dir::D});
        case Variant::PullOne:
            return *this == HandleSet::of({Dir::L});
    }
    return false;
}

std::optional<char> HandleSet::box_char() const {
    if (*this == HandleSet::all()) return 'B';
    if (*this == HandleSet::of({Dir::L, Dir::R})) return 'H';
    if (*this == HandleSet::of({Dir::U, Dir::D})) return 'V';
    if (*this == HandleSet::of({Dir::L})) return '<';
    if (*this == HandleSet::of({Dir::R})) return '>';
    if (*this == HandleSet::of({Dir::U})) return '^';
    if (*this == HandleSet::of({Dir::D})) return ',';
    return std::nullopt;
}

std::optional<HandleSet> HandleSet::from_box_char(char c) {
    switch (c) {
        case 'B': return HandleSet::all();
        case 'H': return HandleSet::of({Dir::L, Dir::R});
        case 'V': return HandleSet::of({Dir::U, Dir::D});
        case '<': return HandleSet::of({Dir::L});
        case '>': return HandleSet::of({Dir::R});
        case '^': return HandleSet::of({Dir::U});
        case ',': return HandleSet::of({Dir::D});
        default: return std::nullopt;
    }
}

const Box* Board::box_at(Pos p) const {
    auto it = std::lower_bound(boxes.begin(), boxes.end(), p,
                               [](const Box& b, Pos q) { return b.pos < q; });
    if (it != boxes.end() && it->pos == p) return &*it;
    return nullptr;
}

void Board::sort_boxes() {
    std::sort(boxes.begin(), boxes.end());
}

void Board::validate() const {
    if (grid.height() <= 0 || grid.width() <= 0) throw ParseError("empty grid");
    for (size_t i = 0; i < boxes.size(); ++i) {
        const Box& b = boxes[i];
        if (!grid.is_floor(b.pos)) throw ParseError("box on non-floor cell");
        if (i > 0 && boxes[i - 1].pos == b.pos) throw ParseError("two boxes share a cell");
        if (b.handles.empty()) throw ParseError("box with empty handle set");
        if (!b.handles.legal_for(variant)) {
            std::ostringstream os;
            os << "box handle set illegal for variant " << variant_name(variant);
            throw ParseError(os.str());
        }
    }
    if (!grid.is_floor(player_start)) throw ParseError("player start not on floor");
    if (!grid.is_floor(goal)) throw ParseError("goal not on floor");
    if (box_at(player_start)) throw ParseError("player start occupied by a box");
    if (box_at(goal)) throw ParseError("goal occupied by a box");
}

namespace {

// Strips comment lines and trailing '\r'; returns content lines.
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == ';') continue;
        out.push_back(line);
    }
    return out;
}

}  // namespace

Board parse_board(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    size_t at = 0;
    auto next = [&]() -> const std::string& {
        if (at >= lines.size()) throw ParseError("unexpected end of board text");
        return lines[at++];
    };

    if (next() != "pull-board v1") throw ParseError("missing 'pull-board v1' header");

    std::istringstream vl(next());
    std::string kw, vname;
    vl >> kw >> vname;
    if (kw != "variant") throw ParseError("expected 'variant' line");
    auto variant = variant_from_name(vname);
    if (!variant) throw ParseError("unknown variant: " + vname);

    std::istringstream sl(next());
    int height = 0, width = 0;
    sl >> kw >> height >> width;
    if (kw != "size" || height <= 0 || width <= 0) throw ParseError("bad 'size' line");

    Board board;
    board.variant = *variant;
    board.grid = Grid(height, width, Cell::Fixed);

    bool have_player = false, have_goal = false;
    for (int r = 0; r < height; ++r) {
        const std::string& row = next();
        if (static_cast<int>(row.size()) != width) {
            std::ostringstream os;
            os << "grid row " << r << " has length " << row.size() << ", expected " << width;
            throw ParseError(os.str());
        }
        for (int c = 0; c < width; ++c) {
            Pos p{r, c};
            char ch = row[c];
            if (ch == '#') {
                continue;
            }
            board.grid.set(p, Cell::Floor);
            if (ch == '.') continue;
            if (ch == 'P') {
                if (have_player) throw ParseError("duplicate player");
                board.player_start = p;
                have_player = true;
                continue;
            }
            if (ch == 'G') {
                if (have_goal) throw ParseError("duplicate goal");
                board.goal = p;
                have_goal = true;
                continue;
            }
            auto handles = HandleSet::from_box_char(ch);
            if (!handles) {
                std::ostringstream os;
                os << "unknown cell character '" << ch << "' at row " << r << " col " << c;
                throw ParseError(os.str());
            }
            board.boxes.push_back({p, *handles});
        }
    }
    if (!have_player) throw ParseError("missing player");
    if (!have_goal) throw ParseError("missing goal");
    board.sort_boxes();
    board.validate();
    return board;
}

std::string render_board(const Board& board) {
    std::ostringstream os;
    os << "pull-board v1\n";
    os << "variant " << variant_name(board.variant) << "\n";
    os << "size " << board.grid.height() << " " << board.grid.width() << "\n";
    for (int r = 0; r < board.grid.height(); ++r) {
        for (int c = 0; c < board.grid.width(); ++c) {
            Pos p{r, c};
            char ch = board.grid.is_floor(p) ? '.' : '#';
            if (board.grid.is_floor(p)) {
                if (const Box* b = board.box_at(p)) {
                    auto bc = b->handles.box_char();
                    ch = bc ? *bc : '?';
                } else if (p == board.player_start) {
                    ch = 'P';
                } else if (p == board.goal) {
                    ch = 'G';
                }
            }
            os << ch;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace pull
