#include "pull/gadget.hpp"

#include <algorithm>
#include <sstream>

#include "pull/lts.hpp"

namespace pull {

const Port* GadgetTemplate::port(const std::string& pname) const {
    for (const Port& p : ports)
        if (p.name == pname) return &p;
    return nullptr;
}

int GadgetTemplate::port_index(const std::string& pname) const {
    for (size_t i = 0; i < ports.size(); ++i)
        if (ports[i].name == pname) return static_cast<int>(i);
    return -1;
}

Dir GadgetTemplate::port_outward(const Port& p) const {
    if (p.horizontal) {
        if (p.cell.col == 0) return Dir::L;
        if (p.cell.col == grid.width() - 1) return Dir::R;
        throw ParseError("horizontal port '" + p.name + "' not on a vertical edge");
    }
    if (p.cell.row == 0) return Dir::U;
    if (p.cell.row == grid.height() - 1) return Dir::D;
    throw ParseError("vertical port '" + p.name + "' not on a horizontal edge");
}

void GadgetTemplate::validate() const {
    if (grid.height() <= 0 || grid.width() <= 0) throw ParseError("empty tile");
    for (size_t i = 0; i < boxes.size(); ++i) {
        if (!grid.is_floor(boxes[i].pos)) throw ParseError("box on non-floor tile cell");
        if (i > 0 && boxes[i - 1].pos == boxes[i].pos) throw ParseError("two boxes share a cell");
        if (!boxes[i].handles.legal_for(variant))
            throw ParseError("box handle set illegal for variant " +
                             std::string(variant_name(variant)));
    }
    if (ports.empty()) throw ParseError("gadget has no ports");
    for (size_t i = 0; i < ports.size(); ++i) {
        const Port& p = ports[i];
        if (!grid.is_floor(p.cell)) throw ParseError("port '" + p.name + "' not on a floor cell");
        port_outward(p);  // throws if off-edge
        for (size_t j = 0; j < i; ++j) {
            if (ports[j].name == p.name) throw ParseError("duplicate port name '" + p.name + "'");
        }
        for (const Box& b : boxes)
            if (b.pos == p.cell) throw ParseError("box on port cell '" + p.name + "'");
    }
    for (const TraversalScript& s : scripts) {
        if (s.word.empty()) throw ParseError("script with empty word");
        if (s.word.size() != s.legs.size()) throw ParseError("script legs do not match word");
        for (const auto& [in, out] : s.word) {
            if (!port(in)) throw ParseError("script references unknown port '" + in + "'");
            if (!port(out)) throw ParseError("script references unknown port '" + out + "'");
        }
    }
}

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == ';') continue;
        out.push_back(line);
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::pair<std::string, std::string> parse_pair(const std::string& text) {
    size_t arrow = text.find("->");
    if (arrow == std::string::npos) throw ParseError("expected '<in>-><out>' in '" + text + "'");
    std::string in = trim(text.substr(0, arrow));
    std::string out = trim(text.substr(arrow + 2));
    if (in.empty() || out.empty()) throw ParseError("bad port pair '" + text + "'");
    return {in, out};
}

Move parse_move_triple(const std::string& text) {
    std::istringstream ls(text);
    int r = 0, c = 0;
    std::string ds;
    ls >> r >> c >> ds;
    if (ds.size() != 1) throw ParseError("bad script move '" + text + "'");
    auto d = dir_from_char(ds[0]);
    if (!d) throw ParseError("bad script direction '" + text + "'");
    return {{r, c}, *d};
}

}  // namespace

GadgetTemplate load_gadget(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    size_t at = 0;
    auto next = [&]() -> const std::string& {
        if (at >= lines.size()) throw ParseError("unexpected end of gadget text");
        return lines[at++];
    };

    if (next() != "pull-gadget v1") throw ParseError("missing 'pull-gadget v1' header");

    GadgetTemplate t;
    {
        std::istringstream ls(next());
        std::string kw;
        ls >> kw >> t.name;
        if (kw != "name" || t.name.empty()) throw ParseError("expected 'name' line");
    }
    {
        std::istringstream ls(next());
        std::string kw, vname;
        ls >> kw >> vname;
        if (kw != "variant") throw ParseError("expected 'variant' line");
        auto v = variant_from_name(vname);
        if (!v) throw ParseError("unknown variant: " + vname);
        t.variant = *v;
    }
    int height = 0, width = 0;
    {
        std::istringstream ls(next());
        std::string kw;
        ls >> kw >> height >> width;
        if (kw != "size" || height <= 0 || width <= 0) throw ParseError("bad 'size' line");
    }
    t.grid = Grid(height, width, Cell::Fixed);
    for (int r = 0; r < height; ++r) {
        const std::string& row = next();
        if (static_cast<int>(row.size()) != width) throw ParseError("tile row length mismatch");
        for (int c = 0; c < width; ++c) {
            char ch = row[c];
            Pos p{r, c};
            if (ch == '#') continue;
            t.grid.set(p, Cell::Floor);
            if (ch == '.') continue;
            if (ch == 'P' || ch == 'G') throw ParseError("tile must not contain P or G");
            auto handles = HandleSet::from_box_char(ch);
            if (!handles) throw ParseError(std::string("unknown tile character '") + ch + "'");
            t.boxes.push_back({p, *handles});
        }
    }
    std::sort(t.boxes.begin(), t.boxes.end());

    for (; at < lines.size();) {
        const std::string& line = lines[at];
        if (line.empty()) {
            ++at;
            continue;
        }
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "port") {
            Port p;
            std::string axis;
            ls >> p.name >> p.cell.row >> p.cell.col >> axis;
            if (p.name.empty() || (axis != "h" && axis != "v"))
                throw ParseError("bad 'port' line: " + line);
            p.horizontal = axis == "h";
            t.ports.push_back(p);
            ++at;
        } else if (kw == "orient") {
            std::string name;
            while (ls >> name) {
                auto o = orientation_from_name(name);
                if (!o) throw ParseError("unknown orientation '" + name + "'");
                t.allowed_orientations.push_back(*o);
            }
            if (t.allowed_orientations.empty()) throw ParseError("empty 'orient' line");
            ++at;
        } else if (kw == "contract") {
            ls >> t.contract_name;
            if (t.contract_name.empty()) throw ParseError("bad 'contract' line");
            ++at;
        } else if (kw == "script") {
            std::string rest = line.substr(line.find("script") + 6);
            size_t colon = rest.find(':');
            if (colon == std::string::npos) throw ParseError("script line missing ':'");
            TraversalScript s;
            for (const std::string& pairText : split(rest.substr(0, colon), ',')) {
                s.word.push_back(parse_pair(trim(pairText)));
            }
            std::string movesText = trim(rest.substr(colon + 1));
            std::vector<std::string> legTexts =
                movesText.empty() ? std::vector<std::string>(s.word.size(), std::string())
                                  : split(movesText, ';');
            if (legTexts.size() != s.word.size())
                throw ParseError("script has " + std::to_string(legTexts.size()) +
                                 " legs for a word of length " + std::to_string(s.word.size()));
            for (const std::string& legText : legTexts) {
                std::vector<Move> leg;
                std::string lt = trim(legText);
                if (!lt.empty()) {
                    for (const std::string& mv : split(lt, ',')) leg.push_back(parse_move_triple(trim(mv)));
                }
                s.legs.push_back(std::move(leg));
            }
            t.scripts.push_back(std::move(s));
            ++at;
        } else {
            throw ParseError("unexpected gadget line: " + line);
        }
    }
    if (t.allowed_orientations.empty()) t.allowed_orientations.push_back(Orientation::Identity);
    t.validate();
    if (!t.scripts.empty()) {
        ScriptReport sr = script_replay(t, nullptr, 3);
        if (!sr.pass) {
            std::ostringstream os;
            os << "script " << (sr.issues[0].script_index + 1) << " replay failed: "
               << sr.issues[0].message;
            throw ParseError(os.str());
        }
    }
    return t;
}

std::string render_gadget(const GadgetTemplate& t) {
    std::ostringstream os;
    os << "pull-gadget v1\n";
    os << "name " << t.name << "\n";
    os << "variant " << variant_name(t.variant) << "\n";
    os << "size " << t.grid.height() << " " << t.grid.width() << "\n";
    for (int r = 0; r < t.grid.height(); ++r) {
        for (int c = 0; c < t.grid.width(); ++c) {
            Pos p{r, c};
            char ch = t.grid.is_floor(p) ? '.' : '#';
            for (const Box& b : t.boxes) {
                if (b.pos == p) {
                    auto bc = b.handles.box_char();
                    ch = bc ? *bc : '?';
                }
            }
            os << ch;
        }
        os << "\n";
    }
    for (const Port& p : t.ports)
        os << "port " << p.name << " " << p.cell.row << " " << p.cell.col << " "
           << (p.horizontal ? "h" : "v") << "\n";
    os << "orient";
    for (Orientation o : t.allowed_orientations) os << " " << orientation_name(o);
    os << "\n";
    if (!t.contract_name.empty()) os << "contract " << t.contract_name << "\n";
    for (const TraversalScript& s : t.scripts) {
        os << "script ";
        for (size_t i = 0; i < s.word.size(); ++i) {
            if (i) os << ", ";
            os << s.word[i].first << "->" << s.word[i].second;
        }
        os << " :";
        bool anyMoves = false;
        for (size_t i = 0; i < s.legs.size(); ++i) {
            if (i) os << " ;";
            for (size_t j = 0; j < s.legs[i].size(); ++j) {
                os << (j ? ", " : " ") << s.legs[i][j].box_from.row << " "
                   << s.legs[i][j].box_from.col << " " << dir_char(s.legs[i][j].dir);
                anyMoves = true;
            }
        }
        (void)anyMoves;
        os << "\n";
    }
    return os.str();
}

GadgetTemplate transform(const GadgetTemplate& t, Orientation o) {
    if (std::find(t.allowed_orientations.begin(), t.allowed_orientations.end(), o) ==
        t.allowed_orientations.end())
        throw ParseError("orientation " + std::string(orientation_name(o)) +
                         " not allowed for gadget " + t.name);
    int h = t.grid.height(), w = t.grid.width();
    GadgetTemplate out;
    out.name = t.name;
    out.variant = t.variant;
    out.contract_name = t.contract_name;
    out.allowed_orientations = t.allowed_orientations;
    int oh = 0, ow = 0;
    transform_dims(o, h, w, oh, ow);
    out.grid = Grid(oh, ow, Cell::Fixed);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            if (t.grid.is_floor({r, c})) out.grid.set(transform_pos({r, c}, o, h, w), Cell::Floor);
    for (const Box& b : t.boxes) {
        HandleSet remapped = b.handles.transformed(o);
        if (!remapped.legal_for(t.variant))
            throw ParseError("orientation " + std::string(orientation_name(o)) +
                             " remaps handles illegally for variant " +
                             std::string(variant_name(t.variant)));
        out.boxes.push_back({transform_pos(b.pos, o, h, w), remapped});
    }
    std::sort(out.boxes.begin(), out.boxes.end());
    for (const Port& p : t.ports) {
        Port q;
        q.name = p.name;
        q.cell = transform_pos(p.cell, o, h, w);
        Dir axisDir = p.horizontal ? Dir::L : Dir::U;
        q.horizontal = horizontal(transform_dir(axisDir, o));
        out.ports.push_back(q);
    }
    for (const TraversalScript& s : t.scripts) {
        TraversalScript ns;
        ns.word = s.word;
        for (const auto& leg : s.legs) {
            std::vector<Move> nl;
            for (const Move& m : leg)
                nl.push_back({transform_pos(m.box_from, o, h, w), transform_dir(m.dir, o)});
            ns.legs.push_back(std::move(nl));
        }
        out.scripts.push_back(std::move(ns));
    }
    out.validate();
    return out;
}

Arena build_arena(const GadgetTemplate& t, int stub_len) {
    if (stub_len < 3) throw ParseError("stub_len must be at least 3");
    t.validate();
    int margin = stub_len + 1;
    Arena a;
    a.tile_offset = {margin, margin};
    a.grid = Grid(t.grid.height() + 2 * margin, t.grid.width() + 2 * margin, Cell::Fixed);
    for (int r = 0; r < t.grid.height(); ++r)
        for (int c = 0; c < t.grid.width(); ++c)
            if (t.grid.is_floor({r, c}))
                a.grid.set({r + margin, c + margin}, Cell::Floor);
    for (const Box& b : t.boxes)
        a.boxes.push_back({{b.pos.row + margin, b.pos.col + margin}, b.handles});
    std::sort(a.boxes.begin(), a.boxes.end());
    for (const Port& p : t.ports) {
        Dir outward = t.port_outward(p);
        Pos cell{p.cell.row + margin, p.cell.col + margin};
        a.port_cells.push_back(cell);
        Pos q = cell;
        for (int i = 0; i < stub_len; ++i) {
            q += outward;
            a.grid.set(q, Cell::Floor);
        }
        a.stub_outer.push_back(q);
    }
    return a;
}

Board Arena::as_board(Pos player, Pos goal, Variant v) const {
    Board b;
    b.grid = grid;
    b.boxes = boxes;
    b.player_start = player;
    b.goal = goal;
    b.variant = v;
    return b;
}

}  // namespace pull
