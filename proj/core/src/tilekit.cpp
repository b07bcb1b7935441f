#include "pull/tilekit.hpp"

#include <algorithm>
#include <stdexcept>

namespace pull {

void TileCanvas::set_floor(Pos p) {
    if (!grid_.in_bounds(p)) throw std::out_of_range("canvas floor out of bounds");
    grid_.set(p, Cell::Floor);
}

void TileCanvas::add_box(Pos p, HandleSet handles) {
    set_floor(p);
    for (const Box& b : boxes_)
        if (b.pos == p) throw std::invalid_argument("two boxes on one canvas cell");
    boxes_.push_back({p, handles});
}

void TileCanvas::blit(const GadgetTemplate& t, Pos at) {
    for (int r = 0; r < t.grid.height(); ++r)
        for (int c = 0; c < t.grid.width(); ++c)
            if (t.grid.is_floor({r, c})) set_floor({at.row + r, at.col + c});
    for (const Box& b : t.boxes) add_box({at.row + b.pos.row, at.col + b.pos.col}, b.handles);
}

void TileCanvas::carve(Pos a, Pos b) {
    if (a.row != b.row && a.col != b.col)
        throw std::invalid_argument("carve endpoints must share a row or column");
    int dr = (b.row > a.row) - (b.row < a.row);
    int dc = (b.col > a.col) - (b.col < a.col);
    Pos p = a;
    set_floor(p);
    while (p != b) {
        p = {p.row + dr, p.col + dc};
        set_floor(p);
    }
}

void TileCanvas::carve_path(const std::vector<Pos>& waypoints) {
    for (size_t i = 1; i < waypoints.size(); ++i) carve(waypoints[i - 1], waypoints[i]);
}

GadgetTemplate TileCanvas::to_template(const std::string& name, Variant v,
                                       std::vector<Port> ports,
                                       std::vector<Orientation> orientations,
                                       const std::string& contract_name) const {
    GadgetTemplate t;
    t.name = name;
    t.variant = v;
    t.grid = grid_;
    t.boxes = boxes_;
    std::sort(t.boxes.begin(), t.boxes.end());
    t.ports = std::move(ports);
    t.allowed_orientations = std::move(orientations);
    t.contract_name = contract_name;
    t.validate();
    return t;
}

Board TileCanvas::to_board(Variant v, Pos player, Pos goal) const {
    Board b;
    b.grid = grid_;
    b.boxes = boxes_;
    std::sort(b.boxes.begin(), b.boxes.end());
    b.player_start = player;
    b.goal = goal;
    b.variant = v;
    b.validate();
    return b;
}

Pos placed_port(const GadgetTemplate& t, Pos at, const std::string& port) {
    const Port* p = t.port(port);
    if (!p) throw std::invalid_argument("template has no port " + port);
    return {at.row + p->cell.row, at.col + p->cell.col};
}

}  // namespace pull
