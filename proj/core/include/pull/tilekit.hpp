#pragma once

#include <string>
#include <vector>

#include "pull/gadget.hpp"

namespace pull {

// Assembly surface for building larger tiles and whole boards out of
// catalog templates and corridors.
class TileCanvas {
public:
    TileCanvas(int height, int width) : grid_(height, width, Cell::Fixed) {}

    int height() const { return grid_.height(); }
    int width() const { return grid_.width(); }
    const Grid& grid() const { return grid_; }
    const std::vector<Box>& boxes() const { return boxes_; }

    void set_floor(Pos p);
    void add_box(Pos p, HandleSet handles);

    // Copies a template's floors and boxes with its (0,0) at `at`.
    // Returns the placement offset for port lookups.
    void blit(const GadgetTemplate& t, Pos at);

    // Carves a straight run of floor cells from a to b (same row or column),
    // endpoints included.
    void carve(Pos a, Pos b);
    // Carves straight runs between consecutive waypoints.
    void carve_path(const std::vector<Pos>& waypoints);

    bool is_floor(Pos p) const { return grid_.is_floor(p); }

    GadgetTemplate to_template(const std::string& name, Variant v, std::vector<Port> ports,
                               std::vector<Orientation> orientations,
                               const std::string& contract_name) const;

    Board to_board(Variant v, Pos player, Pos goal) const;

private:
    Grid grid_;
    std::vector<Box> boxes_;
};

// Port cell of a placed template, in canvas coordinates.
Pos placed_port(const GadgetTemplate& t, Pos at, const std::string& port);

}  // namespace pull
