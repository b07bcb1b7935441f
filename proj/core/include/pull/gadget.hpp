#pragma once

#include <string>
#include <vector>

#include "pull/board.hpp"
#include "pull/engine.hpp"

namespace pull {

// Named opening on the tile boundary. A horizontal port sits on the left or
// right edge; a vertical port on the top or bottom edge.
struct Port {
    std::string name;
    Pos cell;
    bool horizontal = true;

    bool operator==(const Port&) const = default;
};

// One scripted demonstration: a sequence of traversals replayed in order
// from the initial tile configuration. legs[i] holds the pulls of word[i].
struct TraversalScript {
    std::vector<std::pair<std::string, std::string>> word;  // (in, out) port names
    std::vector<std::vector<Move>> legs;
};

struct GadgetTemplate {
    std::string name;
    Variant variant = Variant::Pull;
    Grid grid;
    std::vector<Box> boxes;  // sorted
    std::vector<Port> ports;
    std::vector<Orientation> allowed_orientations;
    std::string contract_name;
    std::vector<TraversalScript> scripts;

    const Port* port(const std::string& name) const;
    int port_index(const std::string& name) const;  // -1 if absent
    // Outward direction of the port's stub corridor.
    Dir port_outward(const Port& p) const;
    void validate() const;  // geometry and variant legality; throws ParseError
};

// Gadget text format:
//   pull-gadget v1
//   name <id>
//   variant <...>
//   size <h> <w>
//   <tile rows: board characters, no P/G>
//   port <name> <row> <col> <h|v>
//   orient <name> [<name> ...]
//   contract <contract-id>
//   script <in>-><out>[,<in>-><out>]* : <r c D[, r c D]*>[; <leg2>]...
// ';' at line start marks a comment.
GadgetTemplate load_gadget(const std::string& text);
std::string render_gadget(const GadgetTemplate& t);

// Geometric transform with handle remap. Throws ParseError if the
// orientation is not allowed or remapped handles violate the variant.
GadgetTemplate transform(const GadgetTemplate& t, Orientation o);

// Tile embedded in a walled arena with a dead-end stub corridor of
// stub_len floor cells outside every port.
struct Arena {
    Grid grid;
    std::vector<Box> boxes;          // sorted, arena coordinates
    Pos tile_offset;                 // tile (0,0) in arena coordinates
    std::vector<Pos> stub_outer;     // per port: outermost stub cell
    std::vector<Pos> port_cells;     // per port: port cell, arena coordinates

    Board as_board(Pos player, Pos goal, Variant v) const;
};

Arena build_arena(const GadgetTemplate& t, int stub_len);

}  // namespace pull
