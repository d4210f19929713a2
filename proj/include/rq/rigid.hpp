#pragma once

#include "rq/planar_map.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rq {

// Directions of darts in the developing frame; a cell's side s is the dart
// pointing in direction s with the cell on its left (0 bottom, 1 right, 2 top, 3 left).
enum Dir { East = 0, North = 1, West = 2, South = 3 };

enum class Corner { Inner, Convex, Straight, Concave };

class RigidError : public std::runtime_error {
public:
    enum class Kind { NonQuadFace, NonSimpleBoundary, BadVertexPattern, BadRay, RootNotConvex, Malformed };
    RigidError(Kind k, int element, const std::string& what) : std::runtime_error(what), kind(k), element(element) {}
    Kind kind;
    int element;
};

const char* to_string(RigidError::Kind k);

// Unit squares glued along sides. Dart 4c+s is side s of cell c; nb[4c+s] is
// the dart across that side (always side s^2 of the neighbour) or -1 on the boundary.
struct CellComplex {
    std::vector<int> nb;
    int root_cell = 0;  // the root corner is the bottom-right corner of this cell

    int cells() const { return static_cast<int>(nb.size()) / 4; }
    int add_cell();
    void glue(int a, int b);
};

// A validated rigid quadrangulation. Darts 0..4*cells-1 are the inner darts of
// the cell complex; boundary darts follow, in clockwise order starting from the root.
class RigidQuad {
public:
    explicit RigidQuad(CellComplex cc);

    const CellComplex& complex() const { return cc_; }
    int cells() const { return cc_.cells(); }
    const PlanarMap& map() const { return map_; }
    int inner_darts() const { return 4 * cells(); }
    bool is_inner(int d) const { return d < inner_darts(); }
    int dir(int d) const { return dir_[d]; }
    // +1 if the dart points along its ray, -1 against, 0 on boundary edges.
    int orientation(int d) const { return orient_[d]; }
    const std::vector<int>& orientations() const { return orient_; }
    int origin(int d) const { return vertex_[d]; }
    int head(int d) const { return vertex_[map_.twin[d]]; }
    int vertices() const { return static_cast<int>(vclass_.size()); }
    Corner corner(int v) const { return vclass_[v]; }
    int root_vertex() const { return root_vertex_; }
    // Boundary darts (outer face on their left), clockwise from the root dart.
    const std::vector<int>& boundary() const { return boundary_; }
    // Boundary vertices counterclockwise from the root corner (root first).
    std::vector<int> boundary_vertices_ccw() const;
    int count(Corner c) const;
    // n(r): number of non-root convex corners.
    int size() const { return count(Corner::Convex) - 1; }
    // Rays: each is the list of forward darts from the concave start to the straight end.
    const std::vector<std::vector<int>>& rays() const { return rays_; }
    int rows() const;
    int columns() const;

private:
    CellComplex cc_;
    PlanarMap map_;
    std::vector<int> dir_, orient_, vertex_;
    std::vector<Corner> vclass_;
    std::vector<int> boundary_;
    std::vector<std::vector<int>> rays_;
    int root_vertex_ = 0;
};

// Validates a planar map with optional per-dart orientation (+1/-1 on inner
// darts, empty to compute). The result uses its own dart numbering.
RigidQuad validate_rigid(const PlanarMap& m, const std::vector<int>& orientation = {});

RigidQuad mirror(const RigidQuad& r);

// Side lengths from the root corner clockwise to the next convex corner.
std::vector<int> base_signature(const RigidQuad& r);
std::vector<int> walk_of_signature(const std::vector<int>& sig);

// Root-preserving canonical code; equal iff the two quadrangulations are isomorphic.
std::vector<int> canonical_code(const RigidQuad& r);
bool same_rigid(const RigidQuad& a, const RigidQuad& b);

RigidQuad unit_square();

}  // namespace rq
