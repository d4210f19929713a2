#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rq {

class MapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rooted planar map on darts 0..n-1. next is the counterclockwise rotation
// around the origin of a dart; the face on the left of d continues with
// face_next(d) = next^{-1}(twin(d)).
struct PlanarMap {
    std::vector<int> twin;
    std::vector<int> next;
    int root = 0;

    int darts() const { return static_cast<int>(twin.size()); }
    int edges() const { return darts() / 2; }
    std::vector<int> prev() const;
    std::vector<int> face_next() const;

    // Throws MapError unless twin is a fixed-point-free involution, next is a
    // permutation, the map is connected and Euler's relation holds.
    void check() const;
};

// Orbit decomposition of a map.
struct MapIndex {
    std::vector<int> vertex;  // dart -> origin vertex id
    std::vector<int> face;    // dart -> id of the face on its left
    std::vector<std::vector<int>> vertex_darts;  // ccw around the vertex, starting at the smallest dart
    std::vector<std::vector<int>> face_darts;    // along the face, starting at the smallest dart
    int vertices() const { return static_cast<int>(vertex_darts.size()); }
    int faces() const { return static_cast<int>(face_darts.size()); }
    int head(const PlanarMap& m, int d) const { return vertex[m.twin[d]]; }
};

MapIndex index_map(const PlanarMap& m);

// Canonical dart numbering: breadth-first from the root following twin then next.
// Returns old dart -> new dart.
std::vector<int> canonical_order(const PlanarMap& m);
PlanarMap relabel_darts(const PlanarMap& m, const std::vector<int>& perm);

// Builds next from face_next and twin (next(face_next(twin(x))) = x).
std::vector<int> next_from_faces(const std::vector<int>& twin, const std::vector<int>& face_next);

}  // namespace rq
