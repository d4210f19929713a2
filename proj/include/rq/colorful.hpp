#pragma once

#include "rq/planar_map.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rq {

enum class ColorfulKind { Sphere, Disk };

class ColorfulError : public std::runtime_error {
public:
    enum class Kind { BadEdgeLabels, BadFace, BadRootLabels, WrongRootFace, NotInClass, LabelClash, Malformed };
    ColorfulError(Kind k, int element, const std::string& what) : std::runtime_error(what), kind(k), element(element) {}
    Kind kind;
    int element;
};

const char* to_string(ColorfulError::Kind k);

// A validated Z-labeled quadrangulation. Vertex ids follow index_map. For a
// disk the boundary face is the face on the left of the root dart.
class ColorfulQuad {
public:
    ColorfulQuad(PlanarMap m, std::vector<int> labels, ColorfulKind kind);
    // Labels given per dart (label of the origin); throws LabelClash if they disagree around a vertex.
    static ColorfulQuad from_dart_labels(PlanarMap m, const std::vector<int>& dart_labels, ColorfulKind kind);

    const PlanarMap& map() const { return map_; }
    const MapIndex& index() const { return idx_; }
    ColorfulKind kind() const { return kind_; }
    int darts() const { return map_.darts(); }
    int vertices() const { return idx_.vertices(); }
    int faces() const { return idx_.faces(); }
    int edges() const { return map_.edges(); }
    int root() const { return map_.root; }
    int twin(int d) const { return map_.twin[d]; }
    int face_next(int d) const { return fn_[d]; }
    int origin(int d) const { return idx_.vertex[d]; }
    int head(int d) const { return idx_.vertex[map_.twin[d]]; }
    int label(int v) const { return labels_[v]; }
    int dart_label(int d) const { return labels_[idx_.vertex[d]]; }
    const std::vector<int>& labels() const { return labels_; }
    int degree(int v) const { return static_cast<int>(idx_.vertex_darts[v].size()); }

    // -1 for spheres.
    int boundary_face() const;
    // Disk: labels clockwise around the boundary starting at the head of the root.
    std::vector<int> boundary_labels() const;
    // Faces that are not the boundary face.
    std::vector<int> inner_faces() const;
    // Sphere with face (0,1,2,1) on the right of the root.
    bool in_class() const;

private:
    PlanarMap map_;
    MapIndex idx_;
    std::vector<int> fn_;
    std::vector<int> labels_;
    ColorfulKind kind_;
};

ColorfulQuad validate_colorful(const PlanarMap& m, const std::vector<int>& labels, ColorfulKind kind);

// Labels j -> 2-j with the root moved to keep the (0,1,2,1) face on its right.
ColorfulQuad relabel(const ColorfulQuad& q);

// Root-preserving canonical code including labels.
std::vector<int> canonical_code(const ColorfulQuad& q);
bool same_colorful(const ColorfulQuad& a, const ColorfulQuad& b);

// The 3-vertex sphere: a path 0 - 1 - 2.
ColorfulQuad three_vertex_sphere();

}  // namespace rq
