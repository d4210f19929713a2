#pragma once

#include "rq/colorful.hpp"
#include "rq/rigid.hpp"

#include <vector>

namespace rq {

// Base-p rigid quadrangulation -> colorful disk with boundary 0,1,0,1,...
ColorfulQuad psi_p(const RigidQuad& r);
RigidQuad psi_p_inverse(const ColorfulQuad& q);

// Splits the root column and adds a cell below the root cell; the result has
// base 1 and starts its exploration with an L step. Cell ids of r are kept;
// source_cell, if given, receives the cell of r each new cell lies in (-1 for the root cell).
RigidQuad expand(const RigidQuad& r, std::vector<int>* source_cell = nullptr);
// Throws RigidError(Malformed) if r is not in the image of expand.
RigidQuad unexpand(const RigidQuad& r);

// Perimeter-2 disk with a (0,1,2,1) face at the root <-> sphere in the class.
ColorfulQuad zip(const ColorfulQuad& q);
ColorfulQuad unzip(const ColorfulQuad& q);

ColorfulQuad psi(const RigidQuad& r);
RigidQuad psi_inverse(const ColorfulQuad& q);

struct AscentResult {
    std::vector<int> crossed;    // darts in the face being left, in order
    std::vector<int> signature;  // run lengths of the crossed label pairs
    int terminal = -1;           // vertex around which the path turns fully
};

AscentResult ascent_path(const ColorfulQuad& q);

// Psi(r) with the ascent submap removed; boundary labels follow walk_of_signature.
ColorfulQuad psi_b(const RigidQuad& r);
// Glues the ascent submap back into the boundary face; throws NotInClass if
// the boundary labels are not the walk of a signature.
ColorfulQuad glue_ascent(const ColorfulQuad& u);
RigidQuad psi_b_inverse(const ColorfulQuad& u);

// Inverse of walk_of_signature; throws ColorfulError(NotInClass) on other sequences.
std::vector<int> signature_of_walk(const std::vector<int>& walk);

struct BCClass {
    enum class Type { General, B, C };
    Type type = Type::General;
    int p = 0;  // base length
    int q = 0;  // length of the vertical side at the root
};

BCClass classify_BC(const RigidQuad& r);

}  // namespace rq
