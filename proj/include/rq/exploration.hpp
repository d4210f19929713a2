#pragma once

#include "rq/colorful.hpp"
#include "rq/rigid.hpp"
#include "rq/trace.hpp"

#include <vector>

namespace rq {

// Row-by-row exploration with the horizontal boundary darts revealed at each
// step, ordered away from the explored part.
struct RigidExploration {
    Trace trace;
    std::vector<int> base;                   // base darts, from the root corner
    std::vector<std::vector<int>> revealed;  // one entry per step
};

// First step of the exploration. Throws RigidError(Malformed) unless r has a 1-fold base.
Step detect_step_rigid(const RigidQuad& r);
// Throws RigidError(Malformed) unless r has a 1-fold base.
RigidExploration explore_rigid_detailed(const RigidQuad& r);
Trace explore_rigid(const RigidQuad& r);

// Throws TraceError for incomplete or inconsistent traces.
RigidQuad assemble_rigid(const Trace& t);

// Peeling exploration of a colorful disk with boundary labels 1,0,1,0,...
// read from the root. Throws ColorfulError(NotInClass) for other boundaries.
Trace peel(const ColorfulQuad& q);
Step detect_step_colorful(const ColorfulQuad& q);
ColorfulQuad assemble_colorful(const Trace& t);

}  // namespace rq
