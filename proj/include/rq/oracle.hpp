#pragma once

#include "rq/colorful.hpp"
#include "rq/trace.hpp"

#include <functional>
#include <vector>

namespace rq {

// Calls fn on every complete trace with the given base and exactly `steps` steps.
void for_each_trace(int base, int steps, const std::function<void(const Trace&)>& fn);

// All complete traces with base p and at most max_steps steps, grouped by step count.
std::vector<Trace> brute_rigid(int p, int max_steps);

// Number of complete traces with base p and exactly `steps` steps.
long long count_traces(int base, int steps);

// Rooted planar quadrangulations of the sphere with the given number of faces,
// one representative per root-preserving isomorphism class (labels unset).
std::vector<PlanarMap> brute_quadrangulations(int faces);

// Sphere colorful quadrangulations with n vertices and (0,1,2,1) right of the
// root, found by gluing squares and labeling; independent of any exploration.
std::vector<ColorfulQuad> brute_colorful(int n);

}  // namespace rq
