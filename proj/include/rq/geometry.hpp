#pragma once

#include "rq/rigid.hpp"
#include "rq/sampler.hpp"
#include "rq/series.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace rq {

class GeometryError : public std::runtime_error {
public:
    enum class Kind { NonPositiveWidth, InconsistentPlacement };
    GeometryError(Kind k, int element, const std::string& what) : std::runtime_error(what), kind(k), element(element) {}
    Kind kind;
    int element;
};

// Row and column of every cell.
struct Strips {
    std::vector<int> row, column;
    int rows = 0;
    int columns = 0;
};

Strips strips(const RigidQuad& r);

template <class T>
struct WidthAssignment {
    enum class Mode { Unit, Simplex, Given };
    Mode mode = Mode::Unit;
    std::vector<T> row, column;  // row widths are heights, column widths are horizontal extents

    T half_perimeter() const;
};

WidthAssignment<double> unit_widths(const RigidQuad& r);
// Uniform point of the simplex {sum = total} of dimension rows + columns - 1.
WidthAssignment<double> simplex_widths(const RigidQuad& r, double total, Rng& rng);
template <class T>
WidthAssignment<T> given_widths(const RigidQuad& r, std::vector<T> row, std::vector<T> column);

enum class Traversal { Breadth, Depth };

template <class T>
struct Immersion {
    std::vector<std::array<T, 2>> vertex;  // planar position of every vertex of r
    std::vector<std::array<T, 4>> cell;    // xmin, ymin, xmax, ymax
    std::array<T, 4> box;                  // bounding box, same layout
};

// Root corner at the origin, root cell in the quadrant x <= 0, y >= 0. Throws
// InconsistentPlacement if a vertex would get two positions.
template <class T>
Immersion<T> immerse(const RigidQuad& r, const WidthAssignment<T>& w, Traversal order = Traversal::Breadth);

// Sum of boundary edge lengths of the immersion.
template <class T>
T boundary_length(const RigidQuad& r, const Immersion<T>& imm);

struct VolumeCheck {
    int n = 0;
    int degree = 0;        // of V_n(L)
    Rational coefficient;  // sum over combinatorial types of each type's volume factor
    Integer types;         // number of rigid quadrangulations of size n
    bool dimensions_ok = false;
};

// Each type with k = rows + columns widths contributes (2n-5)! L^(k-1) / (k-1)!.
VolumeCheck volume_check(int n);

struct SvgStyle {
    double scale = 24.0;
    double opacity = 0.3;
    std::string fill = "#2a5caa";
    std::string stroke = "#1b2a49";
    double stroke_width = 0.6;
    bool mark_root = true;
};

std::string render_svg(const Immersion<double>& imm, const SvgStyle& style = {});

}  // namespace rq
