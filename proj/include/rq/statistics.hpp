#pragma once

#include "rq/colorful.hpp"
#include "rq/rigid.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rq {

class StatisticsError : public std::runtime_error {
public:
    enum class Kind { NotTangential, DictionaryViolation };
    StatisticsError(Kind k, int element, const std::string& what) : std::runtime_error(what), kind(k), element(element) {}
    Kind kind;
    int element;
};

struct TurningNumber {
    int vertex;
    int value;
};

// Non-root convex corners counterclockwise from the root corner.
std::vector<TurningNumber> turning_numbers(const RigidQuad& r);

enum class Tangency { None, Left, Right };

struct BoundarySide {
    std::vector<int> darts;  // boundary darts, from the end nearer to the root
    int near = -1;
    int far = -1;
    bool horizontal = false;
    Tangency tangency = Tangency::None;
};

struct CornerClass {
    int vertex;
    Tangency tangency = Tangency::None;
    int degree = 0;  // length of the tangential side ending at the corner
};

struct SideClassification {
    std::vector<BoundarySide> sides;
    std::vector<CornerClass> corners;  // every non-root convex corner
};

SideClassification classify_sides(const RigidQuad& r);

struct Extension {
    std::vector<int> darts;  // the side, then the parallel ray if the far end is concave
    int length = 0;
};

Extension side_extension(const RigidQuad& r, const BoundarySide& side);

enum class LineDirection { Increasing, Decreasing };

struct LevelLine {
    std::vector<int> edges;  // one dart per crossed edge, in crossing order
    int low = 0;             // the crossed edges have labels (low, low+1)
    LineDirection direction = LineDirection::Increasing;
    int length = 0;
    int nesting_depth = 0;
};

// Requires a sphere. The root side is that of the origin of the root.
std::vector<LevelLine> level_lines(const ColorfulQuad& q);

enum class Extremum { Neither, Min, Max };

struct VertexExtremum {
    int vertex;
    Extremum kind;
    int degree;
};

std::vector<VertexExtremum> local_extrema(const ColorfulQuad& q);

bool is_fighting_fish(const RigidQuad& r);

bool is_even_edge(const ColorfulQuad& q, int d);

struct DictionaryRow {
    std::string name;
    std::string rigid;
    std::string colorful;
    bool holds = false;
};

// Rows (i)-(viii) of the dictionary, then turning numbers vs labels and the
// level-line forest vs the side-extension forest.
std::vector<DictionaryRow> dictionary_report(const RigidQuad& r);
// Throws StatisticsError(DictionaryViolation) naming the first failing row.
void check_dictionary(const RigidQuad& r);

}  // namespace rq
