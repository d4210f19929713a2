#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rq {

enum class StepKind { G, R, L };

// G: left = groups left of the notch, right = groups right of it.
// R/L: word over 'u'/'d', the orientations of the overhang rays read left to right.
struct Step {
    StepKind kind = StepKind::G;
    int left = 0;
    int right = 0;
    std::string word;

    int ups() const;
    int downs() const;
    bool operator==(const Step&) const = default;
    auto operator<=>(const Step&) const = default;
};

struct Trace {
    int base = 1;
    std::vector<Step> steps;

    // 1 + number of steps: the exponent of t contributed by this trace.
    int weight() const { return static_cast<int>(steps.size()) + 1; }
    bool operator==(const Trace&) const = default;
    auto operator<=>(const Trace&) const = default;
};

class TraceError : public std::runtime_error {
public:
    enum class Kind { Parse, IncompleteTrace, FrontierMismatch };
    TraceError(Kind k, int step, const std::string& what) : std::runtime_error(what), kind(k), step(step) {}
    Kind kind;
    int step;
};

// Applies a step to the first entry of the frontier (sizes of open sides).
// Throws TraceError::FrontierMismatch when the step does not fit.
void apply_step(std::vector<int>& frontier, const Step& step, int index = 0);

// Throws unless the trace is complete and frontier-consistent.
void check_trace(const Trace& t);
bool is_complete(const Trace& t);

Step make_G(int left, int right);
Step make_R(const std::string& word);
Step make_L(const std::string& word);

std::string to_string(const Step& s);
std::string to_string(const Trace& t);
Trace parse_trace(const std::string& text);

}  // namespace rq
