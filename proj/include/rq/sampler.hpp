#pragma once

#include "rq/rigid.hpp"
#include "rq/series.hpp"
#include "rq/trace.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rq {

// Default generator. Independent streams come from stream_rng(seed, index).
using Rng = std::mt19937_64;
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

// Uniform in [0, n), n > 0.
Integer uniform_below(const Integer& n, Rng& rng);

class SamplerError : public std::runtime_error {
public:
    enum class Kind { EmptyClass, BoundsTooSmall };
    SamplerError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

// A first step up to the order of the word: G(left, right), or R/L with ups and downs.
struct StepClass {
    StepKind kind = StepKind::G;
    int a = 0;  // G: left groups; R/L: ups
    int b = 0;  // G: right groups; R/L: downs
    bool operator==(const StepClass&) const = default;
};

struct StepDistribution {
    int base = 0;
    int weight = 0;
    std::vector<StepClass> steps;
    std::vector<Integer> counts;  // completions starting with each class, words included
    Integer total;
};

class RigidSampler {
public:
    // Supports base + weight <= max_size.
    explicit RigidSampler(int max_size);

    const CountTable& counts() const { return table_; }
    Integer count(int p, int j) const;
    // Entries with a positive count only.
    StepDistribution distribution(int p, int j) const;

    // Uniform among the traces with base p and j-1 steps.
    Trace sample_trace(int p, int j, Rng& rng) const;
    RigidQuad sample(int p, int j, Rng& rng) const;
    // Uniform among rigid quadrangulations with n non-root convex corners.
    Trace sample_rooted_trace(int n, Rng& rng) const;
    RigidQuad sample_rooted(int n, Rng& rng) const;

private:
    Integer pair_count(int first, int second, int j, int* split, const Integer* target) const;
    void sample_side(int s, int j, Rng& rng, std::vector<Step>& out) const;
    void sample_from(const StepClass& c, int s, int j, Rng& rng, std::vector<Step>& out, Integer x) const;

    int max_size_;
    CountTable table_;
};

RigidQuad sample_rigid(int p, int j, std::uint64_t seed);
RigidQuad sample_rigid_rooted(int n, std::uint64_t seed);

}  // namespace rq
