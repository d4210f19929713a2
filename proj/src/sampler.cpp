#include "rq/sampler.hpp"

#include "rq/bijection.hpp"
#include "rq/exploration.hpp"

#include <algorithm>

namespace rq {

Rng stream_rng(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

Integer uniform_below(const Integer& n, Rng& rng)
{
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t chunks = (bits + 63) / 64;
    for (;;) {
        Integer x = 0;
        for (std::size_t i = 0; i < chunks; ++i) {
            x <<= 64;
            x += Integer(static_cast<unsigned long>(rng()));
        }
        x >>= static_cast<mp_bitcnt_t>(chunks * 64 - bits);
        if (x < n) return x;
    }
}

RigidSampler::RigidSampler(int max_size) : max_size_(max_size), table_(catalytic_counts(max_size, max_size)) {}

Integer RigidSampler::count(int p, int j) const
{
    if (p < 0 || j < 1) return 0;
    if (p > max_size_ || j > max_size_)
        throw SamplerError(SamplerError::Kind::BoundsTooSmall, "BoundsTooSmall: size " + std::to_string(p) + "," +
                                                                   std::to_string(j) + " beyond the count table");
    return table_.at(p, j);
}

// Completions of two open sides with total weight j; with a target, also
// returns in *split the weight of the first side where the running sum passes it.
Integer RigidSampler::pair_count(int first, int second, int j, int* split, const Integer* target) const
{
    Integer sum = 0;
    for (int j1 = 1; j1 < j; ++j1) {
        Integer a = count(first, j1);
        if (a == 0) continue;
        Integer b = count(second, j - j1);
        if (b == 0) continue;
        sum += a * b;
        if (target && *target < sum) {
            *split = j1;
            return sum;
        }
    }
    return sum;
}

StepDistribution RigidSampler::distribution(int p, int j) const
{
    StepDistribution d;
    d.base = p;
    d.weight = j;
    d.total = 0;
    auto add = [&](StepClass c, const Integer& n) {
        if (n == 0) return;
        d.steps.push_back(c);
        d.counts.push_back(n);
        d.total += n;
    };
    for (int left = 0; left < p; ++left)
        add({StepKind::G, left, p - 1 - left}, pair_count(p - 1 - left, left, j, nullptr, nullptr));
    for (StepKind k : {StepKind::R, StepKind::L})
        for (int len = 0; p + len < j; ++len)
            for (int up = 0; up <= len; ++up) {
                int down = len - up;
                Integer n = k == StepKind::R ? pair_count(up, p + down, j, nullptr, nullptr)
                                             : pair_count(p + down, up, j, nullptr, nullptr);
                add({k, up, down}, binomial(len, up) * n);
            }
    return d;
}

void RigidSampler::sample_from(const StepClass& c, int s, int j, Rng& rng, std::vector<Step>& out, Integer x) const
{
    int first = 0, second = 0;
    Step st;
    if (c.kind == StepKind::G) {
        st = make_G(c.a, c.b);
        first = c.b;
        second = c.a;
    } else {
        std::string word(c.a, 'u');
        word.append(c.b, 'd');
        std::shuffle(word.begin(), word.end(), rng);
        st = c.kind == StepKind::R ? make_R(word) : make_L(word);
        first = c.kind == StepKind::R ? c.a : s + c.b;
        second = c.kind == StepKind::R ? s + c.b : c.a;
        x = x / binomial(c.a + c.b, c.a);
    }
    int j1 = 0;
    pair_count(first, second, j, &j1, &x);
    out.push_back(st);
    sample_side(first, j1, rng, out);
    sample_side(second, j - j1, rng, out);
}

void RigidSampler::sample_side(int s, int j, Rng& rng, std::vector<Step>& out) const
{
    if (s == 0) return;
    StepDistribution d = distribution(s, j);
    Integer x = uniform_below(d.total, rng);
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        if (x < d.counts[i]) {
            sample_from(d.steps[i], s, j, rng, out, x);
            return;
        }
        x -= d.counts[i];
    }
}

Trace RigidSampler::sample_trace(int p, int j, Rng& rng) const
{
    if (p < 1 || count(p, j) == 0)
        throw SamplerError(SamplerError::Kind::EmptyClass,
                           "EmptyClass: no traces with base " + std::to_string(p) + " and weight " + std::to_string(j));
    Trace t;
    t.base = p;
    sample_side(p, j, rng, t.steps);
    return t;
}

RigidQuad RigidSampler::sample(int p, int j, Rng& rng) const
{
    return assemble_rigid(sample_trace(p, j, rng));
}

// n non-root convex corners <-> base-1 traces with n-1 steps starting with L.
Trace RigidSampler::sample_rooted_trace(int n, Rng& rng) const
{
    if (n < 3) throw SamplerError(SamplerError::Kind::EmptyClass, "EmptyClass: rigid quadrangulations need n >= 3");
    const int j = n;
    StepDistribution d = distribution(1, j);
    Integer total = 0;
    for (std::size_t i = 0; i < d.steps.size(); ++i)
        if (d.steps[i].kind == StepKind::L) total += d.counts[i];
    Integer x = uniform_below(total, rng);
    Trace t;
    t.base = 1;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        if (d.steps[i].kind != StepKind::L) continue;
        if (x < d.counts[i]) {
            sample_from(d.steps[i], 1, j, rng, t.steps, x);
            return t;
        }
        x -= d.counts[i];
    }
    throw SamplerError(SamplerError::Kind::EmptyClass, "EmptyClass: no L-first traces");
}

RigidQuad RigidSampler::sample_rooted(int n, Rng& rng) const
{
    return unexpand(assemble_rigid(sample_rooted_trace(n, rng)));
}

RigidQuad sample_rigid(int p, int j, std::uint64_t seed)
{
    Rng rng = stream_rng(seed, 0);
    return RigidSampler(p + j).sample(p, j, rng);
}

RigidQuad sample_rigid_rooted(int n, std::uint64_t seed)
{
    Rng rng = stream_rng(seed, 0);
    return RigidSampler(n + 1).sample_rooted(n, rng);
}

}  // namespace rq
