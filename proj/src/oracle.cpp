#include "rq/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rq {

namespace {

void words(int len, std::string& w, const std::function<void(const std::string&)>& fn)
{
    if (static_cast<int>(w.size()) == len) {
        fn(w);
        return;
    }
    for (char c : {'d', 'u'}) {
        w.push_back(c);
        words(len, w, fn);
        w.pop_back();
    }
}

// A side of size s needs at least s further steps.
void extend(std::vector<int>& frontier, Trace& t, int left, const std::function<void(const Trace&)>& fn)
{
    if (frontier.empty()) {
        if (left == 0) fn(t);
        return;
    }
    int budget = left - std::accumulate(frontier.begin(), frontier.end(), 0);
    if (budget < 0) return;
    const int s = frontier.front();
    auto recurse = [&](const Step& st) {
        std::vector<int> saved = frontier;
        apply_step(frontier, st, static_cast<int>(t.steps.size()));
        t.steps.push_back(st);
        extend(frontier, t, left - 1, fn);
        t.steps.pop_back();
        frontier = std::move(saved);
    };
    for (int k = 0; k < s; ++k) recurse(make_G(k, s - 1 - k));
    // R/L with a word of length m add m to the total size and use one step
    std::string w;
    for (int m = 0; m + 1 <= budget; ++m)
        words(m, w, [&](const std::string& word) {
            recurse(make_R(word));
            recurse(make_L(word));
        });
}

}  // namespace

void for_each_trace(int base, int steps, const std::function<void(const Trace&)>& fn)
{
    Trace t;
    t.base = base;
    std::vector<int> frontier{base};
    extend(frontier, t, steps, fn);
}

std::vector<Trace> brute_rigid(int p, int max_steps)
{
    std::vector<Trace> out;
    for (int j = 1; j <= max_steps; ++j) for_each_trace(p, j, [&](const Trace& t) { out.push_back(t); });
    return out;
}

long long count_traces(int base, int steps)
{
    long long n = 0;
    for_each_trace(base, steps, [&](const Trace&) { ++n; });
    return n;
}

}  // namespace rq

namespace rq {

namespace {

void matchings(std::vector<int>& twin, const std::function<void()>& fn)
{
    auto it = std::find(twin.begin(), twin.end(), -1);
    if (it == twin.end()) {
        fn();
        return;
    }
    int a = static_cast<int>(it - twin.begin());
    for (int b = a + 1; b < static_cast<int>(twin.size()); ++b) {
        if (twin[b] != -1) continue;
        twin[a] = b;
        twin[b] = a;
        matchings(twin, fn);
        twin[a] = twin[b] = -1;
    }
}

bool is_sphere(const PlanarMap& m)
{
    try {
        m.check();
        return true;
    } catch (const MapError&) {
        return false;
    }
}

}  // namespace

std::vector<PlanarMap> brute_quadrangulations(int faces)
{
    const int n = 4 * faces;
    std::vector<int> fn(n);
    for (int d = 0; d < n; ++d) fn[d] = 4 * (d / 4) + (d + 1) % 4;
    std::set<std::vector<int>> seen;
    std::vector<PlanarMap> out;
    std::vector<int> twin(n, -1);
    matchings(twin, [&] {
        PlanarMap m;
        m.twin = twin;
        m.next = next_from_faces(twin, fn);
        if (!is_sphere(m)) return;
        for (int root = 0; root < n; ++root) {
            m.root = root;
            PlanarMap c = relabel_darts(m, canonical_order(m));
            std::vector<int> key = c.twin;
            key.insert(key.end(), c.next.begin(), c.next.end());
            if (seen.insert(key).second) out.push_back(c);
        }
    });
    return out;
}

std::vector<ColorfulQuad> brute_colorful(int n)
{
    std::vector<ColorfulQuad> out;
    if (n < 3) return out;
    for (const PlanarMap& m : brute_quadrangulations(n - 2)) {
        MapIndex idx = index_map(m);
        const int v = idx.vertices();
        std::vector<int> order{idx.vertex[m.root]}, parent(v, -1);
        std::vector<char> reached(v, 0);
        reached[order[0]] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int d : idx.vertex_darts[order[i]]) {
                int w = idx.head(m, d);
                if (!reached[w]) {
                    reached[w] = 1;
                    parent[w] = order[i];
                    order.push_back(w);
                }
            }
        // each non-root vertex differs from its BFS parent by +-1
        for (int mask = 0; mask < (1 << (v - 1)); ++mask) {
            std::vector<int> labels(v, 0);
            labels[order[0]] = 1;
            for (int i = 1; i < v; ++i) labels[order[i]] = labels[parent[order[i]]] + ((mask >> (i - 1)) & 1 ? 1 : -1);
            if (labels[idx.head(m, m.root)] != 0) continue;
            try {
                ColorfulQuad q(m, labels, ColorfulKind::Sphere);
                if (q.in_class()) out.push_back(std::move(q));
            } catch (const ColorfulError&) {
            }
        }
    }
    return out;
}

}  // namespace rq
