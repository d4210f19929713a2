#include "rq/planar_map.hpp"

#include <deque>

namespace rq {

std::vector<int> PlanarMap::prev() const
{
    std::vector<int> p(next.size());
    for (int d = 0; d < darts(); ++d) p[next[d]] = d;
    return p;
}

std::vector<int> PlanarMap::face_next() const
{
    auto p = prev();
    std::vector<int> f(next.size());
    for (int d = 0; d < darts(); ++d) f[d] = p[twin[d]];
    return f;
}

void PlanarMap::check() const
{
    int n = darts();
    if (n == 0 || n % 2) throw MapError("map must have a positive even number of darts");
    if (static_cast<int>(next.size()) != n) throw MapError("twin and next differ in length");
    if (root < 0 || root >= n) throw MapError("root dart out of range");
    std::vector<int> seen(n, 0);
    for (int d = 0; d < n; ++d) {
        int t = twin[d];
        if (t < 0 || t >= n || t == d || twin[t] != d)
            throw MapError("twin is not a fixed-point-free involution at dart " + std::to_string(d));
        int x = next[d];
        if (x < 0 || x >= n || seen[x]++)
            throw MapError("next is not a permutation at dart " + std::to_string(d));
    }
    std::vector<char> reached(n, 0);
    std::deque<int> queue{root};
    reached[root] = 1;
    int count = 1;
    while (!queue.empty()) {
        int d = queue.front();
        queue.pop_front();
        for (int e : {twin[d], next[d]})
            if (!reached[e]) {
                reached[e] = 1;
                ++count;
                queue.push_back(e);
            }
    }
    if (count != n) throw MapError("map is not connected");
    MapIndex idx = index_map(*this);
    if (idx.vertices() - edges() + idx.faces() != 2) throw MapError("Euler relation fails: map is not planar");
}

MapIndex index_map(const PlanarMap& m)
{
    int n = m.darts();
    MapIndex idx;
    idx.vertex.assign(n, -1);
    idx.face.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        if (idx.vertex[d] >= 0) continue;
        int id = idx.vertices();
        idx.vertex_darts.emplace_back();
        for (int e = d; idx.vertex[e] < 0; e = m.next[e]) {
            idx.vertex[e] = id;
            idx.vertex_darts.back().push_back(e);
        }
    }
    auto fn = m.face_next();
    for (int d = 0; d < n; ++d) {
        if (idx.face[d] >= 0) continue;
        int id = idx.faces();
        idx.face_darts.emplace_back();
        for (int e = d; idx.face[e] < 0; e = fn[e]) {
            idx.face[e] = id;
            idx.face_darts.back().push_back(e);
        }
    }
    return idx;
}

std::vector<int> canonical_order(const PlanarMap& m)
{
    int n = m.darts();
    std::vector<int> order(n, -1);
    std::deque<int> queue{m.root};
    order[m.root] = 0;
    int count = 1;
    while (!queue.empty()) {
        int d = queue.front();
        queue.pop_front();
        for (int e : {m.twin[d], m.next[d]})
            if (order[e] < 0) {
                order[e] = count++;
                queue.push_back(e);
            }
    }
    return order;
}

PlanarMap relabel_darts(const PlanarMap& m, const std::vector<int>& perm)
{
    PlanarMap r;
    int n = m.darts();
    r.twin.assign(n, 0);
    r.next.assign(n, 0);
    for (int d = 0; d < n; ++d) {
        r.twin[perm[d]] = perm[m.twin[d]];
        r.next[perm[d]] = perm[m.next[d]];
    }
    r.root = perm[m.root];
    return r;
}

std::vector<int> next_from_faces(const std::vector<int>& twin, const std::vector<int>& face_next)
{
    std::vector<int> next(twin.size());
    for (std::size_t x = 0; x < twin.size(); ++x) next[face_next[twin[x]]] = static_cast<int>(x);
    return next;
}

}  // namespace rq
