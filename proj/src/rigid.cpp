#include "rq/rigid.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

namespace rq {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

[[noreturn]] void fail(RigidError::Kind k, int element, const std::string& what)
{
    throw RigidError(k, element, std::string(to_string(k)) + "(" + std::to_string(element) + "): " + what);
}

}  // namespace

const char* to_string(RigidError::Kind k)
{
    switch (k) {
    case RigidError::Kind::NonQuadFace: return "NonQuadFace";
    case RigidError::Kind::NonSimpleBoundary: return "NonSimpleBoundary";
    case RigidError::Kind::BadVertexPattern: return "BadVertexPattern";
    case RigidError::Kind::BadRay: return "BadRay";
    case RigidError::Kind::RootNotConvex: return "RootNotConvex";
    case RigidError::Kind::Malformed: return "MalformedState";
    }
    return "RigidError";
}

int CellComplex::add_cell()
{
    nb.insert(nb.end(), 4, -1);
    return cells() - 1;
}

void CellComplex::glue(int a, int b)
{
    nb[a] = b;
    nb[b] = a;
}

RigidQuad::RigidQuad(CellComplex cc) : cc_(std::move(cc))
{
    const int n = cc_.cells();
    const int inner = 4 * n;
    if (n == 0) fail(RigidError::Kind::Malformed, 0, "no cells");
    if (cc_.root_cell < 0 || cc_.root_cell >= n) fail(RigidError::Kind::Malformed, cc_.root_cell, "bad root cell");
    for (int d = 0; d < inner; ++d) {
        int e = cc_.nb[d];
        if (e == -1) continue;
        if (e < 0 || e >= inner || cc_.nb[e] != d || e % 4 != (d % 4 + 2) % 4 || e / 4 == d / 4)
            fail(RigidError::Kind::Malformed, d, "inconsistent side gluing");
    }

    // vertices from corners: dart 4c+s runs from corner 4c+s to corner 4c+(s+1)%4
    auto corner_after = [](int d) { return 4 * (d / 4) + (d % 4 + 1) % 4; };
    UnionFind uf(inner);
    for (int d = 0; d < inner; ++d) {
        int e = cc_.nb[d];
        if (e < d) continue;
        uf.unite(d, corner_after(e));
        uf.unite(corner_after(d), e);
    }
    std::vector<int> vid(inner, -1);
    std::vector<std::vector<int>> corners;
    for (int k = 0; k < inner; ++k) {
        int r = uf.find(k);
        if (vid[r] < 0) {
            vid[r] = static_cast<int>(corners.size());
            corners.emplace_back();
        }
        corners[vid[r]].push_back(k);
    }
    const int nv = static_cast<int>(corners.size());
    for (int v = 0; v < nv; ++v) {
        std::array<int, 4> seen{};
        for (int k : corners[v])
            if (seen[k % 4]++) fail(RigidError::Kind::BadVertexPattern, v, "two cells meet a vertex at the same corner");
    }

    // boundary darts
    std::vector<int> outer_of(inner, -1);
    std::vector<int> boundary_inner;
    for (int d = 0; d < inner; ++d)
        if (cc_.nb[d] < 0) {
            outer_of[d] = inner + static_cast<int>(boundary_inner.size());
            boundary_inner.push_back(d);
        }
    const int total = inner + static_cast<int>(boundary_inner.size());
    vertex_.assign(total, -1);
    for (int d = 0; d < inner; ++d) vertex_[d] = vid[uf.find(d)];
    std::vector<int> outer_from(nv, -1);
    for (int d : boundary_inner) {
        int o = outer_of[d];
        int v = vid[uf.find(corner_after(d))];
        vertex_[o] = v;
        if (outer_from[v] >= 0) fail(RigidError::Kind::NonSimpleBoundary, v, "boundary visits a vertex twice");
        outer_from[v] = o;
    }

    map_.twin.assign(total, -1);
    std::vector<int> fn(total, -1);
    dir_.assign(total, 0);
    for (int d = 0; d < inner; ++d) {
        map_.twin[d] = cc_.nb[d] >= 0 ? cc_.nb[d] : outer_of[d];
        fn[d] = 4 * (d / 4) + (d % 4 + 1) % 4;
        dir_[d] = d % 4;
    }
    for (int d : boundary_inner) {
        int o = outer_of[d];
        map_.twin[o] = d;
        dir_[o] = (d % 4 + 2) % 4;
        fn[o] = outer_from[vertex_[d]];
        if (fn[o] < 0) fail(RigidError::Kind::NonSimpleBoundary, vertex_[d], "boundary is not a closed curve");
    }
    map_.next = next_from_faces(map_.twin, fn);

    int root_inner = 4 * cc_.root_cell;
    if (cc_.nb[root_inner] >= 0) fail(RigidError::Kind::RootNotConvex, cc_.root_cell, "root cell bottom is not on the boundary");
    map_.root = outer_of[root_inner];
    root_vertex_ = vertex_[map_.root];

    // boundary cycle, clockwise from the root
    for (int o = map_.root;;) {
        boundary_.push_back(o);
        o = fn[o];
        if (o == map_.root) break;
        if (static_cast<int>(boundary_.size()) > total) fail(RigidError::Kind::NonSimpleBoundary, o, "boundary cycle");
    }
    if (static_cast<int>(boundary_.size()) != total - inner)
        fail(RigidError::Kind::NonSimpleBoundary, boundary_.front(), "boundary has several components");
    try {
        map_.check();
    } catch (const MapError& e) {
        fail(RigidError::Kind::Malformed, 0, e.what());
    }

    std::vector<char> on_boundary(nv, 0);
    for (int o : boundary_) on_boundary[vertex_[o]] = 1;
    vclass_.assign(nv, Corner::Inner);
    for (int v = 0; v < nv; ++v) {
        int k = static_cast<int>(corners[v].size());
        if (!on_boundary[v]) {
            if (k != 4) fail(RigidError::Kind::BadVertexPattern, v, "inner vertex of degree " + std::to_string(k));
            continue;
        }
        if (k == 1) vclass_[v] = Corner::Convex;
        else if (k == 2) vclass_[v] = Corner::Straight;
        else if (k == 3) vclass_[v] = Corner::Concave;
        else fail(RigidError::Kind::BadVertexPattern, v, "boundary vertex of degree " + std::to_string(k + 1));
    }
    if (vclass_[root_vertex_] != Corner::Convex) fail(RigidError::Kind::RootNotConvex, root_vertex_, "root corner");

    // rays
    std::vector<std::array<int, 4>> out(nv, {-1, -1, -1, -1});
    for (int d = 0; d < total; ++d) {
        auto& slot = out[vertex_[d]][dir_[d]];
        if (slot >= 0) fail(RigidError::Kind::BadVertexPattern, vertex_[d], "two edges leave a vertex in one direction");
        slot = d;
    }
    orient_.assign(total, 0);
    auto inner_edge = [&](int d) { return d < inner && map_.twin[d] < inner; };
    for (int v = 0; v < nv; ++v) {
        if (vclass_[v] != Corner::Concave) continue;
        for (int s = 0; s < 4; ++s) {
            int d = out[v][s];
            if (d < 0 || !inner_edge(d)) continue;
            std::vector<int> path;
            for (;;) {
                if (orient_[d] != 0) fail(RigidError::Kind::BadRay, v, "ray revisits an edge");
                orient_[d] = 1;
                orient_[map_.twin[d]] = -1;
                path.push_back(d);
                int w = vertex_[map_.twin[d]];
                if (vclass_[w] != Corner::Inner) {
                    if (vclass_[w] != Corner::Straight)
                        fail(RigidError::Kind::BadRay, v, "ray from concave corner " + std::to_string(v) +
                                                              " ends at non-straight vertex " + std::to_string(w));
                    break;
                }
                d = out[w][dir_[d]];
            }
            rays_.push_back(std::move(path));
        }
    }
    for (int d = 0; d < inner; ++d)
        if (inner_edge(d) && orient_[d] == 0)
            fail(RigidError::Kind::BadRay, vertex_[d], "ray through dart " + std::to_string(d) + " does not start at a concave corner");
}

std::vector<int> RigidQuad::boundary_vertices_ccw() const
{
    std::vector<int> v{root_vertex_};
    for (std::size_t i = boundary_.size() - 1; i >= 1; --i) v.push_back(vertex_[boundary_[i]]);
    return v;
}

int RigidQuad::count(Corner c) const
{
    return static_cast<int>(std::count(vclass_.begin(), vclass_.end(), c));
}

static int strip_components(const CellComplex& cc, int side_a)
{
    int n = cc.cells();
    UnionFind uf(n);
    for (int c = 0; c < n; ++c) {
        int e = cc.nb[4 * c + side_a];
        if (e >= 0) uf.unite(c, e / 4);
    }
    int k = 0;
    for (int c = 0; c < n; ++c) k += uf.find(c) == c;
    return k;
}

int RigidQuad::rows() const
{
    return strip_components(cc_, East + 1);
}

int RigidQuad::columns() const
{
    return strip_components(cc_, East);
}

RigidQuad validate_rigid(const PlanarMap& m, const std::vector<int>& orientation)
{
    try {
        m.check();
    } catch (const MapError& e) {
        fail(RigidError::Kind::Malformed, 0, e.what());
    }
    MapIndex idx = index_map(m);
    auto fn = m.face_next();
    int outer = idx.face[m.root];
    {
        std::vector<char> seen(idx.vertices(), 0);
        for (int d : idx.face_darts[outer])
            if (seen[idx.vertex[d]]++) fail(RigidError::Kind::NonSimpleBoundary, idx.vertex[d], "boundary visits a vertex twice");
    }
    for (int f = 0; f < idx.faces(); ++f)
        if (f != outer && idx.face_darts[f].size() != 4)
            fail(RigidError::Kind::NonQuadFace, f, "face of degree " + std::to_string(idx.face_darts[f].size()));
    int n = m.darts();
    std::vector<int> dir(n, -1);
    auto is_inner = [&](int d) { return idx.face[d] != outer; };
    int start = m.twin[m.root];
    if (!is_inner(start)) fail(RigidError::Kind::Malformed, m.root, "root edge has the outer face on both sides");
    dir[start] = East;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int d = queue.front();
        queue.pop_front();
        std::pair<int, int> steps[] = {{fn[d], (dir[d] + 1) % 4}, {m.twin[d], (dir[d] + 2) % 4}};
        for (auto [e, de] : steps) {
            if (!is_inner(e)) continue;
            if (dir[e] < 0) {
                dir[e] = de;
                queue.push_back(e);
            } else if (dir[e] != de) {
                fail(RigidError::Kind::BadVertexPattern, idx.vertex[e], "map is not flat around this vertex");
            }
        }
    }
    CellComplex cc;
    std::vector<int> to_cell_dart(n, -1);
    for (int f = 0; f < idx.faces(); ++f) {
        if (f == outer) continue;
        int c = cc.add_cell();
        for (int d : idx.face_darts[f]) {
            if (dir[d] < 0) fail(RigidError::Kind::Malformed, d, "face not reached from the root");
            to_cell_dart[d] = 4 * c + dir[d];
        }
    }
    for (int d = 0; d < n; ++d)
        if (is_inner(d) && is_inner(m.twin[d])) cc.nb[to_cell_dart[d]] = to_cell_dart[m.twin[d]];
    cc.root_cell = to_cell_dart[start] / 4;
    RigidQuad r(std::move(cc));
    if (!orientation.empty()) {
        if (static_cast<int>(orientation.size()) != n) fail(RigidError::Kind::Malformed, 0, "orientation size");
        for (int d = 0; d < n; ++d) {
            if (!is_inner(d) || !is_inner(m.twin[d])) continue;
            if (orientation[d] != r.orientation(to_cell_dart[d]))
                fail(RigidError::Kind::BadRay, d, "given orientation of dart " + std::to_string(d) +
                                                      " disagrees with the ray from its concave corner");
        }
    }
    return r;
}

RigidQuad mirror(const RigidQuad& r)
{
    static constexpr int perm[4] = {1, 0, 3, 2};
    const CellComplex& cc = r.complex();
    CellComplex m;
    m.nb.assign(cc.nb.size(), -1);
    for (int d = 0; d < static_cast<int>(cc.nb.size()); ++d) {
        int e = cc.nb[d];
        int md = 4 * (d / 4) + perm[d % 4];
        m.nb[md] = e < 0 ? -1 : 4 * (e / 4) + perm[e % 4];
    }
    m.root_cell = cc.root_cell;
    return RigidQuad(std::move(m));
}

std::vector<int> base_signature(const RigidQuad& r)
{
    std::vector<int> sig;
    int len = 0;
    for (int o : r.boundary()) {
        ++len;
        Corner c = r.corner(r.head(o));
        if (c == Corner::Straight) continue;
        sig.push_back(len);
        len = 0;
        if (c == Corner::Convex) break;
    }
    return sig;
}

std::vector<int> walk_of_signature(const std::vector<int>& sig)
{
    std::vector<int> w;
    int k = static_cast<int>(sig.size());
    for (int i = 1; i <= k; i += 2)
        for (int j = 0; j < sig[i - 1]; ++j) {
            w.push_back(i - 1);
            w.push_back(i);
        }
    for (int i = k % 2 ? k - 1 : k; i >= 2; i -= 2)
        for (int j = 0; j < sig[i - 1]; ++j) {
            w.push_back(i);
            w.push_back(i - 1);
        }
    return w;
}

std::vector<int> canonical_code(const RigidQuad& r)
{
    const CellComplex& cc = r.complex();
    int n = cc.cells();
    std::vector<int> order(n, -1), seq;
    std::deque<int> queue{cc.root_cell};
    order[cc.root_cell] = 0;
    int k = 1;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        seq.push_back(c);
        for (int s = 0; s < 4; ++s) {
            int e = cc.nb[4 * c + s];
            if (e >= 0 && order[e / 4] < 0) {
                order[e / 4] = k++;
                queue.push_back(e / 4);
            }
        }
    }
    std::vector<int> code;
    code.reserve(4 * n);
    for (int c : seq)
        for (int s = 0; s < 4; ++s) {
            int e = cc.nb[4 * c + s];
            code.push_back(e < 0 ? -1 : order[e / 4]);
        }
    return code;
}

bool same_rigid(const RigidQuad& a, const RigidQuad& b)
{
    return canonical_code(a) == canonical_code(b);
}

RigidQuad unit_square()
{
    CellComplex cc;
    cc.add_cell();
    return RigidQuad(std::move(cc));
}

}  // namespace rq
