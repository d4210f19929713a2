#include "rq/bijection.hpp"

#include "rq/exploration.hpp"

#include <algorithm>
#include <set>

namespace rq {

namespace {

[[noreturn]] void not_expanded(int element, const std::string& what)
{
    throw RigidError(RigidError::Kind::Malformed, element, "MalformedState: not an expanded quadrangulation: " + what);
}

[[noreturn]] void not_in_class(int element, const std::string& what)
{
    throw ColorfulError(ColorfulError::Kind::NotInClass, element, "NotInClass: " + what);
}

int side(int c, int s)
{
    return 4 * c + s;
}

// Keeps darts with keep[d] set, renumbered in order; face_next must stay a
// permutation of the kept darts.
ColorfulQuad compact(const ColorfulQuad& q, const std::vector<int>& twin, const std::vector<int>& fn,
                     const std::vector<char>& keep, int root, ColorfulKind kind)
{
    std::vector<int> id(twin.size(), -1);
    int n = 0;
    for (std::size_t d = 0; d < twin.size(); ++d)
        if (keep[d]) id[d] = n++;
    std::vector<int> t(n), f(n), lab(n);
    for (std::size_t d = 0; d < twin.size(); ++d) {
        if (!keep[d]) continue;
        t[id[d]] = id[twin[d]];
        f[id[d]] = id[fn[d]];
        lab[id[d]] = d < static_cast<std::size_t>(q.darts()) ? q.dart_label(static_cast<int>(d)) : -1;
    }
    PlanarMap m;
    m.twin = std::move(t);
    m.next = next_from_faces(m.twin, f);
    m.root = id[root];
    return ColorfulQuad::from_dart_labels(std::move(m), lab, kind);
}

}  // namespace

ColorfulQuad psi_p(const RigidQuad& r)
{
    return assemble_colorful(explore_rigid(r));
}

RigidQuad psi_p_inverse(const ColorfulQuad& q)
{
    return assemble_rigid(peel(q));
}

RigidQuad expand(const RigidQuad& r, std::vector<int>* source_cell)
{
    CellComplex cc = r.complex();
    std::vector<int> col{cc.root_cell};
    while (cc.nb[side(col.back(), 2)] >= 0) col.push_back(cc.nb[side(col.back(), 2)] / 4);
    std::vector<int> halves;
    for (int c : col) {
        int h = cc.add_cell();
        halves.push_back(h);
        int old = cc.nb[side(c, 3)];
        cc.nb[side(c, 3)] = -1;
        if (old >= 0) cc.glue(side(h, 3), old);
        cc.glue(side(h, 1), side(c, 3));
    }
    for (std::size_t i = 0; i + 1 < halves.size(); ++i) cc.glue(side(halves[i], 2), side(halves[i + 1], 0));
    int base = cc.add_cell();
    cc.glue(side(base, 2), side(col.front(), 0));
    cc.root_cell = base;
    if (source_cell) {
        source_cell->resize(cc.cells());
        for (int c = 0; c < r.cells(); ++c) (*source_cell)[c] = c;
        for (std::size_t i = 0; i < col.size(); ++i) (*source_cell)[halves[i]] = col[i];
        (*source_cell)[base] = -1;
    }
    return RigidQuad(std::move(cc));
}

RigidQuad unexpand(const RigidQuad& r)
{
    const CellComplex& cc = r.complex();
    int base = cc.root_cell;
    if (cc.nb[side(base, 1)] >= 0 || cc.nb[side(base, 3)] >= 0 || cc.nb[side(base, 2)] < 0)
        not_expanded(base, "root cell is not a single cell below a column");
    std::vector<int> col{cc.nb[side(base, 2)] / 4};
    while (cc.nb[side(col.back(), 2)] >= 0) {
        col.push_back(cc.nb[side(col.back(), 2)] / 4);
        if (col.size() > static_cast<std::size_t>(cc.cells())) not_expanded(base, "column does not end");
    }
    std::vector<int> halves;
    for (int c : col) {
        int e = cc.nb[side(c, 3)];
        if (e < 0) not_expanded(c, "column cell without a left half");
        halves.push_back(e / 4);
    }
    if (cc.nb[side(halves.front(), 0)] >= 0 || cc.nb[side(halves.back(), 2)] >= 0)
        not_expanded(halves.front(), "left halves do not form a column of the same height");
    for (std::size_t i = 0; i + 1 < halves.size(); ++i)
        if (cc.nb[side(halves[i], 2)] != side(halves[i + 1], 0)) not_expanded(halves[i], "left halves are not stacked");
    std::vector<char> drop(cc.cells(), 0);
    drop[base] = 1;
    for (int h : halves) {
        if (drop[h]++) not_expanded(h, "left half used twice");
    }
    for (int c : col)
        if (drop[c]) not_expanded(c, "column meets its left halves");
    CellComplex out = cc;
    for (std::size_t i = 0; i < col.size(); ++i) {
        int old = cc.nb[side(halves[i], 3)];
        out.nb[side(col[i], 3)] = old;
        if (old >= 0) out.nb[old] = side(col[i], 3);
    }
    out.nb[side(col.front(), 0)] = -1;
    std::vector<int> id(cc.cells(), -1);
    int n = 0;
    for (int c = 0; c < cc.cells(); ++c)
        if (!drop[c]) id[c] = n++;
    CellComplex compacted;
    compacted.nb.assign(4 * n, -1);
    for (int c = 0; c < cc.cells(); ++c) {
        if (drop[c]) continue;
        for (int s = 0; s < 4; ++s) {
            int e = out.nb[side(c, s)];
            if (e >= 0 && drop[e / 4]) not_expanded(c, "dangling gluing");
            compacted.nb[side(id[c], s)] = e < 0 ? -1 : side(id[e / 4], e % 4);
        }
    }
    compacted.root_cell = id[col.front()];
    return RigidQuad(std::move(compacted));
}

ColorfulQuad zip(const ColorfulQuad& q)
{
    if (q.kind() != ColorfulKind::Disk) not_in_class(q.root(), "zip needs a disk");
    int t0 = q.root(), t1 = q.face_next(t0);
    if (q.face_next(t1) != t0) not_in_class(t0, "zip needs perimeter 2");
    int c0 = q.twin(t0), c1 = q.twin(t1);
    std::vector<int> twin = q.map().twin, fn(q.darts());
    for (int d = 0; d < q.darts(); ++d) fn[d] = q.face_next(d);
    twin[c0] = c1;
    twin[c1] = c0;
    std::vector<char> keep(q.darts(), 1);
    keep[t0] = keep[t1] = 0;
    ColorfulQuad s = compact(q, twin, fn, keep, c1, ColorfulKind::Sphere);
    if (!s.in_class()) not_in_class(c0, "face at the root is not (0,1,2,1)");
    return s;
}

ColorfulQuad unzip(const ColorfulQuad& q)
{
    if (!q.in_class()) not_in_class(q.root(), "unzip needs a sphere with (0,1,2,1) right of the root");
    const int n = q.darts();
    int c1 = q.root(), c0 = q.twin(c1);
    std::vector<int> twin = q.map().twin, fn(n + 2), lab(n + 2);
    for (int d = 0; d < n; ++d) {
        fn[d] = q.face_next(d);
        lab[d] = q.dart_label(d);
    }
    int t0 = n, t1 = n + 1;
    twin.push_back(c0);
    twin.push_back(c1);
    twin[c0] = t0;
    twin[c1] = t1;
    fn[t0] = t1;
    fn[t1] = t0;
    lab[t0] = q.dart_label(c1);
    lab[t1] = q.dart_label(c0);
    PlanarMap m;
    m.twin = std::move(twin);
    m.next = next_from_faces(m.twin, fn);
    m.root = t0;
    return ColorfulQuad::from_dart_labels(std::move(m), lab, ColorfulKind::Disk);
}

ColorfulQuad psi(const RigidQuad& r)
{
    return zip(psi_p(expand(r)));
}

RigidQuad psi_inverse(const ColorfulQuad& q)
{
    return unexpand(psi_p_inverse(unzip(q)));
}

AscentResult ascent_path(const ColorfulQuad& q)
{
    if (!q.in_class()) not_in_class(q.root(), "ascent path needs a sphere in the class");
    AscentResult out;
    int x = q.twin(q.root());
    int pivot = -1, turns = 0;
    std::vector<std::pair<int, int>> pairs;
    for (int guard = 0;; ++guard) {
        if (guard > q.edges()) throw ColorfulError(ColorfulError::Kind::Malformed, x, "NonTermination: ascent path");
        int top = x, prev = -1;
        for (int d = x, p = -1, i = 0; i < 4; ++i, p = d, d = q.face_next(d))
            if (i == 0 || q.dart_label(d) > q.dart_label(top)) {
                top = d;
                prev = p;
            }
        if (prev < 0) {
            prev = top;
            while (q.face_next(prev) != top) prev = q.face_next(prev);
        }
        int v = q.origin(top);
        turns = v == pivot ? turns + 1 : 1;
        pivot = v;
        int e = q.label(v) % 2 == 0 ? prev : top;
        out.crossed.push_back(e);
        int a = q.dart_label(e), b = q.dart_label(q.twin(e));
        pairs.emplace_back(std::min(a, b), std::max(a, b));
        x = q.twin(e);
        if (turns == q.degree(v)) break;
    }
    out.terminal = pivot;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i == 0 || pairs[i] != pairs[i - 1]) out.signature.push_back(0);
        ++out.signature.back();
    }
    return out;
}

ColorfulQuad psi_b(const RigidQuad& r)
{
    ColorfulQuad q = psi(r);
    AscentResult a = ascent_path(q);
    std::vector<char> keep(q.darts(), 1);
    for (int e : a.crossed) keep[e] = keep[q.twin(e)] = 0;
    for (int d : q.index().vertex_darts[a.terminal])
        if (keep[d]) throw ColorfulError(ColorfulError::Kind::Malformed, d, "MalformedState: terminal vertex keeps an edge");
    int g0 = q.twin(q.root());
    int root = q.face_next(q.face_next(q.face_next(g0)));
    // faces merge where edges are removed: follow next around vertices instead
    const auto& next = q.map().next;
    std::vector<int> nxt(q.darts(), -1);
    for (int d = 0; d < q.darts(); ++d) {
        if (!keep[d]) continue;
        int e = next[d];
        while (!keep[e]) e = next[e];
        nxt[d] = e;
    }
    std::vector<int> id(q.darts(), -1);
    int n = 0;
    for (int d = 0; d < q.darts(); ++d)
        if (keep[d]) id[d] = n++;
    PlanarMap m;
    m.twin.resize(n);
    m.next.resize(n);
    std::vector<int> lab(n);
    for (int d = 0; d < q.darts(); ++d) {
        if (!keep[d]) continue;
        m.twin[id[d]] = id[q.twin(d)];
        m.next[id[d]] = id[nxt[d]];
        lab[id[d]] = q.dart_label(d);
    }
    m.root = id[root];
    return ColorfulQuad::from_dart_labels(std::move(m), lab, ColorfulKind::Disk);
}

BCClass classify_BC(const RigidQuad& r)
{
    BCClass out;
    auto sig = base_signature(r);
    if (sig.size() != 1) return out;
    const auto& b = r.boundary();
    std::set<int> sides;
    int len = 0;
    for (int o : b) {
        int v = r.head(o);
        if (r.corner(v) != Corner::Straight) break;
        sides.insert(v);
    }
    for (std::size_t i = b.size() - 1; i > 0; --i) {
        ++len;
        int v = r.origin(b[i]);
        if (r.corner(v) == Corner::Straight) {
            sides.insert(v);
            continue;
        }
        if (r.corner(v) != Corner::Convex) return out;
        break;
    }
    out.type = BCClass::Type::B;
    out.p = sig[0];
    out.q = len;
    std::vector<int> ends_on_sides(r.vertices(), 0);
    for (const auto& ray : r.rays())
        if (sides.count(r.head(ray.back()))) ++ends_on_sides[r.origin(ray.front())];
    for (int v = 0; v < r.vertices(); ++v)
        if (r.corner(v) == Corner::Concave && ends_on_sides[v] == 2) return out;
    out.type = BCClass::Type::C;
    return out;
}

}  // namespace rq

namespace rq {

std::vector<int> signature_of_walk(const std::vector<int>& walk)
{
    if (walk.empty() || walk.size() % 2) not_in_class(-1, "walk of odd or zero length");
    std::vector<int> sig;
    for (std::size_t i = 0; i < walk.size(); i += 2) {
        int block = std::max(walk[i], walk[i + 1]);
        if (block < 1 || block > static_cast<int>(walk.size())) not_in_class(static_cast<int>(i), "label out of range");
        if (static_cast<int>(sig.size()) < block) sig.resize(block, 0);
        ++sig[block - 1];
    }
    for (int x : sig)
        if (x == 0) not_in_class(-1, "boundary is not the walk of a signature");
    if (walk_of_signature(sig) != walk) not_in_class(-1, "boundary is not the walk of a signature");
    return sig;
}

namespace {

// Quadrangles (i-1,i,i+1,i) glued in a chain, block by block, then closed
// around the top vertex. Dart 4f+s is side s of face f; twin is -1 on the hole.
struct AscentSubmap {
    std::vector<int> phi, twin, lab;

    int merged_next(int x) const
    {
        int y = phi[x];
        while (twin[y] >= 0) y = phi[twin[y]];
        return y;
    }
};

AscentSubmap ascent_submap(const std::vector<int>& sig)
{
    AscentSubmap w;
    std::vector<int> block;
    for (std::size_t i = 0; i < sig.size(); ++i) block.insert(block.end(), sig[i], static_cast<int>(i) + 1);
    const int faces = static_cast<int>(block.size());
    w.phi.resize(4 * faces);
    w.twin.assign(4 * faces, -1);
    w.lab.resize(4 * faces);
    for (int f = 0; f < faces; ++f) {
        int i = block[f];
        const int labels[4] = {i - 1, i, i + 1, i};
        for (int s = 0; s < 4; ++s) {
            w.phi[4 * f + s] = 4 * f + (s + 1) % 4;
            w.lab[4 * f + s] = labels[s];
        }
    }
    for (int f = 0; f + 1 < faces; ++f) {
        int i = block[f];
        bool same = block[f + 1] == i;
        // right of the top corner when its label is even, left when odd
        int x = (i + 1) % 2 == 0 ? 4 * f + 1 : 4 * f + 2;
        int y = (i + 1) % 2 == 0 ? 4 * (f + 1) + (same ? 2 : 3) : 4 * (f + 1) + (same ? 1 : 0);
        w.twin[x] = y;
        w.twin[y] = x;
    }
    const int top = static_cast<int>(sig.size()) + 1;
    int x = -1;
    for (int d = 0; d < 4 * faces; ++d)
        if (w.twin[d] < 0 && w.lab[w.phi[d]] == top) x = d;
    int y = w.merged_next(x);
    w.twin[x] = y;
    w.twin[y] = x;
    return w;
}

}  // namespace

ColorfulQuad glue_ascent(const ColorfulQuad& u)
{
    if (u.kind() != ColorfulKind::Disk) not_in_class(u.root(), "expected a disk");
    std::vector<int> sig = signature_of_walk(u.boundary_labels());
    AscentSubmap w = ascent_submap(sig);
    const int n = u.darts(), wn = static_cast<int>(w.phi.size());
    // submap darts: hole darts become darts of u, the others get fresh ids
    std::vector<int> id(wn, -1);
    const int start = 3;  // the 1->0 side of the first quadrangle
    int x = start, d = u.root();
    do {
        if (w.lab[x] != u.dart_label(d)) not_in_class(d, "boundary labels do not match the ascent submap");
        id[x] = d;
        x = w.merged_next(x);
        d = u.face_next(d);
    } while (x != start && d != u.root());
    if (x != start || d != u.root()) not_in_class(d, "boundary length does not match the ascent submap");
    int fresh = n;
    for (int y = 0; y < wn; ++y)
        if (id[y] < 0) id[y] = fresh++;
    std::vector<int> twin(fresh), fn(fresh), lab(fresh);
    for (int e = 0; e < n; ++e) {
        twin[e] = u.twin(e);
        fn[e] = u.face_next(e);
        lab[e] = u.dart_label(e);
    }
    for (int y = 0; y < wn; ++y) {
        fn[id[y]] = id[w.phi[y]];
        lab[id[y]] = w.lab[y];
        if (w.twin[y] >= 0) twin[id[y]] = id[w.twin[y]];
    }
    PlanarMap m;
    m.twin = std::move(twin);
    m.next = next_from_faces(m.twin, fn);
    m.root = u.twin(id[0]);
    ColorfulQuad q = ColorfulQuad::from_dart_labels(std::move(m), lab, ColorfulKind::Sphere);
    if (!q.in_class()) not_in_class(q.root(), "glued sphere is not in the class");
    return q;
}

RigidQuad psi_b_inverse(const ColorfulQuad& u)
{
    return psi_inverse(glue_ascent(u));
}

}  // namespace rq
