#include "rq/statistics.hpp"

#include "rq/bijection.hpp"
#include "rq/exploration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace rq {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

std::string multiset_string(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

// Nested forest of tagged nodes as a canonical string; sep[a][b] says a separates b from the root.
std::string forest_string(const std::vector<std::string>& tags, const std::vector<std::vector<char>>& sep)
{
    const int n = static_cast<int>(tags.size());
    std::vector<int> depth(n, 0), parent(n, -1);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) depth[b] += sep[a][b];
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            if (sep[a][b] && depth[a] == depth[b] - 1) parent[b] = a;
    std::function<std::string(int)> encode = [&](int x) {
        std::vector<std::string> kids;
        for (int c = 0; c < n; ++c)
            if (parent[c] == x) kids.push_back(encode(c));
        std::sort(kids.begin(), kids.end());
        std::string s = x < 0 ? "" : tags[x];
        s += '(';
        for (const auto& k : kids) s += k;
        return s + ')';
    };
    return encode(-1);
}

std::string tag(bool decreasing, int length)
{
    return (decreasing ? "D" : "I") + std::to_string(length);
}

}  // namespace

std::vector<TurningNumber> turning_numbers(const RigidQuad& r)
{
    std::vector<TurningNumber> out;
    auto bv = r.boundary_vertices_ccw();
    int tally = 0;
    for (std::size_t i = 1; i < bv.size(); ++i) {
        Corner c = r.corner(bv[i]);
        if (c == Corner::Convex) {
            out.push_back({bv[i], tally});
            ++tally;
        } else if (c == Corner::Concave) {
            --tally;
        }
    }
    return out;
}

SideClassification classify_sides(const RigidQuad& r)
{
    static constexpr int perm[4] = {1, 0, 3, 2};
    SideClassification out;
    for (int pass = 0; pass < 2; ++pass) {
        // horizontal sides from r, vertical sides from its mirror image
        RigidQuad m = pass == 0 ? r : mirror(r);
        std::vector<int> src;
        RigidQuad e = expand(m, &src);
        RigidExploration ex = explore_rigid_detailed(e);
        for (std::size_t i = 0; i < ex.trace.steps.size(); ++i) {
            const Step& st = ex.trace.steps[i];
            BoundarySide side;
            side.horizontal = pass == 0;
            std::vector<int> inner;
            for (int d : ex.revealed[i]) {
                int s = d % 4;
                int rd = 4 * src[d / 4] + (pass == 0 ? s : perm[s]);
                if (inner.empty() || inner.back() != rd) inner.push_back(rd);
            }
            if (inner.empty()) continue;
            for (int d : inner) side.darts.push_back(r.map().twin[d]);
            // mirroring reverses the orientation of the cell darts
            bool forward = (st.kind == StepKind::R) == (pass == 0);
            side.far = forward ? r.head(inner.back()) : r.origin(inner.back());
            side.near = forward ? r.origin(inner.front()) : r.head(inner.front());
            if (st.kind != StepKind::G) {
                bool right = (st.kind == StepKind::R) == (pass == 0);
                side.tangency = right ? Tangency::Right : Tangency::Left;
            }
            out.sides.push_back(std::move(side));
        }
    }
    std::map<int, CornerClass> corners;
    for (const auto& t : turning_numbers(r)) corners[t.vertex] = CornerClass{t.vertex};
    for (const auto& s : out.sides) {
        if (s.tangency == Tangency::None || !corners.count(s.far)) continue;
        corners[s.far].tangency = s.tangency;
        corners[s.far].degree = static_cast<int>(s.darts.size());
    }
    for (const auto& t : turning_numbers(r)) out.corners.push_back(corners[t.vertex]);
    return out;
}

Extension side_extension(const RigidQuad& r, const BoundarySide& side)
{
    if (side.tangency == Tangency::None)
        throw StatisticsError(StatisticsError::Kind::NotTangential, side.far, "NotTangential: side has no extension");
    Extension out;
    out.darts = side.darts;
    if (r.corner(side.far) == Corner::Concave) {
        for (const auto& ray : r.rays())
            if (r.origin(ray.front()) == side.far && (r.dir(ray.front()) % 2 == 0) == side.horizontal)
                out.darts.insert(out.darts.end(), ray.begin(), ray.end());
    }
    out.length = static_cast<int>(out.darts.size());
    return out;
}

std::vector<LevelLine> level_lines(const ColorfulQuad& q)
{
    const int n = q.darts();
    auto pair_of = [&](int d) { return std::min(q.dart_label(d), q.dart_label(q.twin(d))); };
    auto face_darts = [&](int d) {
        std::vector<int> f{d};
        for (int x = q.face_next(d); x != d; x = q.face_next(x)) f.push_back(x);
        return f;
    };
    std::vector<char> used(n, 0);
    std::vector<LevelLine> lines;
    for (int start = 0; start < n; ++start) {
        if (used[start]) continue;
        LevelLine line;
        line.low = pair_of(start);
        int x = start;
        do {
            auto f = face_darts(x);
            int other = -1;
            for (std::size_t i = 1; i < f.size(); ++i)
                if (pair_of(f[i]) == line.low) other = f[i];
            if (other < 0) throw ColorfulError(ColorfulError::Kind::Malformed, x, "MalformedState: level line stops");
            line.edges.push_back(other);
            used[other] = used[q.twin(other)] = 1;
            x = q.twin(other);
        } while (x != start);
        line.length = static_cast<int>(line.edges.size());
        lines.push_back(std::move(line));
    }
    const int v1 = q.origin(q.root());
    std::vector<UnionFind> cut;
    for (const auto& line : lines) {
        std::vector<char> removed(n, 0);
        for (int d : line.edges) removed[d] = removed[q.twin(d)] = 1;
        UnionFind uf(q.vertices());
        for (int d = 0; d < n; ++d)
            if (!removed[d]) uf.unite(q.origin(d), q.head(d));
        cut.push_back(uf);
    }
    for (std::size_t a = 0; a < lines.size(); ++a) {
        int d = lines[a].edges.front();
        int lowv = q.dart_label(d) == lines[a].low ? q.origin(d) : q.head(d);
        lines[a].direction = cut[a].find(lowv) == cut[a].find(v1) ? LineDirection::Increasing : LineDirection::Decreasing;
        for (std::size_t b = 0; b < lines.size(); ++b) {
            if (a == b) continue;
            int w = q.origin(lines[a].edges.front());
            if (cut[b].find(w) != cut[b].find(v1)) ++lines[a].nesting_depth;
        }
    }
    return lines;
}

std::vector<VertexExtremum> local_extrema(const ColorfulQuad& q)
{
    std::vector<VertexExtremum> out;
    for (int v = 0; v < q.vertices(); ++v) {
        bool lower = true, higher = true;
        for (int d : q.index().vertex_darts[v]) {
            int w = q.dart_label(q.twin(d));
            lower = lower && w < q.label(v);
            higher = higher && w > q.label(v);
        }
        Extremum k = lower ? Extremum::Max : higher ? Extremum::Min : Extremum::Neither;
        out.push_back({v, k, q.degree(v)});
    }
    return out;
}

bool is_fighting_fish(const RigidQuad& r)
{
    auto t = turning_numbers(r);
    return std::all_of(t.begin(), t.end(), [](const TurningNumber& x) { return x.value >= 0 && x.value <= 2; });
}

bool is_even_edge(const ColorfulQuad& q, int d)
{
    return std::min(q.dart_label(d), q.dart_label(q.twin(d))) % 2 == 0;
}

std::vector<DictionaryRow> dictionary_report(const RigidQuad& r)
{
    ColorfulQuad q = psi(r);
    std::vector<DictionaryRow> rows;
    auto add = [&](const std::string& name, const std::string& a, const std::string& b) {
        rows.push_back({name, a, b, a == b});
    };
    auto num = [](long v) { return std::to_string(v); };

    int even = 0;
    for (int d = 0; d < q.darts(); ++d)
        if (d < q.twin(d) && is_even_edge(q, d)) ++even;
    add("(i) non-root convex corners / vertices", num(r.size()), num(q.vertices()));
    add("(ii) rows / even edges", num(r.rows()), num(even));
    add("(iii) columns / odd edges", num(r.columns()), num(q.edges() - even));
    add("(iv) concave corners + root / faces", num(r.count(Corner::Concave) + 1), num(q.faces()));

    SideClassification sc = classify_sides(r);
    auto ext = local_extrema(q);
    std::vector<int> right_deg, left_deg, min_deg, max_deg;
    for (const auto& c : sc.corners) {
        if (c.tangency == Tangency::Right) right_deg.push_back(c.degree);
        if (c.tangency == Tangency::Left) left_deg.push_back(c.degree);
    }
    for (const auto& x : ext) {
        if (x.kind == Extremum::Min) min_deg.push_back(x.degree);
        if (x.kind == Extremum::Max) max_deg.push_back(x.degree);
    }
    add("(v) right-tangential corner degrees / local minimum degrees", multiset_string(right_deg), multiset_string(min_deg));
    add("(vi) left-tangential corner degrees / local maximum degrees", multiset_string(left_deg), multiset_string(max_deg));

    std::vector<int> tangential;
    for (std::size_t i = 0; i < sc.sides.size(); ++i)
        if (sc.sides[i].tangency != Tangency::None) tangential.push_back(static_cast<int>(i));
    auto lines = level_lines(q);
    long right_sides = 0, decreasing = 0;
    for (int i : tangential) right_sides += sc.sides[i].tangency == Tangency::Right;
    for (const auto& l : lines) decreasing += l.direction == LineDirection::Decreasing;
    add("(vii) right-tangential sides / decreasing level lines", num(right_sides), num(decreasing));
    add("(viii) left-tangential sides / increasing level lines", num(static_cast<long>(tangential.size()) - right_sides),
        num(static_cast<long>(lines.size()) - decreasing));

    std::vector<int> turning, labels = q.labels();
    for (const auto& t : turning_numbers(r)) turning.push_back(t.value);
    add("turning numbers / labels", multiset_string(turning), multiset_string(labels));

    // side extensions cut the disk; compare which sides they cut off from the root corner
    const int m = static_cast<int>(tangential.size());
    std::vector<std::string> side_tags(m), line_tags(lines.size());
    std::vector<std::vector<char>> side_sep(m, std::vector<char>(m, 0));
    std::vector<int> ext_len;
    for (int a = 0; a < m; ++a) {
        const BoundarySide& s = sc.sides[tangential[a]];
        Extension x = side_extension(r, s);
        side_tags[a] = tag(s.tangency == Tangency::Right, x.length);
        std::vector<char> blocked(r.map().darts(), 0);
        for (std::size_t i = s.darts.size(); i < x.darts.size(); ++i) blocked[x.darts[i]] = blocked[r.map().twin[x.darts[i]]] = 1;
        const auto& nb = r.complex().nb;
        UnionFind uf(r.cells());
        for (int d = 0; d < r.inner_darts(); ++d)
            if (nb[d] >= 0 && !blocked[d]) uf.unite(d / 4, nb[d] / 4);
        int root = uf.find(r.complex().root_cell);
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            bool off = true;
            for (int o : sc.sides[tangential[b]].darts) off = off && uf.find(r.map().twin[o] / 4) != root;
            side_sep[a][b] = off;
        }
    }
    std::vector<std::vector<char>> line_sep(lines.size(), std::vector<char>(lines.size(), 0));
    {
        const int v1 = q.origin(q.root());
        for (std::size_t a = 0; a < lines.size(); ++a) {
            line_tags[a] = tag(lines[a].direction == LineDirection::Decreasing, lines[a].length);
            std::vector<char> removed(q.darts(), 0);
            for (int d : lines[a].edges) removed[d] = removed[q.twin(d)] = 1;
            UnionFind uf(q.vertices());
            for (int d = 0; d < q.darts(); ++d)
                if (!removed[d]) uf.unite(q.origin(d), q.head(d));
            for (std::size_t b = 0; b < lines.size(); ++b)
                if (a != b) line_sep[a][b] = uf.find(q.origin(lines[b].edges.front())) != uf.find(v1);
        }
    }
    add("side extensions / level lines (lengths and nesting)", forest_string(side_tags, side_sep),
        forest_string(line_tags, line_sep));
    return rows;
}

void check_dictionary(const RigidQuad& r)
{
    auto rows = dictionary_report(r);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].holds)
            throw StatisticsError(StatisticsError::Kind::DictionaryViolation, static_cast<int>(i),
                                  "DictionaryViolation: " + rows[i].name + ": " + rows[i].rigid + " vs " + rows[i].colorful);
}

}  // namespace rq
