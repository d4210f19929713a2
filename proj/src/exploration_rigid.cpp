#include "rq/exploration.hpp"

#include <algorithm>
#include <deque>

namespace rq {

namespace {

enum Local { Bottom = 0, Right = 1, Top = 2, Left = 3 };

int side(int c, int rot, int j)
{
    return 4 * c + (j + rot) % 4;
}

// An open side: local top darts from left to right, and between consecutive
// tops whether the vertical ray there starts at the side ('S') or ends at it ('E').
struct OpenSide {
    std::vector<int> tops;
    std::string types;
    int rot = 0;
};

struct Piece {
    std::vector<OpenSide> fresh;
    std::vector<int> revealed;
};

[[noreturn]] void malformed(int element, const std::string& what)
{
    throw RigidError(RigidError::Kind::Malformed, element, "MalformedState: " + what);
}

std::string map_word(const std::string& w, char up, char down)
{
    std::string out;
    for (char c : w) out += c == 'u' ? up : down;
    return out;
}

// Glues the pieces of the exploration in build mode, or checks that they are
// present in an existing complex otherwise.
class Gluer {
public:
    Gluer(CellComplex& cc, bool build) : cc_(cc), build_(build), seen_(cc.cells(), 0) {}

    int across(int d)
    {
        int e = cc_.nb[d];
        if (build_) {
            if (e >= 0) malformed(d, "side already glued");
            int c = cc_.add_cell();
            cc_.glue(d, 4 * c + (d % 4 + 2) % 4);
            return c;
        }
        if (e < 0) malformed(d, "expected a cell across dart " + std::to_string(d));
        int c = e / 4;
        if (seen_[c]++) malformed(c, "cell explored twice");
        return c;
    }

    void link(int a, int b)
    {
        if (build_) {
            cc_.glue(a, b);
        } else if (cc_.nb[a] != b) {
            malformed(a, "expected darts " + std::to_string(a) + " and " + std::to_string(b) + " to be glued");
        }
    }

    void boundary(int d)
    {
        if (cc_.nb[d] >= 0) malformed(d, "expected dart " + std::to_string(d) + " on the boundary");
    }

    void mark(int c) { seen_.at(c) = 1; }
    bool all_seen() const { return std::all_of(seen_.begin(), seen_.end(), [](char s) { return s != 0; }); }

    std::vector<int> row_above(const OpenSide& s)
    {
        std::vector<int> cells;
        for (int t : s.tops) cells.push_back(across(t));
        for (std::size_t i = 1; i < cells.size(); ++i) link(side(cells[i - 1], s.rot, Right), side(cells[i], s.rot, Left));
        return cells;
    }

    Piece apply(const OpenSide& s, const Step& st)
    {
        Piece out;
        const int rot = s.rot;
        switch (st.kind) {
        case StepKind::G: {
            std::vector<std::vector<int>> groups(1);
            for (std::size_t i = 0; i < s.tops.size(); ++i) {
                if (i > 0 && s.types[i - 1] == 'S') groups.emplace_back();
                groups.back().push_back(static_cast<int>(i));
            }
            if (static_cast<int>(groups.size()) != st.left + st.right + 1) malformed(s.tops[0], "G step does not fit the side");
            auto tower = [&](int g0, int g1) {
                if (g0 >= g1) return;
                int i0 = groups[g0].front(), i1 = groups[g1 - 1].back();
                OpenSide t{{s.tops.begin() + i0, s.tops.begin() + i1 + 1}, s.types.substr(i0, i1 - i0), rot};
                auto cells = row_above(t);
                boundary(side(cells.front(), rot, Left));
                boundary(side(cells.back(), rot, Right));
                for (std::size_t i = 0; i < cells.size(); ++i) t.tops[i] = side(cells[i], rot, Top);
                out.fresh.push_back(std::move(t));
            };
            for (int i : groups[st.left]) {
                boundary(s.tops[i]);
                out.revealed.push_back(s.tops[i]);
            }
            tower(st.left + 1, static_cast<int>(groups.size()));
            tower(0, st.left);
            break;
        }
        case StepKind::R:
        case StepKind::L: {
            const bool right = st.kind == StepKind::R;
            // v: letters ordered away from the explored row
            std::string v = right ? st.word : std::string(st.word.rbegin(), st.word.rend());
            const int m = static_cast<int>(v.size());
            const int out_side = right ? Right : Left, in_side = right ? Left : Right;
            auto row = row_above(s);
            boundary(side(right ? row.front() : row.back(), rot, in_side));
            std::vector<int> over{across(side(right ? row.back() : row.front(), rot, out_side))};
            for (int x = 1; x <= m; ++x) over.push_back(across(side(over.back(), rot, out_side)));
            boundary(side(over.back(), rot, out_side));
            int a1 = static_cast<int>(v.find('u')) + 1;  // 0 when there is no up ray
            int last_open = a1 == 0 ? m + 1 : a1;
            for (int x = 0; x < last_open; ++x) {
                boundary(side(over[x], rot, Bottom));
                out.revealed.push_back(side(over[x], rot, Bottom));
            }
            OpenSide top{{}, {}, rot};
            if (right) {
                for (int c : row) top.tops.push_back(side(c, rot, Top));
                for (int c : over) top.tops.push_back(side(c, rot, Top));
                top.types = s.types + 'E' + map_word(v, 'E', 'S');
            } else {
                for (int x = m; x >= 0; --x) top.tops.push_back(side(over[x], rot, Top));
                for (int c : row) top.tops.push_back(side(c, rot, Top));
                std::string near_far = map_word(v, 'E', 'S');
                top.types = std::string(near_far.rbegin(), near_far.rend()) + 'E' + s.types;
            }
            OpenSide bottom{{}, {}, (rot + 2) % 4};
            if (a1 > 0) {
                std::vector<int> hang(m + 1, -1);
                for (int x = a1; x <= m; ++x) hang[x] = across(side(over[x], rot, Bottom));
                for (int x = a1; x < m; ++x) link(side(hang[x], rot, out_side), side(hang[x + 1], rot, in_side));
                boundary(side(hang[a1], rot, in_side));
                boundary(side(hang[m], rot, out_side));
                // the bottom side read left to right in its own (half-turned) frame
                if (right) {
                    for (int x = m; x >= a1; --x) bottom.tops.push_back(side(hang[x], rot, Bottom));
                    for (int x = m; x > a1; --x) bottom.types += v[x - 1] == 'u' ? 'S' : 'E';
                } else {
                    for (int x = a1; x <= m; ++x) bottom.tops.push_back(side(hang[x], rot, Bottom));
                    for (int x = a1; x < m; ++x) bottom.types += v[x] == 'u' ? 'S' : 'E';
                }
            }
            if (right) {
                if (a1 > 0) out.fresh.push_back(std::move(bottom));
                out.fresh.push_back(std::move(top));
            } else {
                out.fresh.push_back(std::move(top));
                if (a1 > 0) out.fresh.push_back(std::move(bottom));
            }
            break;
        }
        }
        return out;
    }

private:
    CellComplex& cc_;
    bool build_;
    std::vector<char> seen_;
};

Step detect(const RigidQuad& r, const OpenSide& s)
{
    const auto& nb = r.complex().nb;
    const int rot = s.rot;
    std::vector<char> missing;
    for (int t : s.tops) missing.push_back(nb[t] < 0);
    if (std::any_of(missing.begin(), missing.end(), [](char m) { return m != 0; })) {
        int groups = 0, notch = -1;
        for (std::size_t i = 0; i < s.tops.size(); ++i) {
            bool starts = i == 0 || s.types[i - 1] == 'S';
            if (starts) {
                ++groups;
                if (missing[i]) {
                    if (notch >= 0) malformed(s.tops[i], "two notches above one side");
                    notch = groups - 1;
                }
            } else if (missing[i] != missing[i - 1]) {
                malformed(s.tops[i], "notch does not end at a ray");
            }
        }
        return make_G(notch, groups - 1 - notch);
    }
    int first = nb[s.tops.front()] / 4, last = nb[s.tops.back()] / 4;
    bool ext_right = nb[side(last, rot, Right)] >= 0, ext_left = nb[side(first, rot, Left)] >= 0;
    if (ext_right == ext_left) malformed(s.tops.front(), "row above the side extends on both or neither end");
    std::string v;
    int c = nb[side(ext_right ? last : first, rot, ext_right ? Right : Left)] / 4;
    for (int guard = 0; guard <= r.cells(); ++guard) {
        int d = side(c, rot, ext_right ? Right : Left);
        if (nb[d] < 0) break;
        // the right dart points up in the local frame, the left one down
        v += (r.orientation(d) > 0) == ext_right ? 'u' : 'd';
        c = nb[d] / 4;
    }
    if (ext_right) return make_R(v);
    return make_L(std::string(v.rbegin(), v.rend()));
}

std::string observed_types(const RigidQuad& r, const OpenSide& s)
{
    std::string types;
    const auto& nb = r.complex().nb;
    for (std::size_t i = 0; i + 1 < s.tops.size(); ++i) {
        int d = side(s.tops[i] / 4, s.rot, Right);
        if (nb[d] != side(s.tops[i + 1] / 4, s.rot, Left)) malformed(s.tops[i], "open side is not a row");
        types += r.orientation(d) > 0 ? 'E' : 'S';
    }
    return types;
}

OpenSide base_side(const std::vector<int>& row)
{
    OpenSide s;
    for (int c : row) s.tops.push_back(side(c, 0, Top));
    s.types.assign(row.size() - 1, 'S');
    return s;
}

// Cells along the base, left to right.
std::vector<int> base_row(const RigidQuad& r)
{
    auto sig = base_signature(r);
    if (sig.size() != 1) malformed(r.root_vertex(), "base is not 1-fold");
    const CellComplex& cc = r.complex();
    const auto& nb = cc.nb;
    std::vector<int> row{cc.root_cell};
    while (nb[side(row.back(), 0, Left)] >= 0) row.push_back(nb[side(row.back(), 0, Left)] / 4);
    if (static_cast<int>(row.size()) != sig[0]) malformed(cc.root_cell, "base row does not match the base");
    std::reverse(row.begin(), row.end());
    return row;
}

}  // namespace

Step detect_step_rigid(const RigidQuad& r)
{
    return detect(r, base_side(base_row(r)));
}

RigidExploration explore_rigid_detailed(const RigidQuad& r)
{
    CellComplex cc = r.complex();
    std::vector<int> row = base_row(r);

    RigidExploration out;
    out.trace.base = static_cast<int>(row.size());
    for (auto it = row.rbegin(); it != row.rend(); ++it) out.base.push_back(side(*it, 0, Bottom));
    Gluer g(cc, false);
    for (int c : row) g.mark(c);
    std::deque<OpenSide> frontier{base_side(row)};
    while (!frontier.empty()) {
        OpenSide s = std::move(frontier.front());
        frontier.pop_front();
        if (observed_types(r, s) != s.types) malformed(s.tops[0], "ray types disagree with the orientation");
        Step st = detect(r, s);
        Piece p = g.apply(s, st);
        out.trace.steps.push_back(st);
        out.revealed.push_back(std::move(p.revealed));
        frontier.insert(frontier.begin(), p.fresh.begin(), p.fresh.end());
        if (static_cast<int>(out.trace.steps.size()) > r.cells() + 1) malformed(0, "exploration does not terminate");
    }
    if (!g.all_seen()) malformed(0, "cells not reached by the exploration");
    return out;
}

Trace explore_rigid(const RigidQuad& r)
{
    return explore_rigid_detailed(r).trace;
}

RigidQuad assemble_rigid(const Trace& t)
{
    check_trace(t);
    CellComplex cc;
    std::vector<int> row;
    for (int i = 0; i < t.base; ++i) {
        row.push_back(cc.add_cell());
        if (i > 0) cc.glue(side(row[i - 1], 0, Right), side(row[i], 0, Left));
    }
    cc.root_cell = row.back();
    Gluer g(cc, true);
    std::deque<OpenSide> frontier{base_side(row)};
    for (const auto& st : t.steps) {
        OpenSide s = std::move(frontier.front());
        frontier.pop_front();
        Piece p = g.apply(s, st);
        frontier.insert(frontier.begin(), p.fresh.begin(), p.fresh.end());
    }
    return RigidQuad(std::move(cc));
}

}  // namespace rq
