#include "rq/exploration.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace rq {

namespace {

[[noreturn]] void malformed(int element, const std::string& what)
{
    throw ColorfulError(ColorfulError::Kind::Malformed, element, "MalformedState: " + what);
}

// A hole: darts with the hole on their right, each starting where the previous one ends
// when read backwards; hole[0] is the marked edge.
using Hole = std::vector<int>;

struct DartState {
    std::vector<int> phi, twin, lab;
};

class Peeler {
public:
    Peeler(DartState& s, bool build) : s_(s), build_(build), seen_(s.phi.size(), 0) {}

    int across(int x)
    {
        if (build_) {
            int y = static_cast<int>(s_.phi.size());
            for (int i = 0; i < 4; ++i) {
                s_.phi.push_back(y + (i + 1) % 4);
                s_.twin.push_back(-1);
                s_.lab.push_back(0);
            }
            link(x, y);
            return y;
        }
        int y = s_.twin[x];
        int d = y;
        for (int i = 0; i < 4; ++i, d = s_.phi[d])
            if (seen_[d]++) malformed(d, "face explored twice");
        if (d != y) malformed(y, "face of degree other than 4");
        return y;
    }

    void label(int d, int l)
    {
        if (build_) s_.lab[d] = l;
        else if (s_.lab[d] != l) malformed(d, "unexpected label " + std::to_string(s_.lab[d]));
    }

    void face_labels(int y, std::initializer_list<int> ls)
    {
        for (int l : ls) {
            label(y, l);
            y = s_.phi[y];
        }
    }

    void link(int a, int b)
    {
        if (build_) {
            if (s_.twin[a] >= 0 || s_.twin[b] >= 0) malformed(a, "edge glued twice");
            s_.twin[a] = b;
            s_.twin[b] = a;
        } else if (s_.twin[a] != b) {
            malformed(a, "expected darts " + std::to_string(a) + " and " + std::to_string(b) + " to be glued");
        }
    }

    void mark(int d) { seen_[d] = 1; }
    bool all_seen() const { return std::all_of(seen_.begin(), seen_.end(), [](char c) { return c != 0; }); }

    int phi(int d, int k = 1) const
    {
        while (k--) d = s_.phi[d];
        return d;
    }

    std::vector<Hole> apply(const Hole& h, const Step& st)
    {
        const int r = s_.lab[h[0]] - 1;
        std::vector<Hole> out;
        if (st.kind == StepKind::G) {
            const int k = st.left;
            link(h[0], h[2 * k + 1]);
            if (st.right > 0) out.emplace_back(h.begin() + 2 * k + 2, h.end());
            if (k > 0) {
                Hole h2{h[2 * k]};
                h2.insert(h2.end(), h.begin() + 1, h.begin() + 2 * k);
                out.push_back(std::move(h2));
            }
            return out;
        }
        const bool right = st.kind == StepKind::R;
        const std::string& strip = st.word;
        // f: the face at the root; the strip leaves it across `start` and comes back across `back`
        int f = across(h[0]);
        if (right) face_labels(f, {r, r + 1, r, r - 1});
        else face_labels(f, {r, r + 1, r + 2, r + 1});
        int start = right ? phi(f, 3) : phi(f, 2);
        int back = right ? phi(f, 2) : phi(f, 1);
        int o = right ? r : r + 1;  // outer strip label; inner is o-1 for R and o+1 for L
        int in = right ? r - 1 : r + 2, far = right ? r - 2 : r + 3, outside = right ? r + 1 : r;
        std::vector<int> downs, ups;
        int prev = start;
        for (char c : strip) {
            int d = across(prev);
            if (c == 'd') {
                face_labels(d, {o, in, o, outside});
                downs.push_back(d);
                prev = phi(d);
            } else {
                face_labels(d, {o, in, far, in});
                ups.push_back(d);
                prev = phi(d, 3);
            }
        }
        link(prev, back);
        Hole exterior, inner;
        std::vector<int> ring;
        for (int d : downs) {
            ring.push_back(phi(d, 3));
            ring.push_back(phi(d, 2));
        }
        const int nu = static_cast<int>(ups.size());
        if (right) {
            exterior.push_back(phi(f, 1));
            exterior.insert(exterior.end(), h.begin() + 1, h.end());
            exterior.insert(exterior.end(), ring.begin(), ring.end());
            if (nu > 0) {
                inner.push_back(phi(ups[0]));
                for (int i = nu - 1; i >= 1; --i) {
                    inner.push_back(phi(ups[i], 2));
                    inner.push_back(phi(ups[i]));
                }
                inner.push_back(phi(ups[0], 2));
                out.push_back(std::move(inner));
            }
            out.push_back(std::move(exterior));
        } else {
            exterior.push_back(phi(f, 3));
            exterior.insert(exterior.end(), ring.begin(), ring.end());
            exterior.insert(exterior.end(), h.begin() + 1, h.end());
            out.push_back(std::move(exterior));
            if (nu > 0) {
                for (int i = nu - 1; i >= 0; --i) {
                    inner.push_back(phi(ups[i], 2));
                    inner.push_back(phi(ups[i]));
                }
                out.push_back(std::move(inner));
            }
        }
        return out;
    }

    Step detect(const Hole& h) const
    {
        const int r = s_.lab[h[0]] - 1;
        const int c = s_.twin[h[0]];
        for (std::size_t j = 1; j < h.size(); ++j)
            if (h[j] == c) {
                if (j % 2 == 0) malformed(c, "root edge glued to an even hole edge");
                int k = static_cast<int>(j - 1) / 2;
                return make_G(k, static_cast<int>(h.size()) / 2 - k - 1);
            }
        int a = s_.lab[phi(c, 3)];
        bool right;
        if (a == r - 1) right = true;
        else if (a == r + 1) right = false;
        else malformed(c, "face at the root has labels outside r-1..r+2");
        int prev = right ? phi(c, 3) : phi(c, 2);
        int back = right ? phi(c, 2) : phi(c, 1);
        std::string strip;
        for (std::size_t guard = 0; s_.twin[prev] != back; ++guard) {
            if (guard > s_.phi.size()) malformed(c, "strip does not close");
            int d = s_.twin[prev];
            bool down = s_.lab[phi(d, 2)] == s_.lab[d];
            strip += down ? 'd' : 'u';
            prev = down ? phi(d) : phi(d, 3);
        }
        return right ? make_R(strip) : make_L(strip);
    }

private:
    DartState& s_;
    bool build_;
    std::vector<char> seen_;
};

Hole initial_hole(int p)
{
    Hole h;
    for (int j = 0; j < 2 * p; ++j) h.push_back(j);
    return h;
}

std::pair<DartState, Hole> peel_state(const ColorfulQuad& q)
{
    if (q.kind() != ColorfulKind::Disk) throw ColorfulError(ColorfulError::Kind::NotInClass, q.root(), "NotInClass: peeling needs a disk");
    DartState s;
    s.twin = q.map().twin;
    for (int d = 0; d < q.darts(); ++d) {
        s.phi.push_back(q.face_next(d));
        s.lab.push_back(q.dart_label(d));
    }
    // boundary darts t_j with phi(t_j) = t_{j-1}
    std::vector<int> prev_of(q.darts());
    for (int d = 0; d < q.darts(); ++d) prev_of[s.phi[d]] = d;
    Hole t{q.root()};
    for (int d = prev_of[q.root()]; d != q.root(); d = prev_of[d]) t.push_back(d);
    for (std::size_t j = 0; j < t.size(); ++j)
        if (s.lab[t[j]] != (j % 2 == 0 ? 1 : 0))
            throw ColorfulError(ColorfulError::Kind::NotInClass, t[j], "NotInClass: boundary labels are not 1,0,1,0,...");
    return {s, t};
}

}  // namespace

Step detect_step_colorful(const ColorfulQuad& q)
{
    auto [s, t] = peel_state(q);
    Peeler pl(s, false);
    for (int d : t) pl.mark(d);
    return pl.detect(t);
}

Trace peel(const ColorfulQuad& q)
{
    auto [s, t] = peel_state(q);
    Trace out;
    out.base = static_cast<int>(t.size()) / 2;
    Peeler pl(s, false);
    for (int d : t) pl.mark(d);
    std::deque<Hole> holes{t};
    while (!holes.empty()) {
        Hole h = std::move(holes.front());
        holes.pop_front();
        Step st = pl.detect(h);
        auto fresh = pl.apply(h, st);
        out.steps.push_back(st);
        holes.insert(holes.begin(), fresh.begin(), fresh.end());
        if (static_cast<int>(out.steps.size()) > q.darts()) malformed(0, "peeling does not terminate");
    }
    if (!pl.all_seen()) malformed(0, "faces not reached by the peeling");
    return out;
}

ColorfulQuad assemble_colorful(const Trace& t)
{
    check_trace(t);
    DartState s;
    const int n = 2 * t.base;
    for (int j = 0; j < n; ++j) {
        s.phi.push_back((j + n - 1) % n);
        s.twin.push_back(-1);
        s.lab.push_back(j % 2 == 0 ? 1 : 0);
    }
    Peeler pl(s, true);
    std::deque<Hole> holes{initial_hole(t.base)};
    for (const auto& st : t.steps) {
        Hole h = std::move(holes.front());
        holes.pop_front();
        auto fresh = pl.apply(h, st);
        holes.insert(holes.begin(), fresh.begin(), fresh.end());
    }
    PlanarMap m;
    m.twin = s.twin;
    m.next = next_from_faces(s.twin, s.phi);
    m.root = 0;
    return ColorfulQuad::from_dart_labels(std::move(m), s.lab, ColorfulKind::Disk);
}

}  // namespace rq
