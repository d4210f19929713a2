#include "rq/colorful.hpp"

#include <cstdlib>

namespace rq {

namespace {

[[noreturn]] void fail(ColorfulError::Kind k, int element, const std::string& what)
{
    throw ColorfulError(k, element, std::string(to_string(k)) + "(" + std::to_string(element) + "): " + what);
}

bool colorful_face(const std::vector<int>& l)
{
    if (l.size() != 4) return false;
    for (int i = 0; i < 4; ++i)
        if (std::abs(l[i] - l[(i + 1) % 4]) != 1) return false;
    return (l[0] == l[2]) != (l[1] == l[3]);
}

}  // namespace

const char* to_string(ColorfulError::Kind k)
{
    switch (k) {
    case ColorfulError::Kind::BadEdgeLabels: return "BadEdgeLabels";
    case ColorfulError::Kind::BadFace: return "BadFace";
    case ColorfulError::Kind::BadRootLabels: return "BadRootLabels";
    case ColorfulError::Kind::WrongRootFace: return "WrongRootFace";
    case ColorfulError::Kind::NotInClass: return "NotInClass";
    case ColorfulError::Kind::LabelClash: return "LabelClash";
    case ColorfulError::Kind::Malformed: return "MalformedState";
    }
    return "ColorfulError";
}

ColorfulQuad::ColorfulQuad(PlanarMap m, std::vector<int> labels, ColorfulKind kind)
    : map_(std::move(m)), labels_(std::move(labels)), kind_(kind)
{
    try {
        map_.check();
    } catch (const MapError& e) {
        fail(ColorfulError::Kind::Malformed, 0, e.what());
    }
    idx_ = index_map(map_);
    fn_ = map_.face_next();
    if (static_cast<int>(labels_.size()) != idx_.vertices())
        fail(ColorfulError::Kind::Malformed, 0,
             std::to_string(labels_.size()) + " labels for " + std::to_string(idx_.vertices()) + " vertices");
    for (int d = 0; d < darts(); ++d)
        if (std::abs(dart_label(d) - dart_label(twin(d))) != 1)
            fail(ColorfulError::Kind::BadEdgeLabels, d, "edge labels must differ by one");
    if (dart_label(root()) != 1 || head(root()) < 0 || label(head(root())) != 0)
        fail(ColorfulError::Kind::BadRootLabels, root(), "root must point from label 1 to label 0");
    int outer = boundary_face();
    for (int f = 0; f < faces(); ++f) {
        if (f == outer) continue;
        std::vector<int> l;
        for (int d : idx_.face_darts[f]) l.push_back(dart_label(d));
        if (!colorful_face(l)) fail(ColorfulError::Kind::BadFace, f, "face labels are not (r-1,r,r+1,r)");
    }
}

ColorfulQuad ColorfulQuad::from_dart_labels(PlanarMap m, const std::vector<int>& dart_labels, ColorfulKind kind)
{
    if (dart_labels.size() != m.twin.size()) fail(ColorfulError::Kind::Malformed, 0, "dart label count");
    std::vector<int> labels;
    std::vector<int> seen(m.twin.size(), 0);
    for (int d = 0; d < m.darts(); ++d) {
        if (seen[d]) continue;
        for (int e = d; !seen[e]; e = m.next[e]) {
            seen[e] = 1;
            if (dart_labels[e] != dart_labels[d])
                fail(ColorfulError::Kind::LabelClash, e, "darts around one vertex carry different labels");
        }
        labels.push_back(dart_labels[d]);
    }
    return ColorfulQuad(std::move(m), std::move(labels), kind);
}

int ColorfulQuad::boundary_face() const
{
    return kind_ == ColorfulKind::Disk ? idx_.face[root()] : -1;
}

std::vector<int> ColorfulQuad::boundary_labels() const
{
    std::vector<int> out;
    if (kind_ != ColorfulKind::Disk) return out;
    int d = root();
    do {
        d = fn_[d];
        out.push_back(dart_label(d));
    } while (d != root());
    return out;
}

std::vector<int> ColorfulQuad::inner_faces() const
{
    std::vector<int> out;
    for (int f = 0; f < faces(); ++f)
        if (f != boundary_face()) out.push_back(f);
    return out;
}

bool ColorfulQuad::in_class() const
{
    if (kind_ != ColorfulKind::Sphere) return false;
    int d = twin(root());
    for (int want : {0, 1, 2, 1}) {
        if (dart_label(d) != want) return false;
        d = fn_[d];
    }
    return d == twin(root());
}

ColorfulQuad validate_colorful(const PlanarMap& m, const std::vector<int>& labels, ColorfulKind kind)
{
    return ColorfulQuad(m, labels, kind);
}

ColorfulQuad relabel(const ColorfulQuad& q)
{
    if (!q.in_class()) fail(ColorfulError::Kind::WrongRootFace, q.root(), "face right of the root is not (0,1,2,1)");
    PlanarMap m = q.map();
    int g0 = q.twin(q.root());
    m.root = q.twin(q.face_next(q.face_next(g0)));
    std::vector<int> labels = q.labels();
    for (int& l : labels) l = 2 - l;
    return ColorfulQuad(std::move(m), std::move(labels), q.kind());
}

std::vector<int> canonical_code(const ColorfulQuad& q)
{
    auto perm = canonical_order(q.map());
    PlanarMap m = relabel_darts(q.map(), perm);
    std::vector<int> inv(perm.size());
    for (std::size_t d = 0; d < perm.size(); ++d) inv[perm[d]] = static_cast<int>(d);
    std::vector<int> code;
    code.reserve(3 * m.darts() + 1);
    code.push_back(static_cast<int>(q.kind()));
    for (int d = 0; d < m.darts(); ++d) {
        code.push_back(m.twin[d]);
        code.push_back(m.next[d]);
        code.push_back(q.dart_label(inv[d]));
    }
    return code;
}

bool same_colorful(const ColorfulQuad& a, const ColorfulQuad& b)
{
    return canonical_code(a) == canonical_code(b);
}

ColorfulQuad three_vertex_sphere()
{
    // darts 0: 1->0, 1: 0->1, 2: 1->2, 3: 2->1
    PlanarMap m;
    m.twin = {1, 0, 3, 2};
    m.next = {2, 1, 0, 3};
    m.root = 0;
    return ColorfulQuad::from_dart_labels(std::move(m), {1, 0, 1, 2}, ColorfulKind::Sphere);
}

}  // namespace rq
