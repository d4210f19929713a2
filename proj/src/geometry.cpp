#include "rq/geometry.hpp"

#include "rq/bijection.hpp"
#include "rq/exploration.hpp"
#include "rq/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <numeric>
#include <sstream>

namespace rq {

namespace {

std::vector<int> components(const CellComplex& cc, int side, int& count)
{
    const int n = cc.cells();
    std::vector<int> id(n, -1);
    count = 0;
    for (int c = 0; c < n; ++c) {
        if (id[c] >= 0) continue;
        std::vector<int> stack{c};
        id[c] = count;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int s : {side, (side + 2) % 4}) {
                int e = cc.nb[4 * x + s];
                if (e >= 0 && id[e / 4] < 0) {
                    id[e / 4] = count;
                    stack.push_back(e / 4);
                }
            }
        }
        ++count;
    }
    return id;
}

template <class T>
bool same(const T& a, const T& b)
{
    if constexpr (std::is_floating_point_v<T>)
        return std::abs(a - b) <= 1e-9 * std::max<T>(1, std::max(std::abs(a), std::abs(b)));
    else
        return a == b;
}

template <class T>
T absval(const T& x)
{
    return x < 0 ? T(-x) : x;
}

}  // namespace

Strips strips(const RigidQuad& r)
{
    Strips s;
    s.row = components(r.complex(), 1, s.rows);
    s.column = components(r.complex(), 0, s.columns);
    return s;
}

template <class T>
T WidthAssignment<T>::half_perimeter() const
{
    T sum = 0;
    for (const T& x : row) sum += x;
    for (const T& x : column) sum += x;
    return sum;
}

WidthAssignment<double> unit_widths(const RigidQuad& r)
{
    Strips s = strips(r);
    WidthAssignment<double> w;
    w.row.assign(s.rows, 1.0);
    w.column.assign(s.columns, 1.0);
    return w;
}

WidthAssignment<double> simplex_widths(const RigidQuad& r, double total, Rng& rng)
{
    if (!(total > 0))
        throw GeometryError(GeometryError::Kind::NonPositiveWidth, -1, "NonPositiveWidth: total must be positive");
    Strips s = strips(r);
    std::exponential_distribution<double> ex(1.0);
    std::vector<double> x(s.rows + s.columns);
    for (double& v : x) v = ex(rng);
    double sum = std::accumulate(x.begin(), x.end(), 0.0);
    WidthAssignment<double> w;
    w.mode = WidthAssignment<double>::Mode::Simplex;
    for (int i = 0; i < s.rows; ++i) w.row.push_back(x[i] / sum * total);
    for (int i = 0; i < s.columns; ++i) w.column.push_back(x[s.rows + i] / sum * total);
    return w;
}

template <class T>
WidthAssignment<T> given_widths(const RigidQuad& r, std::vector<T> row, std::vector<T> column)
{
    Strips s = strips(r);
    if (static_cast<int>(row.size()) != s.rows || static_cast<int>(column.size()) != s.columns)
        throw GeometryError(GeometryError::Kind::NonPositiveWidth, -1,
                            "NonPositiveWidth: expected " + std::to_string(s.rows) + " row and " +
                                std::to_string(s.columns) + " column widths");
    for (std::size_t i = 0; i < row.size(); ++i)
        if (!(row[i] > 0)) throw GeometryError(GeometryError::Kind::NonPositiveWidth, static_cast<int>(i), "NonPositiveWidth: row");
    for (std::size_t i = 0; i < column.size(); ++i)
        if (!(column[i] > 0))
            throw GeometryError(GeometryError::Kind::NonPositiveWidth, static_cast<int>(i), "NonPositiveWidth: column");
    WidthAssignment<T> w;
    w.mode = WidthAssignment<T>::Mode::Given;
    w.row = std::move(row);
    w.column = std::move(column);
    return w;
}

template <class T>
Immersion<T> immerse(const RigidQuad& r, const WidthAssignment<T>& w, Traversal order)
{
    const CellComplex& cc = r.complex();
    Strips s = strips(r);
    const int n = cc.cells();
    Immersion<T> imm;
    imm.cell.assign(n, {T(0), T(0), T(0), T(0)});
    std::vector<char> placed(n, 0), has(r.vertices(), 0);
    imm.vertex.assign(r.vertices(), {T(0), T(0)});
    auto put = [&](int c, const T& xmin, const T& ymin) {
        imm.cell[c] = {xmin, ymin, xmin + w.column[s.column[c]], ymin + w.row[s.row[c]]};
        placed[c] = 1;
    };
    const int root = cc.root_cell;
    put(root, T(-w.column[s.column[root]]), T(0));
    std::deque<int> todo{root};
    while (!todo.empty()) {
        int c;
        if (order == Traversal::Breadth) {
            c = todo.front();
            todo.pop_front();
        } else {
            c = todo.back();
            todo.pop_back();
        }
        const auto& b = imm.cell[c];
        for (int side = 0; side < 4; ++side) {
            int e = cc.nb[4 * c + side];
            if (e < 0 || placed[e / 4]) continue;
            int d = e / 4;
            T dw = w.column[s.column[d]], dh = w.row[s.row[d]];
            switch (side) {
            case 0: put(d, b[0], b[1] - dh); break;
            case 1: put(d, b[2], b[1]); break;
            case 2: put(d, b[0], b[3]); break;
            default: put(d, b[0] - dw, b[1]); break;
            }
            todo.push_back(d);
        }
    }
    for (int c = 0; c < n; ++c) {
        const auto& b = imm.cell[c];
        // dart 4c+s starts at corner s: bottom-left, bottom-right, top-right, top-left
        const std::array<std::array<T, 2>, 4> corner = {{{b[0], b[1]}, {b[2], b[1]}, {b[2], b[3]}, {b[0], b[3]}}};
        for (int k = 0; k < 4; ++k) {
            int v = r.origin(4 * c + k);
            if (!has[v]) {
                imm.vertex[v] = corner[k];
                has[v] = 1;
            } else if (!same(imm.vertex[v][0], corner[k][0]) || !same(imm.vertex[v][1], corner[k][1])) {
                throw GeometryError(GeometryError::Kind::InconsistentPlacement, v,
                                    "InconsistentPlacement: vertex " + std::to_string(v) + " gets two positions");
            }
        }
    }
    imm.box = imm.cell[root];
    for (const auto& b : imm.cell) {
        if (b[0] < imm.box[0]) imm.box[0] = b[0];
        if (b[1] < imm.box[1]) imm.box[1] = b[1];
        if (b[2] > imm.box[2]) imm.box[2] = b[2];
        if (b[3] > imm.box[3]) imm.box[3] = b[3];
    }
    return imm;
}

template <class T>
T boundary_length(const RigidQuad& r, const Immersion<T>& imm)
{
    T sum = 0;
    for (int o : r.boundary()) {
        const auto& a = imm.vertex[r.origin(o)];
        const auto& b = imm.vertex[r.head(o)];
        sum += absval(T(a[0] - b[0])) + absval(T(a[1] - b[1]));
    }
    return sum;
}

template struct WidthAssignment<double>;
template struct WidthAssignment<Rational>;
template WidthAssignment<double> given_widths(const RigidQuad&, std::vector<double>, std::vector<double>);
template WidthAssignment<Rational> given_widths(const RigidQuad&, std::vector<Rational>, std::vector<Rational>);
template Immersion<double> immerse(const RigidQuad&, const WidthAssignment<double>&, Traversal);
template Immersion<Rational> immerse(const RigidQuad&, const WidthAssignment<Rational>&, Traversal);
template double boundary_length(const RigidQuad&, const Immersion<double>&);
template Rational boundary_length(const RigidQuad&, const Immersion<Rational>&);

VolumeCheck volume_check(int n)
{
    VolumeCheck v;
    v.n = n;
    v.degree = 2 * n - 5;
    v.coefficient = 0;
    v.types = 0;
    v.dimensions_ok = true;
    auto factorial = [](long k) {
        Integer f = 1;
        for (long i = 2; i <= k; ++i) f *= i;
        return f;
    };
    const Integer top = factorial(2 * n - 5);
    for_each_trace(1, n - 1, [&](const Trace& t) {
        if (t.steps.front().kind != StepKind::L) return;
        RigidQuad r = unexpand(assemble_rigid(t));
        int k = r.rows() + r.columns();
        v.dimensions_ok = v.dimensions_ok && k == 2 * n - 4;
        v.coefficient += frac(top, factorial(k - 1));
        v.types += 1;
    });
    return v;
}

std::string render_svg(const Immersion<double>& imm, const SvgStyle& style)
{
    const double k = style.scale, pad = 0.5;
    const double x0 = imm.box[0] - pad, x1 = imm.box[2] + pad;
    const double y0 = imm.box[1] - pad, y1 = imm.box[3] + pad;
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", v);
        return std::string(buf);
    };
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num((x1 - x0) * k) << "\" height=\""
       << num((y1 - y0) * k) << "\" viewBox=\"" << num(x0 * k) << ' ' << num(-y1 * k) << ' ' << num((x1 - x0) * k)
       << ' ' << num((y1 - y0) * k) << "\">\n"
       << "<g fill=\"" << style.fill << "\" fill-opacity=\"" << num(style.opacity) << "\" stroke=\"" << style.stroke
       << "\" stroke-width=\"" << num(style.stroke_width) << "\">\n";
    for (const auto& b : imm.cell) {
        // y grows downwards in SVG
        os << "<path d=\"M" << num(b[0] * k) << ' ' << num(-b[1] * k) << "H" << num(b[2] * k) << "V" << num(-b[3] * k)
           << "H" << num(b[0] * k) << "Z\"/>\n";
    }
    os << "</g>\n";
    if (style.mark_root) os << "<circle cx=\"0\" cy=\"0\" r=\"" << num(0.12 * k) << "\" fill=\"#c0392b\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace rq
