#include "rq/bijection.hpp"
#include "rq/exploration.hpp"
#include "rq/geometry.hpp"
#include "rq/io.hpp"
#include "rq/oracle.hpp"
#include "rq/sampler.hpp"
#include "rq/series.hpp"
#include "rq/statistics.hpp"
#include "rq/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using namespace rq;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json error_json(const std::exception& e)
{
    Json j;
    j["message"] = e.what();
    if (auto* r = dynamic_cast<const RigidError*>(&e))
        j["error"] = std::string("rigid.") + to_string(r->kind), j["element"] = r->element;
    else if (auto* c = dynamic_cast<const ColorfulError*>(&e))
        j["error"] = std::string("colorful.") + to_string(c->kind), j["element"] = c->element;
    else if (auto* t = dynamic_cast<const TraceError*>(&e)) {
        const char* kinds[] = {"Parse", "IncompleteTrace", "FrontierMismatch"};
        j["error"] = std::string("trace.") + kinds[static_cast<int>(t->kind)], j["step"] = t->step;
    } else if (dynamic_cast<const SamplerError*>(&e))
        j["error"] = "sampler";
    else if (dynamic_cast<const GeometryError*>(&e))
        j["error"] = "geometry";
    else if (dynamic_cast<const StatisticsError*>(&e))
        j["error"] = "statistics";
    else if (dynamic_cast<const MapError*>(&e))
        j["error"] = "map";
    else if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const Json::exception*>(&e))
        j["error"] = "io";
    else
        j["error"] = "internal";
    return j;
}

std::uint64_t default_seed()
{
    const char* s = std::getenv("RQ_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 1;
}

int default_jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

const char* tangency_name(Tangency t)
{
    switch (t) {
    case Tangency::Left: return "left";
    case Tangency::Right: return "right";
    default: return "none";
    }
}

const char* extremum_name(Extremum e)
{
    switch (e) {
    case Extremum::Min: return "min";
    case Extremum::Max: return "max";
    default: return "neither";
    }
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw IoError("cannot write " + path);
    f << text;
}

// count

struct CountArgs {
    int n_max = 8;
    int oracle_max = 8;
    std::string format = "csv";
};

void run_count(const CountArgs& a)
{
    Series z = series_Z(a.n_max);
    Json rows = Json::array();
    if (a.format == "csv") std::cout << "n,series,oracle\n";
    for (int n = 3; n <= a.n_max; ++n) {
        long oracle = -1;
        if (n <= a.oracle_max) {
            oracle = 0;
            for_each_trace(1, n - 1, [&](const Trace& t) { oracle += t.steps.front().kind == StepKind::L; });
        }
        std::string value = to_string(z[n]);
        if (a.format == "json") {
            Json row = {{"n", n}, {"series", value}};
            row["oracle"] = oracle >= 0 ? Json(oracle) : Json(nullptr);
            rows.push_back(row);
        } else {
            std::cout << n << ',' << value << ',' << (oracle >= 0 ? std::to_string(oracle) : "") << '\n';
        }
    }
    if (a.format == "json") std::cout << rows.dump(2) << '\n';
}

// series

struct SeriesArgs {
    std::string which = "Z";
    int order = 10;
    int p = 1;
    int q = 1;
    std::string format = "csv";
};

void run_series(const SeriesArgs& a)
{
    Series s;
    if (a.which == "R") s = solve_R(a.order);
    else if (a.which == "Z") s = series_Z(a.order);
    else if (a.which == "P") s = series_P(a.order, a.p)[a.p];
    else if (a.which == "B") s = series_B(a.order, a.q, a.p).xy_coeff(a.q, a.p);
    else if (a.which == "C") s = series_C(a.order, a.q, a.p).xy_coeff(a.q, a.p);
    else if (a.which == "E") s = series_E(a.order, a.q, a.p).xy_coeff(a.q, a.p);
    else s = series_H(a.p, a.q, a.order);
    if (a.format == "json") {
        Json c = Json::array();
        for (int k = 0; k <= s.order(); ++k) c.push_back(to_string(s[k]));
        Json out = {{"which", a.which}, {"order", a.order}, {"coefficients", c}};
        if (a.which != "R" && a.which != "Z") out["p"] = a.p;
        if (a.which != "R" && a.which != "Z" && a.which != "P") out["q"] = a.q;
        std::cout << out.dump(2) << '\n';
        return;
    }
    std::cout << "k,coefficient\n";
    for (int k = 0; k <= s.order(); ++k) std::cout << k << ',' << to_string(s[k]) << '\n';
}

// sample

struct SampleArgs {
    int n = 0;
    int base = 0;
    int weight = 0;
    int count = 1;
    std::uint64_t seed = 1;
    std::string format = "json";
    int jobs = 1;
};

void run_sample(const SampleArgs& a)
{
    bool rooted = a.n > 0;
    if (rooted == (a.base > 0)) throw UsageError("give either --n or --base with --weight");
    if (!rooted && a.weight < 1) throw UsageError("--base needs --weight");
    if (a.format == "svg" && a.count != 1) throw UsageError("svg output takes --count 1");
    RigidSampler sampler(rooted ? a.n + 2 : a.base + a.weight);
    std::vector<Trace> traces(a.count);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto worker = [&] {
        for (int i = next++; i < a.count; i = next++) {
            try {
                Rng rng = stream_rng(a.seed, static_cast<std::uint64_t>(i));
                traces[i] = rooted ? sampler.sample_rooted_trace(a.n, rng) : sampler.sample_trace(a.base, a.weight, rng);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::min(a.jobs, a.count); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    auto object = [&](const Trace& t) {
        RigidQuad r = assemble_rigid(t);
        return rooted ? unexpand(r) : r;
    };
    if (a.format == "trace") {
        for (const Trace& t : traces) std::cout << to_string(t) << '\n';
    } else if (a.format == "svg") {
        RigidQuad r = object(traces[0]);
        std::cout << render_svg(immerse(r, unit_widths(r)));
    } else if (a.count == 1) {
        std::cout << to_json(object(traces[0])).dump(2) << '\n';
    } else {
        Json arr = Json::array();
        for (const Trace& t : traces) arr.push_back(to_json(object(t)));
        std::cout << arr.dump(2) << '\n';
    }
}

// map

struct MapArgs {
    std::string direction = "forward";
    std::string input = "-";
};

void run_map(const MapArgs& a)
{
    Json in = read_json(a.input);
    Json out;
    if (a.direction == "forward") out = to_json(psi(rigid_from_json(in)));
    else if (a.direction == "inverse") out = to_json(psi_inverse(colorful_from_json(in)));
    else if (a.direction == "boundary") out = to_json(psi_b(rigid_from_json(in)));
    else if (a.direction == "boundary-inverse") out = to_json(psi_b_inverse(colorful_from_json(in)));
    else if (a.direction == "base") out = to_json(psi_p(rigid_from_json(in)));
    else out = to_json(psi_p_inverse(colorful_from_json(in)));
    std::cout << out.dump(2) << '\n';
}

// stats

Json rigid_stats(const RigidQuad& r)
{
    Json j;
    j["kind"] = "rigid";
    j["size"] = r.size();
    j["cells"] = r.cells();
    j["rows"] = r.rows();
    j["columns"] = r.columns();
    j["base_signature"] = base_signature(r);
    j["fighting_fish"] = is_fighting_fish(r);
    Json turning = Json::array();
    for (const auto& t : turning_numbers(r)) turning.push_back({{"vertex", t.vertex}, {"value", t.value}});
    j["turning_numbers"] = turning;
    SideClassification sc = classify_sides(r);
    Json sides = Json::array();
    for (const BoundarySide& s : sc.sides)
        sides.push_back({{"length", s.darts.size()},
                         {"horizontal", s.horizontal},
                         {"tangency", tangency_name(s.tangency)},
                         {"near", s.near},
                         {"far", s.far},
                         {"extension", s.tangency == Tangency::None ? Json(nullptr) : Json(side_extension(r, s).length)}});
    j["sides"] = sides;
    Json corners = Json::array();
    for (const CornerClass& c : sc.corners)
        corners.push_back({{"vertex", c.vertex}, {"tangency", tangency_name(c.tangency)}, {"degree", c.degree}});
    j["corners"] = corners;
    Json dict = Json::array();
    for (const DictionaryRow& row : dictionary_report(r))
        dict.push_back({{"name", row.name}, {"rigid", row.rigid}, {"colorful", row.colorful}, {"holds", row.holds}});
    j["dictionary"] = dict;
    return j;
}

Json colorful_stats(const ColorfulQuad& q)
{
    Json j;
    j["kind"] = q.kind() == ColorfulKind::Sphere ? "sphere" : "disk";
    j["vertices"] = q.vertices();
    j["faces"] = q.faces();
    auto [lo, hi] = std::minmax_element(q.labels().begin(), q.labels().end());
    j["labels"] = {*lo, *hi};
    if (q.kind() == ColorfulKind::Disk) {
        j["boundary_labels"] = q.boundary_labels();
        try {
            j["signature"] = signature_of_walk(q.boundary_labels());
        } catch (const ColorfulError&) {
            j["signature"] = nullptr;
        }
        return j;
    }
    j["in_class"] = q.in_class();
    Json lines = Json::array();
    for (const LevelLine& l : level_lines(q))
        lines.push_back({{"labels", {l.low, l.low + 1}},
                         {"direction", l.direction == LineDirection::Increasing ? "increasing" : "decreasing"},
                         {"length", l.length},
                         {"nesting_depth", l.nesting_depth}});
    j["level_lines"] = lines;
    Json ext = Json::array();
    for (const VertexExtremum& e : local_extrema(q))
        if (e.kind != Extremum::Neither)
            ext.push_back({{"vertex", e.vertex}, {"kind", extremum_name(e.kind)}, {"degree", e.degree}});
    j["extrema"] = ext;
    return j;
}

void run_stats(const std::string& input)
{
    AnyObject obj = object_from_json(read_json(input));
    Json out = std::holds_alternative<RigidQuad>(obj) ? rigid_stats(std::get<RigidQuad>(obj))
                                                      : colorful_stats(std::get<ColorfulQuad>(obj));
    std::cout << out.dump(2) << '\n';
}

// render

struct RenderArgs {
    std::string input = "-";
    std::string widths = "unit";
    std::uint64_t seed = 1;
    std::string out = "-";
    double scale = 24.0;
    double opacity = 0.3;
};

void run_render(const RenderArgs& a)
{
    RigidQuad r = rigid_from_json(read_json(a.input));
    WidthAssignment<double> w;
    if (a.widths == "unit") {
        w = unit_widths(r);
    } else if (a.widths.rfind("simplex:", 0) == 0) {
        double total = 0;
        try {
            total = std::stod(a.widths.substr(8));
        } catch (const std::exception&) {
            throw UsageError("--widths simplex:L needs a number L");
        }
        Rng rng = stream_rng(a.seed, 0);
        w = simplex_widths(r, total, rng);
    } else {
        throw UsageError("--widths is unit or simplex:L");
    }
    SvgStyle style;
    style.scale = a.scale;
    style.opacity = a.opacity;
    write_text(a.out, render_svg(immerse(r, w), style));
}

int run_verify(bool quick, int jobs, std::uint64_t seed, const std::string& format)
{
    VerifyOptions opts;
    opts.quick = quick;
    opts.jobs = jobs;
    opts.seed = seed;
    bool json = format == "json";
    auto results = run_acceptance(opts, [&](const CriterionResult& r) {
        if (!json) std::cout << format_result(r) << std::endl;
    });
    bool ok = acceptance_ok(results);
    if (json) {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back({{"criterion", r.id},
                           {"title", r.title},
                           {"pass", r.pass},
                           {"known_unattainable", r.known_unattainable},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
        std::cout << Json{{"ok", ok}, {"criteria", arr}}.dump(2) << '\n';
    } else {
        std::cout << (ok ? "acceptance: OK" : "acceptance: FAILED") << '\n';
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rigid quadrangulations and colorful labeled quadrangulations"};
    app.require_subcommand(1);
    std::uint64_t seed = default_seed();

    CountArgs count;
    auto* c = app.add_subcommand("count", "Number of rigid quadrangulations by size");
    c->add_option("--n-max", count.n_max, "Largest size")->check(CLI::Range(3, 200));
    c->add_option("--oracle-max", count.oracle_max, "Largest size for the enumeration column")->check(CLI::Range(3, 10));
    c->add_option("--format", count.format)->check(CLI::IsMember({"csv", "json"}));

    SeriesArgs series;
    auto* s = app.add_subcommand("series", "Coefficients of a generating function");
    s->add_option("--which", series.which)->check(CLI::IsMember({"R", "Z", "P", "B", "C", "E", "H"}));
    s->add_option("--order", series.order, "Truncation order in t")->check(CLI::Range(1, 400));
    s->add_option("--p", series.p, "Exponent of y, or right-spiraling rays for H")->check(CLI::Range(1, 64));
    s->add_option("--q", series.q, "Exponent of x, or left-spiraling rays for H")->check(CLI::Range(1, 64));
    s->add_option("--format", series.format)->check(CLI::IsMember({"csv", "json"}));

    SampleArgs sample;
    sample.seed = seed;
    sample.jobs = default_jobs();
    auto* sa = app.add_subcommand("sample", "Uniform random rigid quadrangulations");
    sa->add_option("--n", sample.n, "Size (non-root convex corners)")->check(CLI::Range(3, 2000));
    sa->add_option("--base", sample.base, "Base length, with --weight")->check(CLI::Range(1, 2000));
    sa->add_option("--weight", sample.weight, "One plus the number of exploration steps")->check(CLI::Range(1, 2000));
    sa->add_option("--count", sample.count)->check(CLI::Range(1, 10000000));
    sa->add_option("--seed", sample.seed, "Defaults to $RQ_SEED or 1");
    sa->add_option("--format", sample.format)->check(CLI::IsMember({"json", "trace", "svg"}));
    sa->add_option("--jobs", sample.jobs)->check(CLI::Range(1, 1024));

    MapArgs map;
    auto* m = app.add_subcommand("map", "Apply a bijection to a JSON object");
    m->add_option("--direction", map.direction)
        ->check(CLI::IsMember({"forward", "inverse", "boundary", "boundary-inverse", "base", "base-inverse"}));
    m->add_option("--input", map.input, "JSON file or - for stdin");

    std::string stats_input = "-";
    auto* st = app.add_subcommand("stats", "Statistics of a rigid or colorful object");
    st->add_option("--input", stats_input, "JSON file or - for stdin");

    RenderArgs render;
    render.seed = seed;
    auto* re = app.add_subcommand("render", "SVG of the immersion of a rigid quadrangulation");
    re->add_option("--input", render.input, "JSON file or - for stdin");
    re->add_option("--widths", render.widths, "unit or simplex:L");
    re->add_option("--seed", render.seed, "Defaults to $RQ_SEED or 1");
    re->add_option("--out", render.out, "Output file or - for stdout");
    re->add_option("--scale", render.scale)->check(CLI::PositiveNumber);
    re->add_option("--opacity", render.opacity)->check(CLI::Range(0.0, 1.0));

    bool quick = false;
    int jobs = default_jobs();
    std::uint64_t verify_seed = 20240601;
    std::string verify_format = "text";
    auto* v = app.add_subcommand("verify", "Run the acceptance criteria");
    v->add_flag("--quick", quick, "Smaller samples");
    v->add_option("--jobs", jobs)->check(CLI::Range(1, 1024));
    v->add_option("--seed", verify_seed);
    v->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c->parsed()) run_count(count);
        else if (s->parsed()) run_series(series);
        else if (sa->parsed()) run_sample(sample);
        else if (m->parsed()) run_map(map);
        else if (st->parsed()) run_stats(stats_input);
        else if (re->parsed()) run_render(render);
        else return run_verify(quick, jobs, verify_seed, verify_format);
    } catch (const UsageError& e) {
        std::cerr << app.get_name() << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_json(e).dump() << '\n';
        return 1;
    }
    return 0;
}
