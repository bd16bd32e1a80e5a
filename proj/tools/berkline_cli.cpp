// Command-line front end; talks to the library only through the C API.
//
// Exit codes: 0 success, 2 validation error, 3 exactness/precision failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "berkline/berkline.h"

namespace {

struct Failure {
    bk_status status;
    std::string message;
};

void check(bk_status s) {
    if (s != BK_OK) throw Failure{s, bk_last_error()};
}

int exit_code(bk_status s) {
    switch (s) {
    case BK_E_NON_SPLIT_FUNCTION:
    case BK_E_INCOMPLETE_ROOTS:
    case BK_E_NON_SPLIT_DERIVATIVE:
    case BK_E_CRITERION_FAILS:
    case BK_E_PRECISION_LOSS: return 3;
    default: return 2;
    }
}

template <class T, void (*Free)(T*)>
struct Handle {
    T* ptr = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(ptr); }
    T** out() { return &ptr; }
    operator T*() const { return ptr; }
};

using FieldH = Handle<bk_field, bk_field_free>;
using PointH = Handle<bk_point, bk_point_free>;
using DivisorH = Handle<bk_divisor, bk_divisor_free>;
using PolyH = Handle<bk_poly, bk_poly_free>;
using SkeletonH = Handle<bk_skeleton, bk_skeleton_free>;

std::string take(char* s) {
    std::string out(s ? s : "");
    bk_string_free(s);
    return out;
}

std::string point_json(const bk_point* x) {
    char* s = nullptr;
    check(bk_point_json(x, &s));
    return take(s);
}

struct Options {
    std::optional<unsigned long> p;
    bool tadic = false;
    std::string format;
    std::string divisor = "[\"inf\"]";
    std::string point;
    std::string points;
    std::string poly;
    std::string den;
    std::string roots;
    std::string center = "0";
    std::string time;
    std::string grid = "50x20";
    std::uint64_t seed = 1;
    long precision = 20;
    bool complete = false;
};

bk_format format_of(const Options& o, bk_format fallback) {
    if (o.format.empty()) return fallback;
    if (o.format == "json") return BK_FORMAT_JSON;
    if (o.format == "dot") return BK_FORMAT_DOT;
    return BK_FORMAT_TABLE;
}

void open_field(const Options& o, FieldH& f) {
    if (o.tadic == o.p.has_value()) throw Failure{BK_E_INVALID_ARGUMENT, "give exactly one of --p <prime> or --t"};
    if (o.tadic) check(bk_field_tadic(f.out()));
    else check(bk_field_padic(*o.p, f.out()));
}

void require(const std::string& value, const char* flag) {
    if (value.empty()) throw Failure{BK_E_INVALID_ARGUMENT, std::string("missing ") + flag};
}

const char* or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

std::string run_skeleton(const Options& o) {
    FieldH f;
    DivisorH d;
    SkeletonH s;
    open_field(o, f);
    check(bk_divisor_parse(f, o.divisor.c_str(), d.out()));
    check(bk_skeleton_hull(d, s.out()));
    char* out = nullptr;
    check(bk_skeleton_render(s, format_of(o, BK_FORMAT_DOT), &out));
    return take(out);
}

std::string run_retract(const Options& o) {
    FieldH f;
    DivisorH d;
    open_field(o, f);
    check(bk_divisor_parse(f, o.divisor.c_str(), d.out()));
    const std::string& list = o.points.empty() ? o.point : o.points;
    require(list, "--point or --points");
    char* out = nullptr;
    check(bk_retract_points(d, list.c_str(), or_null(o.time), format_of(o, BK_FORMAT_JSON), &out));
    return take(out);
}

std::string run_image(const Options& o) {
    FieldH f;
    PolyH phi, den;
    PointH x, y;
    open_field(o, f);
    require(o.poly, "--poly");
    require(o.point, "--point");
    check(bk_poly_parse(f, o.poly.c_str(), phi.out()));
    check(bk_point_parse(f, o.point.c_str(), x.out()));
    if (o.den.empty()) {
        check(bk_image(phi, x, y.out()));
    } else {
        check(bk_poly_parse(f, o.den.c_str(), den.out()));
        check(bk_image_rational(phi, den, x, y.out()));
    }
    return point_json(y) + "\n";
}

std::string run_preimage(const Options& o) {
    FieldH f;
    PolyH phi;
    PointH y;
    open_field(o, f);
    require(o.poly, "--poly");
    require(o.point, "--point");
    check(bk_poly_parse(f, o.poly.c_str(), phi.out()));
    check(bk_point_parse(f, o.point.c_str(), y.out()));
    char* out = nullptr;
    check(bk_preimage(phi, y, or_null(o.roots), &out));
    return take(out);
}

std::string run_fibers(const Options& o) {
    FieldH f;
    PolyH phi;
    open_field(o, f);
    require(o.poly, "--poly");
    check(bk_poly_parse(f, o.poly.c_str(), phi.out()));
    bk_format fmt = format_of(o, BK_FORMAT_JSON);
    if (fmt == BK_FORMAT_DOT) throw Failure{BK_E_INVALID_ARGUMENT, "fibers render as json or table"};
    char* out = nullptr;
    check(bk_fibers(phi, o.center.c_str(), or_null(o.roots), fmt, &out));
    return take(out);
}

std::string run_lift(const Options& o) {
    FieldH f;
    PolyH phi;
    DivisorH given, d;
    SkeletonH s;
    open_field(o, f);
    require(o.poly, "--poly");
    check(bk_poly_parse(f, o.poly.c_str(), phi.out()));
    check(bk_divisor_parse(f, o.divisor.c_str(), given.out()));
    if (o.complete) {
        check(bk_required_divisor(phi, given, d.out()));
    } else {
        char* text = nullptr;
        check(bk_divisor_json(given, &text));
        check(bk_divisor_parse(f, take(text).c_str(), d.out()));
    }

    std::size_t a = 0, b = 0;
    if (std::sscanf(o.grid.c_str(), "%zux%zu", &a, &b) != 2 || a == 0 || b == 0)
        throw Failure{BK_E_INVALID_ARGUMENT, "--grid must look like 50x20"};

    char* report = nullptr;
    check(bk_verify_square(phi, d, a, b, o.seed, &report));
    std::string report_s = take(report);
    check(bk_skeleton_lifted(phi, d, or_null(o.roots), s.out()));

    bk_format fmt = format_of(o, BK_FORMAT_JSON);
    if (fmt == BK_FORMAT_TABLE) throw Failure{BK_E_INVALID_ARGUMENT, "lift renders as json or dot"};
    char* sk = nullptr;
    check(bk_skeleton_render(s, fmt, &sk));
    std::string sk_s = take(sk);
    if (fmt == BK_FORMAT_DOT) {
        std::string compact;
        for (char c : report_s)
            if (c != '\n') compact += c;
        return sk_s + "// report: " + compact + "\n";
    }
    nlohmann::ordered_json j;
    j["skeleton"] = nlohmann::ordered_json::parse(sk_s);
    j["report"] = nlohmann::ordered_json::parse(report_s);
    return j.dump(2) + "\n";
}

std::string run_roots(const Options& o) {
    if (!o.p) throw Failure{BK_E_INVALID_ARGUMENT, "roots needs --p <prime>"};
    FieldH f;
    PolyH poly;
    check(bk_field_padic(*o.p, f.out()));
    require(o.poly, "--poly");
    check(bk_poly_parse(f, o.poly.c_str(), poly.out()));
    char* out = nullptr;
    check(bk_padic_roots(poly, *o.p, o.precision, &out));
    return take(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on the Berkovich projective line over Q_p and Q(t)"};
    app.require_subcommand(1);
    Options o;

    auto field_flags = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "work over Q_p");
        sub->add_flag("--t", o.tadic, "work over Q(t) with the t-adic valuation");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "dot", "table"}));
    };

    auto* skeleton = app.add_subcommand("skeleton", "convex hull of a divisor and the Gauss point");
    field_flags(skeleton);
    skeleton->add_option("--divisor", o.divisor, "divisor JSON list");

    auto* retract = app.add_subcommand("retract", "trajectories of the divisor retraction");
    field_flags(retract);
    retract->add_option("--divisor", o.divisor, "divisor JSON list");
    retract->add_option("--point", o.point, "point JSON");
    retract->add_option("--points", o.points, "JSON list of points");
    retract->add_option("--time", o.time, "evaluate at this time (exponent string)");

    auto* image = app.add_subcommand("image", "image of a point under a polynomial map");
    field_flags(image);
    image->add_option("--poly", o.poly, "coefficients, low degree first");
    image->add_option("--den", o.den, "denominator coefficients (rational map)");
    image->add_option("--point", o.point, "point JSON");

    auto* preimage = app.add_subcommand("preimage", "preimages of a point with multiplicities");
    field_flags(preimage);
    preimage->add_option("--poly", o.poly, "coefficients, low degree first");
    preimage->add_option("--point", o.point, "target point JSON");
    preimage->add_option("--roots", o.roots, "roots of phi - b as JSON");

    auto* fibers = app.add_subcommand("fibers", "fiber-count profile along the ray at a center");
    field_flags(fibers);
    fibers->add_option("--poly", o.poly, "coefficients, low degree first");
    fibers->add_option("--center", o.center, "center b of the ray");
    fibers->add_option("--roots", o.roots, "roots of phi - b as JSON");

    auto* lift = app.add_subcommand("lift", "lifted skeleton and commuting-square report");
    field_flags(lift);
    lift->add_option("--poly", o.poly, "coefficients, low degree first");
    lift->add_option("--divisor", o.divisor, "divisor JSON list");
    lift->add_option("--roots", o.roots, "root data for the fibers over D");
    lift->add_option("--grid", o.grid, "points x times, e.g. 50x20");
    lift->add_option("--seed", o.seed, "sampling seed");
    lift->add_flag("--complete", o.complete, "add the critical values and infinity to the divisor");

    auto* roots = app.add_subcommand("roots", "roots over Q_p: rational roots and Hensel lifts");
    roots->add_option("--p", o.p, "prime")->required();
    roots->add_option("--poly", o.poly, "coefficients, low degree first");
    roots->add_option("--precision", o.precision, "target precision N");
    roots->add_option("--format", o.format)->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::string out;
        if (*skeleton) out = run_skeleton(o);
        else if (*retract) out = run_retract(o);
        else if (*image) out = run_image(o);
        else if (*preimage) out = run_preimage(o);
        else if (*fibers) out = run_fibers(o);
        else if (*lift) out = run_lift(o);
        else out = run_roots(o);
        std::cout << out;
        return 0;
    } catch (const Failure& f) {
        std::cerr << "error (" << bk_status_name(f.status) << "): " << f.message << "\n";
        return exit_code(f.status);
    }
}
