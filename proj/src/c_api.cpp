#include "berkline/berkline.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "berkline/lifting.hpp"
#include "berkline/padic_roots.hpp"
#include "berkline/sampling.hpp"
#include "berkline/serialize.hpp"

using namespace berkline;

struct bk_field {
    Field value;
};
struct bk_point {
    BallPoint value;
};
struct bk_divisor {
    Divisor value;
};
struct bk_poly {
    Poly value;
};
struct bk_skeleton {
    Skeleton value;
};

namespace {

thread_local std::string last_error;

bk_status to_status(Errc c) { return static_cast<bk_status>(static_cast<int>(c) + 1); }

template <class F>
bk_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return BK_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const nlohmann::json::exception& e) {
        last_error = std::string("malformed JSON: ") + e.what();
        return BK_E_PARSE;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return BK_E_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BK_E_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) fail(Errc::InvalidArgument, std::string(what) + " is NULL");
}

Json parse_json(const char* text) {
    need(text, "JSON input");
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::Parse, std::string("malformed JSON: ") + e.what());
    }
}

char* copy_out(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Gamma parse_time(const char* t) {
    need(t, "time");
    Json j = Json::parse(t, nullptr, false);
    return gamma_from_json(j.is_discarded() ? Json(std::string(t)) : j);
}

RootData parse_root_data(const Field& field, const char* text) {
    RootData out;
    if (!text) return out;
    for (const auto& e : parse_json(text)) {
        if (!e.is_object() || !e.contains("value") || !e.contains("roots"))
            fail(Errc::Parse, "root data entries need \"value\" and \"roots\"");
        out.emplace_back(elem_from_json(field, e.at("value")), roots_from_json(field, e.at("roots")));
    }
    return out;
}

RootList roots_or_compute(const PolyMap& phi, const FieldElem& b, const char* roots_json) {
    if (roots_json) return roots_from_json(phi.field(), parse_json(roots_json));
    auto r = fiber_roots(phi, b);
    if (!r) fail(Errc::IncompleteRoots, "phi - " + b.pretty() + " does not split over the base field; supply roots");
    return *r;
}

} // namespace

extern "C" {

const char* bk_last_error(void) { return last_error.c_str(); }

const char* bk_status_name(bk_status s) {
    if (s == BK_OK) return "Ok";
    if (s == BK_E_INTERNAL) return "Internal";
    if (s < BK_OK || s > BK_E_INTERNAL) return "Unknown";
    return errc_name(static_cast<Errc>(static_cast<int>(s) - 1));
}

void bk_string_free(char* s) { std::free(s); }

bk_status bk_field_padic(unsigned long p, bk_field** out) {
    return guarded([&] {
        need(out, "out");
        *out = new bk_field{Field::padic(p)};
    });
}

bk_status bk_field_tadic(bk_field** out) {
    return guarded([&] {
        need(out, "out");
        *out = new bk_field{Field::tadic()};
    });
}

void bk_field_free(bk_field* f) { delete f; }

bk_status bk_point_parse(const bk_field* f, const char* json, bk_point** out) {
    return guarded([&] {
        need(f, "field");
        need(out, "out");
        *out = new bk_point{point_from_json(f->value, parse_json(json))};
    });
}

bk_status bk_point_json(const bk_point* x, char** out) {
    return guarded([&] {
        need(x, "point");
        need(out, "out");
        *out = copy_out(point_to_json(x->value).dump());
    });
}

void bk_point_free(bk_point* x) { delete x; }

bk_status bk_point_eq(const bk_point* x, const bk_point* y, int* out) {
    return guarded([&] {
        need(x, "point");
        need(y, "point");
        need(out, "out");
        if (!(x->value.field() == y->value.field())) fail(Errc::MixedFields, "points over different base fields");
        *out = point_eq(x->value, y->value) ? 1 : 0;
    });
}

bk_status bk_point_leq(const bk_point* x, const bk_point* y, int* out) {
    return guarded([&] {
        need(x, "point");
        need(y, "point");
        need(out, "out");
        if (!(x->value.field() == y->value.field())) fail(Errc::MixedFields, "points over different base fields");
        *out = leq(x->value, y->value) ? 1 : 0;
    });
}

bk_status bk_point_join(const bk_point* x, const bk_point* y, bk_point** out) {
    return guarded([&] {
        need(x, "point");
        need(y, "point");
        need(out, "out");
        *out = new bk_point{join(x->value, y->value)};
    });
}

bk_status bk_point_inv(const bk_point* x, bk_point** out) {
    return guarded([&] {
        need(x, "point");
        need(out, "out");
        *out = new bk_point{inv_point(x->value)};
    });
}

bk_status bk_divisor_parse(const bk_field* f, const char* json, bk_divisor** out) {
    return guarded([&] {
        need(f, "field");
        need(out, "out");
        *out = new bk_divisor{divisor_from_json(f->value, parse_json(json))};
    });
}

bk_status bk_divisor_json(const bk_divisor* d, char** out) {
    return guarded([&] {
        need(d, "divisor");
        need(out, "out");
        *out = copy_out(divisor_to_json(d->value).dump());
    });
}

void bk_divisor_free(bk_divisor* d) { delete d; }

bk_status bk_poly_parse(const bk_field* f, const char* json, bk_poly** out) {
    return guarded([&] {
        need(f, "field");
        need(out, "out");
        *out = new bk_poly{poly_from_json(f->value, parse_json(json))};
    });
}

void bk_poly_free(bk_poly* p) { delete p; }

bk_status bk_skeleton_hull(const bk_divisor* d, bk_skeleton** out) {
    return guarded([&] {
        need(d, "divisor");
        need(out, "out");
        *out = new bk_skeleton{divisor_hull(d->value)};
    });
}

bk_status bk_skeleton_lifted(const bk_poly* phi, const bk_divisor* d, const char* roots_json, bk_skeleton** out) {
    return guarded([&] {
        need(phi, "polynomial");
        need(d, "divisor");
        need(out, "out");
        PolyMap map(phi->value);
        *out = new bk_skeleton{lifted_skeleton(map, d->value, parse_root_data(map.field(), roots_json))};
    });
}

bk_status bk_skeleton_render(const bk_skeleton* s, bk_format fmt, char** out) {
    return guarded([&] {
        need(s, "skeleton");
        need(out, "out");
        switch (fmt) {
        case BK_FORMAT_JSON: *out = copy_out(dump(skeleton_to_json(s->value))); break;
        case BK_FORMAT_DOT: *out = copy_out(skeleton_to_dot(s->value)); break;
        default: fail(Errc::InvalidArgument, "skeletons render as json or dot");
        }
    });
}

bk_status bk_skeleton_contains(const bk_skeleton* s, const bk_point* x, int* out) {
    return guarded([&] {
        need(s, "skeleton");
        need(x, "point");
        need(out, "out");
        *out = s->value.contains(x->value) ? 1 : 0;
    });
}

void bk_skeleton_free(bk_skeleton* s) { delete s; }

bk_status bk_project(const bk_point* x, const bk_skeleton* s, bk_point** out) {
    return guarded([&] {
        need(x, "point");
        need(s, "skeleton");
        need(out, "out");
        *out = new bk_point{project(x->value, s->value)};
    });
}

bk_status bk_tau(const bk_divisor* d, const bk_point* x, char** out) {
    return guarded([&] {
        need(d, "divisor");
        need(x, "point");
        need(out, "out");
        *out = copy_out(tau(x->value, d->value).exponent_json());
    });
}

bk_status bk_retract(const bk_divisor* d, const char* t, const bk_point* x, bk_point** out) {
    return guarded([&] {
        need(d, "divisor");
        need(x, "point");
        need(out, "out");
        *out = new bk_point{h_D(parse_time(t), x->value, d->value)};
    });
}

bk_status bk_trajectory(const bk_divisor* d, const bk_point* x, bk_format fmt, char** out) {
    return guarded([&] {
        need(d, "divisor");
        need(x, "point");
        need(out, "out");
        Trajectory tr = trajectory(x->value, d->value);
        switch (fmt) {
        case BK_FORMAT_JSON: *out = copy_out(dump(trajectory_to_json(tr))); break;
        case BK_FORMAT_TABLE: *out = copy_out(trajectory_table(tr)); break;
        default: fail(Errc::InvalidArgument, "trajectories render as json or table");
        }
    });
}

bk_status bk_retract_points(const bk_divisor* d, const char* points_json, const char* t, bk_format fmt,
                            char** out) {
    return guarded([&] {
        need(d, "divisor");
        need(out, "out");
        if (fmt == BK_FORMAT_DOT) fail(Errc::InvalidArgument, "retractions render as json or table");
        Json list = parse_json(points_json);
        if (!list.is_array()) list = Json::array({list});
        Retraction r(d->value);
        std::optional<Gamma> time;
        if (t) time = parse_time(t);

        Json arr = Json::array();
        std::string table;
        for (const auto& item : list) {
            BallPoint x = point_from_json(d->value.field(), item);
            if (time) {
                BallPoint y = r.at(*time, x);
                arr.push_back(Json{{"start", point_to_json(x)}, {"t", gamma_to_json(*time)}, {"point", point_to_json(y)}});
                table += point_pretty(x) + "\t" + time->pretty(x.field()) + "\t" + point_pretty(y) + "\n";
                continue;
            }
            Trajectory tr = r.trajectory(x);
            arr.push_back(Json{{"start", point_to_json(x)},
                               {"tau", gamma_to_json(tr.stop_time)},
                               {"end", point_to_json(tr.end)},
                               {"trajectory", trajectory_to_json(tr)}});
            table += "# " + point_pretty(x) + ", tau = " + tr.stop_time.pretty(x.field()) + "\n" + trajectory_table(tr);
        }
        *out = copy_out(fmt == BK_FORMAT_JSON ? dump(arr) : table);
    });
}

bk_status bk_image(const bk_poly* phi, const bk_point* x, bk_point** out) {
    return guarded([&] {
        need(phi, "polynomial");
        need(x, "point");
        need(out, "out");
        *out = new bk_point{image_point(PolyMap(phi->value), x->value)};
    });
}

bk_status bk_image_rational(const bk_poly* num, const bk_poly* den, const bk_point* x, bk_point** out) {
    return guarded([&] {
        need(num, "numerator");
        need(den, "denominator");
        need(x, "point");
        need(out, "out");
        *out = new bk_point{image_point(PolyMap(num->value, den->value), x->value)};
    });
}

bk_status bk_radius_map(const bk_poly* phi, const char* center_json, char** out) {
    return guarded([&] {
        need(phi, "polynomial");
        need(out, "out");
        PolyMap map(phi->value);
        FieldElem a = elem_from_json(map.field(), parse_json(center_json));
        *out = copy_out(dump(piecewise_to_json(radius_map(map, a))));
    });
}

bk_status bk_preimage(const bk_poly* phi, const bk_point* y, const char* roots_json, char** out) {
    return guarded([&] {
        need(phi, "polynomial");
        need(y, "point");
        need(out, "out");
        PolyMap map(phi->value);
        RootList roots;
        if (!y->value.is_infinity()) roots = roots_or_compute(map, y->value.center(), roots_json);
        Json a = Json::array();
        for (const auto& [z, m] : preimage_points(map, y->value, roots))
            a.push_back(Json{{"point", point_to_json(z)}, {"mult", m}});
        *out = copy_out(dump(a));
    });
}

bk_status bk_fibers(const bk_poly* phi, const char* center_json, const char* roots_json, bk_format fmt, char** out) {
    return guarded([&] {
        need(phi, "polynomial");
        need(out, "out");
        PolyMap map(phi->value);
        FieldElem b = elem_from_json(map.field(), parse_json(center_json));
        FiberCountProfile p = fiber_count_ray(map, b, roots_or_compute(map, b, roots_json));
        switch (fmt) {
        case BK_FORMAT_JSON: {
            Json j = profile_to_json(p);
            Json outer = Json::array();
            for (const auto& z : scan_ray(map, b, roots_or_compute(map, b, roots_json)))
                outer.push_back(point_to_json(z));
            j["outer_ramification"] = outer;
            *out = copy_out(dump(j));
            break;
        }
        case BK_FORMAT_TABLE: *out = copy_out(profile_table(map.field(), p)); break;
        default: fail(Errc::InvalidArgument, "profiles render as json or table");
        }
    });
}

bk_status bk_required_divisor(const bk_poly* phi, const bk_divisor* extra, bk_divisor** out) {
    return guarded([&] {
        need(phi, "polynomial");
        need(extra, "divisor");
        need(out, "out");
        *out = new bk_divisor{required_divisor(PolyMap(phi->value), extra->value)};
    });
}

bk_status bk_lift(const bk_poly* phi, const bk_divisor* d, const char* t, const bk_point* x, bk_point** out) {
    return guarded([&] {
        need(phi, "polynomial");
        need(d, "divisor");
        need(x, "point");
        need(out, "out");
        *out = new bk_point{lift_h(PolyMap(phi->value), d->value, parse_time(t), x->value)};
    });
}

bk_status bk_verify_square(const bk_poly* phi, const bk_divisor* d, size_t n_points, size_t n_times, uint64_t seed,
                           char** out) {
    return guarded([&] {
        need(phi, "polynomial");
        need(d, "divisor");
        need(out, "out");
        PolyMap map(phi->value);
        Sampler rng(map.field(), seed);
        std::vector<BallPoint> xs;
        std::vector<Gamma> ts;
        for (size_t i = 0; i < n_points; ++i) xs.push_back(rng.point());
        for (size_t i = 0; i < n_times; ++i) ts.push_back(rng.time());
        *out = copy_out(dump(report_to_json(verify_commuting_square(map, d->value, xs, ts))));
    });
}

bk_status bk_padic_roots(const bk_poly* f, unsigned long p, long precision, char** out) {
    return guarded([&] {
        need(f, "polynomial");
        need(out, "out");
        if (!f->value.has_rational_coeffs()) fail(Errc::InvalidArgument, "p-adic roots need rational coefficients");
        if (precision < 1) fail(Errc::InvalidArgument, "precision must be positive");
        Field::padic(p); // validates the prime
        *out = copy_out(dump(padic_report_to_json(padic_roots(f->value.rational_coeffs(), p, precision))));
    });
}

} // extern "C"
