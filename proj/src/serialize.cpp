#include "berkline/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace berkline {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::Parse, what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string chart_name(Chart c) { return c == Chart::Direct ? "direct" : "inverted"; }

Chart chart_from(const Json& j) {
    if (j == "direct") return Chart::Direct;
    if (j == "inverted") return Chart::Inverted;
    bad("chart must be \"direct\" or \"inverted\"");
}

QPoly qpoly_from(const Json& j) {
    if (!j.is_array()) bad("coefficient list expected");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return QPoly(std::move(c));
}

Json qpoly_to(const QPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
    return a;
}

} // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad("exact rational expected (integer or \"num/den\" string), got " + j.dump());
}

Json rational_to_json(const Rational& q) { return rational_json(q); }

Gamma gamma_from_json(const Json& j) {
    if (j.is_object()) return gamma_from_json(member(j, "w"));
    if (j == "inf") return Gamma::zero();
    return Gamma::exp(rational_from_json(j));
}

Json gamma_to_json(const Gamma& g) { return Json{{"w", g.exponent_json()}}; }

FieldElem elem_from_json(const Field& field, const Json& j) {
    if (j.is_object()) {
        if (field.is_padic()) bad("rational function given over Q_p");
        return FieldElem::ratfunc(qpoly_from(member(j, "num")), qpoly_from(member(j, "den")));
    }
    return FieldElem(field, rational_from_json(j));
}

Json elem_to_json(const FieldElem& x) {
    if (x.is_rational()) return rational_json(x.rational());
    const RatFunc& f = x.ratfunc_value();
    return Json{{"num", qpoly_to(f.num)}, {"den", qpoly_to(f.den)}};
}

BallPoint point_from_json(const Field& field, const Json& j) {
    if (j == "inf") return BallPoint::infinity(field);
    if (!j.is_object() || j.contains("num")) return BallPoint::simple(elem_from_json(field, j));
    const Json& kind = member(j, "pt");
    if (kind == "inf") return BallPoint::infinity(field);
    if (kind != "eta") bad("\"pt\" must be \"inf\" or \"eta\"");
    Gamma w = j.contains("w") ? gamma_from_json(j.at("w")) : Gamma::zero();
    return BallPoint::eta(elem_from_json(field, member(j, "center")), w);
}

Json point_to_json(const BallPoint& x) {
    if (x.is_infinity()) return Json{{"pt", "inf"}};
    BallPoint c = canonicalize(x);
    return Json{{"pt", "eta"}, {"center", elem_to_json(c.center())}, {"w", c.radius().exponent_json()}};
}

Poly poly_from_json(const Field& field, const Json& j) {
    if (!j.is_array()) bad("polynomial must be a coefficient list, low degree first");
    std::vector<FieldElem> c;
    for (const auto& e : j) c.push_back(elem_from_json(field, e));
    return Poly(field, std::move(c));
}

Json poly_to_json(const Poly& f) {
    Json a = Json::array();
    for (const auto& c : f.coeffs()) a.push_back(elem_to_json(c));
    return a;
}

Divisor divisor_from_json(const Field& field, const Json& j) {
    if (!j.is_array()) bad("divisor must be a list of points");
    std::vector<BallPoint> pts;
    for (const auto& e : j) pts.push_back(point_from_json(field, e));
    return Divisor(field, std::move(pts));
}

Json divisor_to_json(const Divisor& D) {
    Json a = Json::array();
    for (const auto& p : D.points()) a.push_back(p.is_infinity() ? Json("inf") : elem_to_json(p.center()));
    return a;
}

RootList roots_from_json(const Field& field, const Json& j) {
    if (!j.is_array()) bad("roots must be a list");
    RootList out;
    for (const auto& e : j) {
        if (e.is_object()) {
            int m = e.contains("mult") ? e.at("mult").get<int>() : 1;
            out.emplace_back(elem_from_json(field, member(e, "root")), m);
        } else {
            out.emplace_back(elem_from_json(field, e), 1);
        }
    }
    return out;
}

Json roots_to_json(const RootList& roots) {
    Json a = Json::array();
    for (const auto& [r, m] : roots) a.push_back(Json{{"root", elem_to_json(r)}, {"mult", m}});
    return a;
}

// ---------------------------------------------------------------------------

Json skeleton_to_json(const Skeleton& s) {
    Json verts = Json::array();
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
        Json v = point_to_json(s.vertices()[i]);
        v["marked"] = static_cast<bool>(s.marked()[i]);
        verts.push_back(std::move(v));
    }
    Json edges = Json::array();
    for (const auto& e : s.edges())
        edges.push_back(Json{{"from", e.lower},
                             {"to", e.upper},
                             {"center", elem_to_json(e.center)},
                             {"lo", gamma_to_json(e.lo)},
                             {"hi", e.hi ? gamma_to_json(*e.hi) : Json{{"w", "-inf"}}}});
    return Json{{"vertices", verts}, {"edges", edges}};
}

Skeleton skeleton_from_json(const Field& field, const Json& j) {
    std::vector<BallPoint> marked, other;
    for (const auto& v : member(j, "vertices")) {
        bool m = v.contains("marked") && v.at("marked").get<bool>();
        (m ? marked : other).push_back(point_from_json(field, v));
    }
    if (marked.empty() && other.empty()) bad("skeleton without vertices");
    // The vertex set is closed under joins, so the hull rebuilds the same tree.
    return Skeleton::hull(marked, false, other);
}

std::string skeleton_to_dot(const Skeleton& s) {
    std::ostringstream out;
    const Field& F = s.field();
    BallPoint gauss = BallPoint::gauss(F);
    out << "digraph skeleton {\n  rankdir=BT;\n  node [shape=ellipse];\n";
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
        const BallPoint& v = s.vertices()[i];
        std::string label = v.is_infinity() ? "∞" : point_pretty(v);
        out << "  v" << i << " [label=\"" << label << "\"";
        if (s.marked()[i]) out << ", shape=box";
        if (point_eq(v, gauss)) out << ", peripheries=2, style=bold";
        out << "];\n";
    }
    for (const auto& e : s.edges()) {
        std::string hi = e.hi ? e.hi->pretty(F) : "∞";
        out << "  v" << e.lower << " -> v" << e.upper << " [label=\"[" << e.lo.pretty(F) << "; " << hi << "]\"];\n";
    }
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------

Json piecewise_to_json(const PiecewiseMonomial& f) {
    Json breaks = Json::array(), pieces = Json::array();
    for (const auto& b : f.breaks()) breaks.push_back(gamma_to_json(b));
    for (const auto& m : f.pieces()) pieces.push_back(Json{{"c", gamma_to_json(m.coeff)}, {"n", rational_json(m.power)}});
    Json j{{"breaks", breaks}, {"pieces", pieces}};
    if (!f.domain_lo().is_zero()) j["lo"] = gamma_to_json(f.domain_lo());
    if (f.domain_hi()) j["hi"] = gamma_to_json(*f.domain_hi());
    return j;
}

PiecewiseMonomial piecewise_from_json(const Json& j) {
    std::vector<Gamma> breaks;
    std::vector<Monomial> pieces;
    for (const auto& b : member(j, "breaks")) breaks.push_back(gamma_from_json(b));
    for (const auto& m : member(j, "pieces"))
        pieces.push_back(Monomial{gamma_from_json(member(m, "c")), rational_from_json(member(m, "n"))});
    Gamma lo = j.contains("lo") ? gamma_from_json(j.at("lo")) : Gamma::zero();
    std::optional<Gamma> hi;
    if (j.contains("hi")) hi = gamma_from_json(j.at("hi"));
    return PiecewiseMonomial(std::move(breaks), std::move(pieces), lo, hi);
}

Json profile_to_json(const FiberCountProfile& p) {
    Json breaks = Json::array();
    for (const auto& b : p.breaks) breaks.push_back(gamma_to_json(b));
    return Json{{"breaks", breaks}, {"counts", p.counts}, {"at_break", p.at_break}};
}

FiberCountProfile profile_from_json(const Json& j) {
    FiberCountProfile p;
    for (const auto& b : member(j, "breaks")) p.breaks.push_back(gamma_from_json(b));
    p.counts = member(j, "counts").get<std::vector<long>>();
    if (j.contains("at_break")) p.at_break = j.at("at_break").get<std::vector<long>>();
    else
        for (std::size_t k = 0; k < p.breaks.size(); ++k) p.at_break.push_back(p.counts.at(k + 1));
    if (p.counts.size() != p.breaks.size() + 1 || p.at_break.size() != p.breaks.size())
        bad("profile needs one count per interval");
    return p;
}

std::string profile_table(const Field& field, const FiberCountProfile& p) {
    std::ostringstream out;
    out << "radius interval\tcount\n";
    std::string lo = "0";
    for (std::size_t k = 0; k <= p.breaks.size(); ++k) {
        std::string hi = k < p.breaks.size() ? p.breaks[k].pretty(field) : "inf";
        out << "[" << lo << "; " << hi << ")\t" << p.counts[k] << "\n";
        if (k < p.breaks.size()) lo = hi;
    }
    return out.str();
}

// ---------------------------------------------------------------------------

Json trajectory_to_json(const Trajectory& tr) {
    Json legs = Json::array();
    for (const auto& l : tr.legs)
        legs.push_back(Json{{"lo", gamma_to_json(l.time.lo)},
                            {"hi", gamma_to_json(l.time.hi)},
                            {"chart", chart_name(l.chart)},
                            {"center", elem_to_json(l.center)},
                            {"base_w", gamma_to_json(l.base_radius)}});
    return Json{{"start", point_to_json(tr.start)},
                {"stop_time", gamma_to_json(tr.stop_time)},
                {"end", point_to_json(tr.end)},
                {"legs", legs}};
}

Trajectory trajectory_from_json(const Field& field, const Json& j) {
    Trajectory tr{point_from_json(field, member(j, "start")), {}, gamma_from_json(member(j, "stop_time")),
                  point_from_json(field, member(j, "end"))};
    for (const auto& l : member(j, "legs"))
        tr.legs.push_back(TrajectoryLeg{Interval{gamma_from_json(member(l, "lo")), gamma_from_json(member(l, "hi"))},
                                        elem_from_json(field, member(l, "center")), chart_from(member(l, "chart")),
                                        gamma_from_json(member(l, "base_w"))});
    return tr;
}

std::string trajectory_table(const Trajectory& tr) {
    const Field& F = tr.start.field();
    std::vector<Gamma> times{Gamma::zero()};
    for (const auto& l : tr.legs) {
        times.push_back(l.time.lo);
        times.push_back(l.time.hi);
    }
    times.push_back(tr.stop_time);
    times.push_back(Gamma::one());
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    std::ostringstream out;
    out << "t\tpoint\n";
    for (const auto& t : times) out << t.pretty(F) << "\t" << point_pretty(tr.at(t)) << "\n";
    return out.str();
}

Json report_to_json(const SquareReport& r) {
    Json failed = Json::array();
    for (const auto& f : r.failed)
        failed.push_back(Json{{"x", point_to_json(f.x)}, {"t", gamma_to_json(f.t)}, {"reason", f.reason}});
    return Json{{"checked", r.checked}, {"failed", failed}};
}

SquareReport report_from_json(const Field& field, const Json& j) {
    SquareReport r;
    r.checked = member(j, "checked").get<std::size_t>();
    for (const auto& f : member(j, "failed"))
        r.failed.push_back(SquareFailure{point_from_json(field, member(f, "x")), gamma_from_json(member(f, "t")),
                                         member(f, "reason").get<std::string>()});
    return r;
}

Json padic_report_to_json(const PadicRootReport& r) {
    Json rational = Json::array(), lifted = Json::array();
    for (const auto& [q, m] : r.rational) rational.push_back(Json{{"root", rational_json(q)}, {"mult", m}});
    for (const auto& root : r.lifted)
        lifted.push_back(Json{{"residue", rational_json(root.value.representative())},
                              {"valuation", root.value.valuation()},
                              {"certified", root.certified}});
    return Json{{"rational", rational}, {"lifted", lifted}, {"unresolved", r.unresolved}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace berkline
