#include "berkline/skeleton.hpp"

#include <algorithm>
#include <numeric>

namespace berkline {

bool SkeletonEdge::contains(const BallPoint& q) const {
    if (q.is_infinity()) return false;
    const Gamma& r = q.radius();
    if (r < lo || (hi && *hi < r)) return false;
    return dist(q.center(), center) <= r;
}

namespace {

void add_unique(std::vector<BallPoint>& set, const BallPoint& p) {
    for (const auto& q : set)
        if (point_eq(p, q)) return;
    set.push_back(canonicalize(p));
}

} // namespace

Skeleton Skeleton::hull(const std::vector<BallPoint>& points, bool include_gauss,
                        const std::vector<BallPoint>& unmarked) {
    if (points.empty() && unmarked.empty()) fail(Errc::InvalidArgument, "hull of an empty set");
    const Field field = points.empty() ? unmarked.front().field() : points.front().field();
    for (const auto* set : {&points, &unmarked})
        for (const auto& p : *set)
            if (!(p.field() == field)) fail(Errc::MixedFields, "hull of points over different base fields");

    std::vector<BallPoint> inputs;
    for (const auto& p : points) add_unique(inputs, p);

    std::vector<BallPoint> verts = inputs;
    if (include_gauss) add_unique(verts, BallPoint::gauss(field));
    for (const auto& p : unmarked) add_unique(verts, p);
    // Close under joins; in a tree one round suffices, the loop is a guard.
    for (std::size_t seen = 0; seen != verts.size();) {
        seen = verts.size();
        for (std::size_t i = 0; i < seen; ++i)
            for (std::size_t j = i + 1; j < seen; ++j) add_unique(verts, join(verts[i], verts[j]));
    }
    std::sort(verts.begin(), verts.end(), canonical_less);

    Skeleton s(field);
    s.vertices_ = std::move(verts);
    for (const auto& v : s.vertices_)
        s.marked_.push_back(std::any_of(inputs.begin(), inputs.end(),
                                        [&](const BallPoint& q) { return point_eq(q, v); }));

    for (std::size_t i = 0; i < s.vertices_.size(); ++i) {
        const BallPoint& v = s.vertices_[i];
        if (v.is_infinity()) continue;
        std::optional<std::size_t> parent;
        for (std::size_t j = 0; j < s.vertices_.size(); ++j) {
            const BallPoint& u = s.vertices_[j];
            if (j == i || !leq(v, u)) continue;
            if (!parent || leq(u, s.vertices_[*parent])) parent = j;
        }
        if (!parent) continue;
        const BallPoint& up = s.vertices_[*parent];
        SkeletonEdge e{i, *parent, v.center(), v.radius(), std::nullopt};
        if (!up.is_infinity()) e.hi = up.radius();
        s.edges_.push_back(std::move(e));
    }
    return s;
}

std::optional<std::size_t> Skeleton::vertex_index(const BallPoint& q) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (point_eq(vertices_[i], q)) return i;
    return std::nullopt;
}

bool Skeleton::contains(const BallPoint& q) const {
    if (vertex_index(q)) return true;
    return std::any_of(edges_.begin(), edges_.end(), [&](const SkeletonEdge& e) { return e.contains(q); });
}

bool Skeleton::is_tree() const {
    if (vertices_.empty() || edges_.size() + 1 != vertices_.size()) return false;
    std::vector<std::size_t> root(vertices_.size());
    std::iota(root.begin(), root.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (root[a] != a) a = root[a] = root[root[a]];
        return a;
    };
    for (const auto& e : edges_) {
        if (!leq(vertices_[e.lower], vertices_[e.upper]) || point_eq(vertices_[e.lower], vertices_[e.upper]))
            return false;
        std::size_t a = find(e.lower), b = find(e.upper);
        if (a == b) return false;
        root[a] = b;
    }
    return true;
}

BallPoint project(const BallPoint& x, const Skeleton& T) {
    if (!(x.field() == T.field())) fail(Errc::MixedFields, "point and skeleton over different base fields");
    if (T.contains(x)) return canonicalize(x);
    const Field& field = x.field();

    // Radius windows [lo; hi] around a center: every vertex and edge of T.
    struct Window {
        FieldElem center;
        Gamma lo;
        std::optional<Gamma> hi;
    };
    std::vector<Window> windows;
    for (const auto& v : T.vertices())
        if (!v.is_infinity()) windows.push_back(Window{v.center(), v.radius(), v.radius()});
    for (const auto& e : T.edges()) windows.push_back(Window{e.center, e.lo, e.hi});

    // The point at infinity is in T whenever x is, so from here on x's path
    // is: up around x's center until the join with Gauss (radius top), then
    // down around 0 to radius 1.
    std::optional<Gamma> top; // absent: x is infinity, the up-leg is empty
    if (!x.is_infinity()) {
        top = join(x, BallPoint::gauss(field)).radius();
        std::optional<Gamma> best;
        for (const auto& w : windows) {
            Gamma rho = std::max({w.lo, dist(x.center(), w.center), x.radius()});
            Gamma cap = w.hi ? std::min(*w.hi, *top) : *top;
            if (rho <= cap && (!best || rho < *best)) best = rho;
        }
        if (best) return canonicalize(BallPoint::eta(x.center(), *best));
    }

    std::optional<Gamma> best;
    const FieldElem zero(field, 0L);
    for (const auto& w : windows) {
        Gamma floor = std::max({w.lo, val(w.center), Gamma::one()});
        std::optional<Gamma> cap = w.hi;
        if (top && (!cap || *top < *cap)) cap = top;
        if (!cap) continue;
        if (floor <= *cap && (!best || *best < *cap)) best = cap;
    }
    if (best) return canonicalize(BallPoint::eta(zero, *best));
    fail(Errc::SkeletonMissesPath, "the path from " + point_pretty(x) + " toward the Gauss point misses the skeleton");
}

} // namespace berkline
