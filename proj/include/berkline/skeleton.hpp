#pragma once

#include <optional>
#include <vector>

#include "berkline/ballpoint.hpp"

namespace berkline {

/// Edge from `lower` up to `upper` (lower < upper in the ball order). Its
/// points are eta(center, rho) with rho in [lo; hi]; hi is absent when the
/// upper end is the point at infinity.
struct SkeletonEdge {
    std::size_t lower = 0;
    std::size_t upper = 0;
    FieldElem center;
    Gamma lo;
    std::optional<Gamma> hi;

    bool contains(const BallPoint& q) const;
};

/// Finite subtree of the hat-line. Vertices are canonical and sorted by
/// canonical_less; marked vertices are the input (divisor) points.
class Skeleton {
public:
    // Convex hull: union of the paths between all pairs of `points`, plus
    // the Gauss point when requested and any `unmarked` points. Only
    // `points` are marked. Duplicates are merged.
    static Skeleton hull(const std::vector<BallPoint>& points, bool include_gauss,
                         const std::vector<BallPoint>& unmarked = {});

    const Field& field() const noexcept { return field_; }
    const std::vector<BallPoint>& vertices() const noexcept { return vertices_; }
    const std::vector<SkeletonEdge>& edges() const noexcept { return edges_; }
    const std::vector<bool>& marked() const noexcept { return marked_; }

    std::optional<std::size_t> vertex_index(const BallPoint& q) const;
    // Membership: q is a vertex or lies on an edge.
    bool contains(const BallPoint& q) const;
    // Connected, acyclic, and every edge respects the ball order.
    bool is_tree() const;

private:
    explicit Skeleton(Field field) : field_(field) {}
    Field field_;
    std::vector<BallPoint> vertices_;
    std::vector<SkeletonEdge> edges_;
    std::vector<bool> marked_;
};

/// First point of the path from x toward the Gauss point that lies in T.
/// Throws SkeletonMissesPath.
BallPoint project(const BallPoint& x, const Skeleton& T);

} // namespace berkline
