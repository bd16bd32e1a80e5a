#include "berkline/polymap.hpp"

#include <algorithm>
#include <numeric>

#include "berkline/padic_roots.hpp"

namespace berkline {

namespace {

Poly poly_mod(Poly a, const Poly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        FieldElem c = a.leading() / b.leading();
        std::vector<FieldElem> shift(static_cast<std::size_t>(a.degree() - b.degree()), FieldElem(a.field(), 0L));
        shift.push_back(c);
        a = a - Poly(a.field(), std::move(shift)) * b;
    }
    return a;
}

long gcd_degree(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.degree();
}

void check_roots(const PolyMap& phi, const FieldElem& b, const RootList& roots) {
    long total = 0;
    for (const auto& [a, m] : roots) {
        if (m < 1) fail(Errc::InvalidArgument, "root multiplicity must be positive");
        if (!(phi.eval(a) == b))
            fail(Errc::IncompleteRoots, a.pretty() + " is not a root of phi - " + b.pretty());
        total += m;
    }
    if (total != phi.degree())
        fail(Errc::IncompleteRoots, "root multiplicities sum to " + std::to_string(total) + ", degree is " +
                                        std::to_string(phi.degree()));
}

} // namespace

PolyMap::PolyMap(Poly numerator) : num_(std::move(numerator)) {
    if (num_.degree() < 1) fail(Errc::InvalidArgument, "polynomial map must have degree >= 1");
}

PolyMap::PolyMap(Poly numerator, Poly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (!(num_.field() == den_->field())) fail(Errc::MixedFields, "numerator and denominator over different fields");
    if (den_->is_zero()) fail(Errc::DivisionByZero, "zero denominator");
    if (num_.is_zero()) fail(Errc::InvalidArgument, "zero rational map");
    if (std::max(num_.degree(), den_->degree()) < 1) fail(Errc::InvalidArgument, "constant rational map");
    if (gcd_degree(num_, *den_) > 0) fail(Errc::InvalidArgument, "numerator and denominator are not coprime");
}

long PolyMap::degree() const {
    if (den_) fail(Errc::InvalidArgument, "degree is only used for polynomial maps");
    return num_.degree();
}

FieldElem PolyMap::eval(const FieldElem& a) const {
    if (!den_) return num_.eval(a);
    FieldElem d = den_->eval(a);
    if (d.is_zero()) fail(Errc::DenominatorVanishes, "pole at " + a.pretty());
    return num_.eval(a) / d;
}

std::vector<FieldElem> taylor_shift(const PolyMap& phi, const FieldElem& a) {
    if (!phi.is_polynomial()) fail(Errc::InvalidArgument, "Taylor shift needs a polynomial map");
    return phi.numerator().taylor_shift(a);
}

PiecewiseMonomial radius_map(const PolyMap& phi, const FieldElem& a) {
    auto c = taylor_shift(phi, a);
    std::vector<Monomial> terms;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) terms.push_back(Monomial{val(c[i]), Rational(static_cast<long>(i))});
    return PiecewiseMonomial::max_envelope(terms);
}

BallPoint image_point(const PolyMap& phi, const BallPoint& x) {
    if (!(x.field() == phi.field())) fail(Errc::MixedFields, "point and map over different base fields");
    if (phi.is_polynomial()) {
        if (x.is_infinity()) return x;
        const FieldElem& a = x.center();
        Gamma s = x.radius().is_zero() ? Gamma::zero() : radius_map(phi, a).eval(x.radius());
        return canonicalize(BallPoint::eta(phi.eval(a), s));
    }

    const Poly& num = phi.numerator();
    const Poly& den = *phi.denominator();
    if (x.is_infinity()) {
        if (num.degree() > den.degree()) return x;
        if (num.degree() < den.degree()) return BallPoint::simple(FieldElem(x.field(), 0L));
        return BallPoint::simple(num.leading() / den.leading());
    }
    const FieldElem& a = x.center();
    const Gamma& r = x.radius();
    auto d = den.taylor_shift(a);
    const Gamma d0 = val(d[0]);
    for (std::size_t i = 1; i < d.size(); ++i)
        if (!(val(d[i]) * r.pow(Rational(static_cast<long>(i))) < d0))
            fail(Errc::DenominatorVanishes, "the denominator has a zero in " + point_pretty(x));
    if (d0.is_zero()) fail(Errc::DenominatorVanishes, "pole at " + a.pretty());
    const FieldElem b = phi.eval(a);
    const Poly shifted = num - den.scaled(b);
    return canonicalize(BallPoint::eta(b, shifted.gauss_value(a, r) / d0));
}

std::optional<RootList> fiber_roots(const PolyMap& phi, const FieldElem& b) {
    if (!phi.is_polynomial()) fail(Errc::InvalidArgument, "fibers need a polynomial map");
    return split_roots(phi.numerator() - Poly(phi.field(), {b}));
}

std::vector<std::pair<BallPoint, int>> preimage_points(const PolyMap& phi, const BallPoint& y, const RootList& roots) {
    if (!phi.is_polynomial()) fail(Errc::InvalidArgument, "preimages need a polynomial map");
    if (y.is_infinity()) return {{y, static_cast<int>(phi.degree())}};
    const FieldElem& b = y.center();
    check_roots(phi, b, roots);

    std::vector<std::pair<BallPoint, int>> classes;
    for (const auto& [a, m] : roots) {
        Gamma sigma = y.radius().is_zero() ? Gamma::zero() : radius_map(phi, a).invert(y.radius());
        BallPoint z = canonicalize(BallPoint::eta(a, sigma));
        auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return point_eq(c.first, z); });
        if (it == classes.end()) classes.emplace_back(z, m);
        else it->second += m;
    }
    std::sort(classes.begin(), classes.end(), [](const auto& l, const auto& r) { return canonical_less(l.first, r.first); });
    return classes;
}

// ---------------------------------------------------------------------------

long FiberCountProfile::count_at(const Gamma& t) const {
    std::size_t k = 0;
    while (k < breaks.size() && breaks[k] < t) ++k;
    if (k < breaks.size() && breaks[k] == t) return at_break[k];
    return counts[k];
}

long FiberCountProfile::count_just_above(const Gamma& t) const {
    std::size_t k = 0;
    while (k < breaks.size() && breaks[k] <= t) ++k;
    return counts[k];
}

FiberCountProfile fiber_count_ray(const PolyMap& phi, const FieldElem& b, const RootList& roots) {
    if (!phi.is_polynomial()) fail(Errc::InvalidArgument, "fiber counts need a polynomial map");
    check_roots(phi, b, roots);

    std::vector<FieldElem> distinct;
    for (const auto& [a, m] : roots)
        if (std::find(distinct.begin(), distinct.end(), a) == distinct.end()) distinct.push_back(a);

    // Candidate balls around a_j and a_k coincide from the target radius
    // s_j(|a_j - a_k|) on.
    struct Merge {
        Gamma t;
        std::size_t j, k;
    };
    std::vector<Merge> merges;
    for (std::size_t j = 0; j < distinct.size(); ++j) {
        PiecewiseMonomial s = radius_map(phi, distinct[j]);
        for (std::size_t k = j + 1; k < distinct.size(); ++k)
            merges.push_back(Merge{s.eval(dist(distinct[j], distinct[k])), j, k});
    }
    std::sort(merges.begin(), merges.end(), [](const Merge& l, const Merge& r) { return l.t < r.t; });

    std::vector<std::size_t> root(distinct.size());
    std::iota(root.begin(), root.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (root[a] != a) a = root[a] = root[root[a]];
        return a;
    };

    FiberCountProfile profile;
    long count = static_cast<long>(distinct.size());
    profile.counts.push_back(count);
    for (std::size_t i = 0; i < merges.size();) {
        const Gamma t = merges[i].t;
        long before = count;
        for (; i < merges.size() && merges[i].t == t; ++i) {
            std::size_t a = find(merges[i].j), c = find(merges[i].k);
            if (a != c) {
                root[a] = c;
                --count;
            }
        }
        if (count != before) {
            profile.breaks.push_back(t);
            profile.at_break.push_back(count);
            profile.counts.push_back(count);
        }
    }
    return profile;
}

bool outer_ramification_scan(const FiberCountProfile& profile, const Gamma& r) {
    if (r.is_zero()) fail(Errc::InvalidArgument, "outer ramification needs r > 0");
    return profile.count_just_above(r) > profile.count_at(r);
}

std::vector<BallPoint> scan_ray(const PolyMap& phi, const FieldElem& b, const RootList& roots) {
    FiberCountProfile profile = fiber_count_ray(phi, b, roots);
    std::vector<BallPoint> out;
    for (const auto& t : profile.breaks)
        if (outer_ramification_scan(profile, t)) out.push_back(canonicalize(BallPoint::eta(b, t)));
    return out;
}

} // namespace berkline
