#include "berkline/gamma.hpp"

#include <algorithm>

namespace berkline {

Interval Interval::path(const Gamma& from, const Gamma& to) {
    if (from <= to) return Interval{from, to, Orientation::Forward};
    return Interval{to, from, Orientation::Reverse};
}

GeneralizedSegment::GeneralizedSegment(Interval single) : GeneralizedSegment(std::vector<Interval>{std::move(single)}) {}

GeneralizedSegment::GeneralizedSegment(std::vector<Interval> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) fail(Errc::InvalidArgument, "generalized segment needs at least one piece");
    for (const auto& p : pieces_)
        if (p.hi < p.lo) fail(Errc::InvalidArgument, "interval with lo > hi");
    normalize();
}

std::vector<std::pair<Gamma, Gamma>> GeneralizedSegment::identifications() const {
    std::vector<std::pair<Gamma, Gamma>> ids;
    for (std::size_t k = 0; k + 1 < pieces_.size(); ++k)
        ids.emplace_back(pieces_[k].extremity(), pieces_[k + 1].origin());
    return ids;
}

void GeneralizedSegment::normalize() {
    normalized_.reset();
    reparams_.clear();
    for (const auto& [end, start] : identifications())
        if (end.is_zero() || start.is_zero()) return;

    const Interval& first = pieces_.front();
    const bool forward = first.orientation == Orientation::Forward;
    Gamma lo = first.lo;
    Gamma hi = first.hi;
    Gamma end = first.extremity();
    std::vector<MonomialReparam> maps{MonomialReparam{Gamma::one(), 1}};

    for (std::size_t k = 1; k < pieces_.size(); ++k) {
        const Interval& piece = pieces_[k];
        const Gamma& o = piece.origin();
        const Gamma& e = piece.extremity();
        const bool same = piece.lo == piece.hi || (piece.orientation == Orientation::Forward) == forward;
        MonomialReparam m;
        if (same) {
            m = MonomialReparam{end / o, 1};
        } else {
            if (e.is_zero()) return;
            m = MonomialReparam{end * o, -1};
        }
        end = m.apply(e);
        (forward ? hi : lo) = end;
        maps.push_back(m);
    }
    normalized_ = Interval{lo, hi, first.orientation};
    reparams_ = std::move(maps);
}

GeneralizedSegment segment_concat(const GeneralizedSegment& a, const GeneralizedSegment& b) {
    std::vector<Interval> pieces(a.pieces());
    pieces.insert(pieces.end(), b.pieces().begin(), b.pieces().end());
    return GeneralizedSegment(std::move(pieces));
}

// ---------------------------------------------------------------------------

Gamma Monomial::eval(const Gamma& r) const { return coeff * r.pow(power); }

PiecewiseMonomial::PiecewiseMonomial(std::vector<Gamma> breaks, std::vector<Monomial> pieces,
                                     Gamma domain_lo, std::optional<Gamma> domain_hi)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)), domain_lo_(std::move(domain_lo)),
      domain_hi_(std::move(domain_hi)) {
    if (pieces_.size() != breaks_.size() + 1)
        fail(Errc::InvalidArgument, "piecewise monomial needs one more piece than breakpoints");
    for (std::size_t k = 0; k < breaks_.size(); ++k) {
        if (breaks_[k].is_zero()) fail(Errc::InvalidArgument, "breakpoint at zero");
        if (k > 0 && !(breaks_[k - 1] < breaks_[k]))
            fail(Errc::InvalidArgument, "breakpoints must be strictly increasing");
        if (pieces_[k].eval(breaks_[k]) != pieces_[k + 1].eval(breaks_[k]))
            fail(Errc::InvalidArgument, "piecewise monomial is discontinuous at a breakpoint");
    }
    if (!breaks_.empty() && (breaks_.front() < domain_lo_ || (domain_hi_ && *domain_hi_ < breaks_.back())))
        fail(Errc::InvalidArgument, "breakpoints outside the domain");
}

PiecewiseMonomial PiecewiseMonomial::identity() {
    return PiecewiseMonomial({}, {Monomial{Gamma::one(), Rational(1)}});
}

PiecewiseMonomial PiecewiseMonomial::max_envelope(const std::vector<Monomial>& monomials) {
    // In exponent space each monomial is the line rho -> c + n*rho and the
    // max of values is the min of lines. Sweep from r = 0 (rho = +inf),
    // where the smallest power dominates, toward r = inf.
    struct Line {
        Rational c;
        Rational n;
    };
    std::vector<Line> lines;
    for (const auto& m : monomials)
        if (!m.coeff.is_zero()) lines.push_back(Line{m.coeff.exponent(), m.power});
    if (lines.empty()) fail(Errc::InvalidArgument, "envelope of no nonzero monomials");

    auto start = std::min_element(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return a.n != b.n ? a.n < b.n : a.c < b.c;
    });
    Line cur = *start;
    std::vector<Gamma> breaks;
    std::vector<Monomial> pieces{Monomial{Gamma::exp(cur.c), cur.n}};
    for (;;) {
        const Line* next = nullptr;
        Rational best_rho;
        for (const auto& l : lines) {
            if (l.n <= cur.n) continue;
            Rational rho = (cur.c - l.c) / (l.n - cur.n);
            if (!next || rho > best_rho || (rho == best_rho && l.n > next->n)) {
                next = &l;
                best_rho = rho;
            }
        }
        if (!next) break;
        breaks.push_back(Gamma::exp(best_rho));
        cur = *next;
        pieces.push_back(Monomial{Gamma::exp(cur.c), cur.n});
    }
    return PiecewiseMonomial(std::move(breaks), std::move(pieces));
}

bool PiecewiseMonomial::strictly_increasing() const {
    return std::all_of(pieces_.begin(), pieces_.end(), [](const Monomial& m) { return m.power > 0; });
}

Gamma PiecewiseMonomial::eval(const Gamma& r) const {
    if (r < domain_lo_ || (domain_hi_ && *domain_hi_ < r))
        fail(Errc::OutOfDomain, "argument outside the domain of the piecewise monomial");
    std::size_t k = 0;
    while (k < breaks_.size() && breaks_[k] < r) ++k;
    return pieces_[k].eval(r);
}

Gamma PiecewiseMonomial::invert(const Gamma& s) const {
    // A flat piece at level s makes the preimage an interval.
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        const Gamma& lo = k == 0 ? domain_lo_ : breaks_[k - 1];
        const std::optional<Gamma> hi = k < breaks_.size() ? std::optional<Gamma>(breaks_[k]) : domain_hi_;
        if (pieces_[k].power == 0 && pieces_[k].coeff == s && (!hi || lo < *hi))
            fail(Errc::NotInvertible, "flat piece: preimage is not unique");
    }
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        const Gamma& lo = k == 0 ? domain_lo_ : breaks_[k - 1];
        const std::optional<Gamma> hi = k < breaks_.size() ? std::optional<Gamma>(breaks_[k]) : domain_hi_;
        const Monomial& m = pieces_[k];
        if (m.coeff.is_zero()) continue;
        if (m.power == 0) continue;
        if (m.power < 0) fail(Errc::NotInvertible, "decreasing piece");
        Gamma r = (s / m.coeff).pow(Rational(1) / m.power);
        if (lo <= r && (!hi || r <= *hi)) return r;
    }
    fail(Errc::NotInImage, "value " + s.exponent_json() + " is not in the image");
}

PiecewiseMonomial PiecewiseMonomial::inverse() const {
    if (!strictly_increasing()) fail(Errc::NotInvertible, "map is not strictly increasing");
    std::vector<Gamma> breaks;
    std::vector<Monomial> pieces;
    for (std::size_t k = 0; k < breaks_.size(); ++k) breaks.push_back(eval(breaks_[k]));
    for (const auto& m : pieces_) {
        Rational inv = Rational(1) / m.power;
        pieces.push_back(Monomial{Gamma::one() / m.coeff.pow(inv), inv});
    }
    std::optional<Gamma> hi;
    if (domain_hi_) hi = eval(*domain_hi_);
    return PiecewiseMonomial(std::move(breaks), std::move(pieces), eval(domain_lo_), hi);
}

} // namespace berkline
