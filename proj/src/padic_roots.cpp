#include "berkline/padic_roots.hpp"

#include <algorithm>
#include <map>

namespace berkline {

namespace {

Integer ipow(unsigned long p, unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

Rational eval(const std::vector<Rational>& f, const Rational& x) {
    Rational acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Rational> derivative(const std::vector<Rational>& f) {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
    return d;
}

// v_p(x), with std::nullopt standing for +inf.
std::optional<long> vp(const Rational& x, unsigned long p) {
    if (x == 0) return std::nullopt;
    return padic_order(x, p);
}

bool vp_at_least(const Rational& x, unsigned long p, long n) {
    auto v = vp(x, p);
    return !v || *v >= n;
}

std::vector<Rational> trimmed(std::vector<Rational> f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

// Synthetic division by (u - r); the remainder is dropped.
std::vector<Rational> deflate(const std::vector<Rational>& f, const Rational& r) {
    std::vector<Rational> q(f.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = f.size(); i-- > 1;) {
        carry = carry * r + f[i];
        q[i - 1] = carry;
    }
    return q;
}

// Positive divisors of |n| by trial division; n != 0.
std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::map<Integer, unsigned> factors;
    for (Integer d = 2; d * d <= n; ++d) {
        if (d > 2000000) {
            if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
                fail(Errc::InvalidArgument, "coefficient too large to enumerate rational root candidates");
            break;
        }
        while (n % d == 0) {
            ++factors[d];
            n /= d;
        }
    }
    if (n > 1) ++factors[n];
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [q, e] : factors) {
        std::size_t base = divs.size();
        Integer pw = 1;
        for (unsigned k = 0; k < e; ++k) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

} // namespace

// ---------------------------------------------------------------------------

CappedPadic::CappedPadic(unsigned long p, const Rational& value, long precision) : p_(p), precision_(precision) {
    if (value == 0 || padic_order(value, p) >= precision) {
        valuation_ = precision;
        unit_ = 0;
        return;
    }
    valuation_ = padic_order(value, p);
    Integer pk = ipow(p, static_cast<unsigned long>(std::labs(valuation_)));
    Rational u = valuation_ >= 0 ? Rational(value / pk) : Rational(value * pk);
    Integer modulus = ipow(p, static_cast<unsigned long>(precision_ - valuation_));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), u.get_den_mpz_t(), modulus.get_mpz_t());
    unit_ = u.get_num() * inv;
    mpz_mod(unit_.get_mpz_t(), unit_.get_mpz_t(), modulus.get_mpz_t());
}

Rational CappedPadic::representative() const {
    if (unit_ == 0) return Rational(0);
    Integer pk = ipow(p_, static_cast<unsigned long>(std::labs(valuation_)));
    return valuation_ >= 0 ? Rational(unit_ * pk) : make_rational(unit_, pk);
}

bool CappedPadic::agrees_mod(const CappedPadic& o, long n) const {
    if (p_ != o.p_) fail(Errc::MixedFields, "p-adic numbers for different primes");
    if (n > precision_ || n > o.precision_) fail(Errc::PrecisionLoss, "comparison beyond the known precision");
    return vp_at_least(representative() - o.representative(), p_, n);
}

CappedPadic operator+(const CappedPadic& a, const CappedPadic& b) {
    if (a.p_ != b.p_) fail(Errc::MixedFields, "p-adic numbers for different primes");
    return CappedPadic(a.p_, a.representative() + b.representative(), std::min(a.precision_, b.precision_));
}

CappedPadic operator-(const CappedPadic& a, const CappedPadic& b) {
    if (a.p_ != b.p_) fail(Errc::MixedFields, "p-adic numbers for different primes");
    return CappedPadic(a.p_, a.representative() - b.representative(), std::min(a.precision_, b.precision_));
}

CappedPadic operator*(const CappedPadic& a, const CappedPadic& b) {
    if (a.p_ != b.p_) fail(Errc::MixedFields, "p-adic numbers for different primes");
    long prec = std::min(a.precision_ + b.valuation_, b.precision_ + a.valuation_);
    return CappedPadic(a.p_, a.representative() * b.representative(), prec);
}

// ---------------------------------------------------------------------------

std::vector<Rational> NewtonPolygon::root_valuations() const {
    std::vector<Rational> out;
    for (const auto& s : slopes)
        for (long k = 0; k < s.length; ++k) out.push_back(-s.slope);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

NewtonPolygon lower_hull(std::vector<NewtonPolygon::Vertex> pts) {
    if (pts.empty()) fail(Errc::InvalidArgument, "Newton polygon of the zero polynomial");
    std::vector<NewtonPolygon::Vertex> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // Drop b unless it lies strictly below the chord a-q.
            Rational cross = (b.w - a.w) * (q.i - a.i) - (q.w - a.w) * (b.i - a.i);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(q);
    }
    NewtonPolygon np;
    np.vertices = hull;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        long len = hull[k + 1].i - hull[k].i;
        np.slopes.push_back({(hull[k + 1].w - hull[k].w) / len, len});
    }
    return np;
}

} // namespace

NewtonPolygon newton_polygon(const std::vector<Rational>& coeffs, unsigned long p) {
    std::vector<NewtonPolygon::Vertex> pts;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) pts.push_back({static_cast<long>(i), Rational(padic_order(coeffs[i], p))});
    return lower_hull(std::move(pts));
}

NewtonPolygon newton_polygon(const Poly& f) {
    std::vector<NewtonPolygon::Vertex> pts;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (!f.coeffs()[i].is_zero()) pts.push_back({static_cast<long>(i), val(f.coeffs()[i]).exponent()});
    return lower_hull(std::move(pts));
}

// ---------------------------------------------------------------------------

CappedPadic hensel_lift(const std::vector<Rational>& f_in, unsigned long p, const Rational& a0, long N) {
    const Field field = Field::padic(p);
    const auto f = trimmed(f_in);
    if (f.size() < 2) fail(Errc::InvalidArgument, "Hensel lifting needs a polynomial of degree >= 1");
    const auto df = derivative(f);

    const Rational f0 = eval(f, a0);
    const Rational d0 = eval(df, a0);
    if (f0 == 0) return CappedPadic(p, a0, std::max(N, padic_order(a0 == 0 ? Rational(1) : a0, p) + 1));
    if (d0 == 0) fail(Errc::CriterionFails, "f'(a0) = 0");
    const long e = padic_order(d0, p);
    if (!(padic_order(f0, p) > 2 * e))
        fail(Errc::CriterionFails, "v(f(a0)) = " + std::to_string(padic_order(f0, p)) + " is not > 2 v(f'(a0)) = " +
                                       std::to_string(2 * e));

    long min_coeff = 0;
    for (const auto& c : f)
        if (c != 0) min_coeff = std::min(min_coeff, padic_order(c, p));
    long cap = N + std::labs(e) - min_coeff + 2;

    Rational a = a0;
    long last = padic_order(f0, p);
    for (int iter = 0; iter < 256; ++iter) {
        Rational fa = eval(f, a);
        if (fa == 0 || padic_order(fa, p) >= N) {
            if (!vp_at_least(a - a0, p, e + 1)) fail(Errc::PrecisionLoss, "Hensel iteration left the root's class");
            return CappedPadic(p, a, std::max(cap, N));
        }
        long now = padic_order(fa, p);
        if (iter > 0 && now <= last) cap += N; // reduction too coarse, widen it
        last = now;
        Rational da = eval(df, a);
        if (da == 0) fail(Errc::PrecisionLoss, "derivative vanished during Hensel iteration");
        a = truncate_expansion(FieldElem(field, Rational(a - fa / da)), Rational(cap)).rational();
    }
    fail(Errc::PrecisionLoss, "Hensel iteration did not reach the requested precision");
}

// ---------------------------------------------------------------------------

std::vector<std::pair<Rational, int>> rational_roots(const std::vector<Rational>& f_in) {
    auto f = trimmed(f_in);
    if (f.empty()) fail(Errc::InvalidArgument, "roots of the zero polynomial");
    std::vector<std::pair<Rational, int>> roots;

    std::size_t zeros = 0;
    while (f[zeros] == 0) ++zeros;
    if (zeros) roots.emplace_back(Rational(0), static_cast<int>(zeros));
    f.erase(f.begin(), f.begin() + static_cast<long>(zeros));

    Integer lcm = 1;
    for (const auto& c : f) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : f) ints.push_back(Rational(c * lcm).get_num());

    if (f.size() >= 2) {
        std::vector<Integer> num_divs = divisors(ints.front());
        std::vector<Integer> den_divs = divisors(ints.back());
        std::vector<Rational> cands;
        for (const auto& a : num_divs)
            for (const auto& b : den_divs) {
                cands.push_back(make_rational(a, b));
                cands.push_back(make_rational(-a, b));
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& r : cands) {
            int mult = 0;
            while (f.size() >= 2 && eval(f, r) == 0) {
                f = deflate(f, r);
                ++mult;
            }
            if (mult) roots.emplace_back(r, mult);
            if (f.size() < 2) break;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------

namespace {

// Roots in Z_p of an integral polynomial g without rational roots, by
// refining residue classes until Hensel's criterion isolates a root.
void search_integral_roots(const std::vector<Rational>& g, unsigned long p, long N, long depth_limit,
                           bool only_positive_valuation, std::vector<PadicRoot>& out, long& unresolved) {
    const auto dg = derivative(g);
    struct Node {
        Integer a;
        long k;
    };
    std::vector<Node> stack{{Integer(0), 0}};
    while (!stack.empty()) {
        Node node = stack.back();
        stack.pop_back();
        const Rational a(node.a);
        const Rational ga = eval(g, a);
        const Rational da = eval(dg, a);
        if (node.k > 0 && da != 0) {
            long e = padic_order(da, p);
            if (e < node.k && padic_order(ga, p) > 2 * e) {
                CappedPadic root = hensel_lift(g, p, a, N + e);
                Rational rep = root.representative();
                if (vp_at_least(rep - a, p, node.k)) {
                    long certified = padic_order(eval(g, rep), p) - e;
                    out.push_back(PadicRoot{CappedPadic(p, rep, certified), certified});
                }
                continue;
            }
        }
        if (node.k >= depth_limit) {
            ++unresolved;
            continue;
        }
        Integer pk = ipow(p, static_cast<unsigned long>(node.k));
        for (unsigned long d = p; d-- > 0;) {
            if (node.k == 0 && only_positive_valuation && d != 0) continue;
            Integer child = node.a + pk * d;
            if (vp_at_least(eval(g, Rational(child)), p, node.k + 1)) stack.push_back({child, node.k + 1});
        }
    }
}

std::vector<Rational> make_integral(std::vector<Rational> g, unsigned long p) {
    long m = 0;
    bool first = true;
    for (const auto& c : g)
        if (c != 0) {
            long v = padic_order(c, p);
            m = first ? v : std::min(m, v);
            first = false;
        }
    Rational scale = m >= 0 ? make_rational(1, ipow(p, static_cast<unsigned long>(m)))
                            : Rational(ipow(p, static_cast<unsigned long>(-m)));
    for (auto& c : g) c *= scale;
    return g;
}

} // namespace

PadicRootReport padic_roots(const std::vector<Rational>& f_in, unsigned long p, long N) {
    Field::padic(p);
    if (N < 1) fail(Errc::InvalidArgument, "precision must be positive");
    PadicRootReport report;
    report.rational = rational_roots(f_in);
    auto g = trimmed(f_in);
    for (const auto& [r, m] : report.rational)
        for (int k = 0; k < m; ++k) g = deflate(g, r);
    if (g.size() < 2) return report;

    const long depth = N + 16;
    auto gi = make_integral(g, p);
    search_integral_roots(gi, p, N, depth, false, report.lifted, report.unresolved);

    // Roots of negative valuation: roots of positive valuation of the reversal.
    std::vector<Rational> rev(g.rbegin(), g.rend());
    std::vector<PadicRoot> inverted;
    search_integral_roots(make_integral(rev, p), p, N, depth, true, inverted, report.unresolved);
    for (const auto& r : inverted) {
        Rational beta = r.value.representative();
        long k = padic_order(beta, p);
        long cert = r.certified - 2 * k;
        report.lifted.push_back(PadicRoot{CappedPadic(p, Rational(1 / beta), cert), cert});
    }
    return report;
}

std::optional<std::vector<std::pair<FieldElem, int>>> split_roots(const Poly& f) {
    if (f.is_zero()) fail(Errc::InvalidArgument, "roots of the zero polynomial");
    std::vector<std::pair<FieldElem, int>> out;
    if (f.degree() == 0) return out;
    if (f.degree() == 1) {
        out.emplace_back(-f.coeff(0) / f.coeff(1), 1);
        return out;
    }
    if (!f.has_rational_coeffs()) return std::nullopt;
    long total = 0;
    for (const auto& [r, m] : rational_roots(f.rational_coeffs())) {
        out.emplace_back(FieldElem(f.field(), r), m);
        total += m;
    }
    if (total != f.degree()) return std::nullopt;
    return out;
}

} // namespace berkline
