#include "berkline/valfield.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace berkline {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::NotInImage: return "NotInImage";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::SkeletonMissesPath: return "SkeletonMissesPath";
    case Errc::TimeOutOfRange: return "TimeOutOfRange";
    case Errc::NonSplitFunction: return "NonSplitFunction";
    case Errc::DenominatorVanishes: return "DenominatorVanishes";
    case Errc::IncompleteRoots: return "IncompleteRoots";
    case Errc::NonSplitDerivative: return "NonSplitDerivative";
    case Errc::DivisorTooSmall: return "DivisorTooSmall";
    case Errc::CriterionFails: return "CriterionFails";
    case Errc::PrecisionLoss: return "PrecisionLoss";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Rationals

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    auto parse_int = [&](const std::string& s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) fail(Errc::Parse, "malformed rational '" + text + "'");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') fail(Errc::Parse, "malformed rational '" + text + "'");
        return Integer(s[0] == '+' ? s.substr(1) : s, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) fail(Errc::Parse, "zero denominator in '" + text + "'");
    return make_rational(parse_int(text.substr(0, slash)), den);
}

std::string rational_json(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_pretty(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return rational_json(q);
}

Integer floor_div(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_div(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long padic_order(const Integer& n, unsigned long p) {
    if (n == 0) fail(Errc::InvalidArgument, "valuation of zero integer");
    Integer rest;
    Integer prime(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long padic_order(const Rational& q, unsigned long p) {
    return padic_order(q.get_num(), p) - padic_order(q.get_den(), p);
}

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& QPoly::leading() const {
    if (coeffs_.empty()) fail(Errc::InvalidArgument, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

std::size_t QPoly::low_order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    fail(Errc::InvalidArgument, "order of zero polynomial");
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    Rational lead = leading();
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) c /= lead;
    return QPoly(std::move(v));
}

QPoly QPoly::shift_down(std::size_t k) const {
    if (k >= coeffs_.size()) return QPoly();
    return QPoly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

QPoly QPoly::shift_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Rational> v(k, Rational(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(v));
}

QPoly QPoly::truncated(std::size_t n) const {
    if (n >= coeffs_.size()) return *this;
    return QPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) c = -c;
    return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPoly(std::move(v));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> r(a.coeffs_);
    long db = b.degree();
    long da = a.degree();
    std::vector<Rational> q(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, Rational(0));
    for (long k = da - db; k >= 0; --k) {
        Rational c = r[static_cast<std::size_t>(k + db)] / b.leading();
        q[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (long j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
    }
    quot = QPoly(std::move(q));
    rem = QPoly(std::move(r));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------
// Field

Field Field::padic(unsigned long p) {
    if (p < 2) fail(Errc::InvalidArgument, "p must be a prime >= 2");
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) fail(Errc::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
    return Field(Kind::Padic, p);
}

Field Field::tadic() { return Field(Kind::Tadic, 0); }

std::string Field::uniformizer_name() const {
    return is_padic() ? std::to_string(prime_) : std::string("t");
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(const Field& field, const Rational& q)
    : field_(field),
      value_(field.is_padic() ? std::variant<Rational, RatFunc>(q)
                              : std::variant<Rational, RatFunc>(RatFunc{QPoly::constant(q), QPoly::constant(1)})) {}

FieldElem::FieldElem(const Field& field, long q) : FieldElem(field, Rational(q)) {}

RatFunc FieldElem::reduce(QPoly num, QPoly den) {
    if (den.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) return RatFunc{QPoly(), QPoly::constant(1)};
    QPoly g = QPoly::gcd(num, den);
    QPoly qn, qd, r;
    QPoly::divmod(num, g, qn, r);
    QPoly::divmod(den, g, qd, r);
    Rational lead = qd.leading();
    std::vector<Rational> nc(qn.coeffs());
    for (auto& c : nc) c /= lead;
    return RatFunc{QPoly(std::move(nc)), qd.monic()};
}

FieldElem FieldElem::ratfunc(const QPoly& num, const QPoly& den) {
    return FieldElem(Field::tadic(), reduce(num, den));
}

FieldElem FieldElem::uniformizer(const Field& field) {
    if (field.is_padic()) return FieldElem(field, Rational(static_cast<long>(field.prime())));
    return ratfunc(QPoly::monomial(1, 1), QPoly::constant(1));
}

bool FieldElem::is_zero() const noexcept {
    if (auto q = std::get_if<Rational>(&value_)) return *q == 0;
    return std::get<RatFunc>(value_).num.is_zero();
}

bool FieldElem::is_rational() const noexcept {
    if (std::holds_alternative<Rational>(value_)) return true;
    const auto& f = std::get<RatFunc>(value_);
    return f.num.degree() <= 0 && f.den.degree() == 0;
}

const Rational& FieldElem::rational() const {
    if (auto q = std::get_if<Rational>(&value_)) return *q;
    const auto& f = std::get<RatFunc>(value_);
    if (f.num.degree() > 0 || f.den.degree() != 0)
        fail(Errc::InvalidArgument, "element of Q(t) is not a constant");
    static const Rational zero(0);
    return f.num.is_zero() ? zero : f.num.coeffs()[0];
}

const RatFunc& FieldElem::ratfunc_value() const {
    if (auto f = std::get_if<RatFunc>(&value_)) return *f;
    fail(Errc::MixedFields, "element of Q_p used as element of Q(t)");
}

void FieldElem::check_same(const FieldElem& o) const {
    if (!(field_ == o.field_)) fail(Errc::MixedFields, "operands belong to different base fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    if (field_.is_padic()) return FieldElem(field_, Rational(std::get<Rational>(value_) + std::get<Rational>(o.value_)));
    const auto& a = std::get<RatFunc>(value_);
    const auto& b = std::get<RatFunc>(o.value_);
    if (a.den == b.den) return FieldElem(field_, reduce(a.num + b.num, a.den));
    return FieldElem(field_, reduce(a.num * b.den + b.num * a.den, a.den * b.den));
}

FieldElem FieldElem::operator-() const {
    if (field_.is_padic()) return FieldElem(field_, Rational(-std::get<Rational>(value_)));
    const auto& a = std::get<RatFunc>(value_);
    return FieldElem(field_, RatFunc{-a.num, a.den});
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    if (field_.is_padic()) return FieldElem(field_, Rational(std::get<Rational>(value_) * std::get<Rational>(o.value_)));
    const auto& a = std::get<RatFunc>(value_);
    const auto& b = std::get<RatFunc>(o.value_);
    return FieldElem(field_, reduce(a.num * b.num, a.den * b.den));
}

FieldElem FieldElem::inv() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    if (field_.is_padic()) return FieldElem(field_, Rational(1 / std::get<Rational>(value_)));
    const auto& a = std::get<RatFunc>(value_);
    return FieldElem(field_, reduce(a.den, a.num));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same(o);
    return *this * o.inv();
}

FieldElem FieldElem::pow(unsigned long n) const {
    FieldElem result(field_, Rational(1));
    FieldElem base = *this;
    while (n) {
        if (n & 1UL) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

namespace {

std::string coeff_list(const QPoly& p, bool pretty) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ",";
        s += pretty ? rational_pretty(p.coeffs()[i]) : rational_json(p.coeffs()[i]);
    }
    return s + "]";
}

std::string poly_in_t(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rational& c = p.coeffs()[i];
        if (c == 0) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        std::string cs;
        Rational ac = abs(c);
        if (i == 0 || ac != 1) cs = rational_pretty(ac);
        if (!cs.empty() && !mono.empty()) cs += "*";
        if (!s.empty()) s += c < 0 ? "-" : "+";
        else if (c < 0) s += "-";
        s += cs + mono;
    }
    return s;
}

} // namespace

std::string FieldElem::key() const {
    if (field_.is_padic()) return rational_json(std::get<Rational>(value_));
    const auto& f = std::get<RatFunc>(value_);
    return coeff_list(f.num, false) + "/" + coeff_list(f.den, false);
}

std::string FieldElem::pretty() const {
    if (field_.is_padic()) return rational_pretty(std::get<Rational>(value_));
    const auto& f = std::get<RatFunc>(value_);
    if (f.den.degree() == 0) return poly_in_t(f.num);
    return "(" + poly_in_t(f.num) + ")/(" + poly_in_t(f.den) + ")";
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.pretty(); }

// ---------------------------------------------------------------------------
// Gamma

const Rational& Gamma::exponent() const {
    if (zero_) fail(Errc::InvalidArgument, "exponent of the zero value");
    return w_;
}

Gamma Gamma::operator*(const Gamma& o) const {
    if (zero_ || o.zero_) return zero();
    return exp(w_ + o.w_);
}

Gamma Gamma::operator/(const Gamma& o) const {
    if (o.zero_) fail(Errc::DivisionByZero, "division by the zero value");
    if (zero_) return zero();
    return exp(w_ - o.w_);
}

Gamma Gamma::pow(const Rational& n) const {
    if (zero_) {
        if (n < 0) fail(Errc::DivisionByZero, "negative power of the zero value");
        return n == 0 ? one() : zero();
    }
    return exp(w_ * n);
}

bool operator==(const Gamma& a, const Gamma& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.w_ == b.w_;
}

std::strong_ordering operator<=>(const Gamma& a, const Gamma& b) {
    if (a.zero_ && b.zero_) return std::strong_ordering::equal;
    if (a.zero_) return std::strong_ordering::less;
    if (b.zero_) return std::strong_ordering::greater;
    int c = cmp(b.w_, a.w_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Gamma::exponent_json() const { return zero_ ? "inf" : rational_json(w_); }

std::string Gamma::pretty(const Field& field) const {
    if (zero_) return "0";
    if (w_ == 0) return "1";
    return field.uniformizer_name() + "^" + rational_pretty(Rational(-w_));
}

// ---------------------------------------------------------------------------

Gamma val(const FieldElem& x) {
    if (x.is_zero()) return Gamma::zero();
    if (x.field().is_padic()) return Gamma::exp(padic_order(x.rational(), x.field().prime()));
    const auto& f = x.ratfunc_value();
    return Gamma::exp(static_cast<long>(f.num.low_order()) - static_cast<long>(f.den.low_order()));
}

Gamma dist(const FieldElem& x, const FieldElem& y) { return val(x - y); }

FieldElem truncate_expansion(const FieldElem& x, const Rational& w) {
    const Field& field = x.field();
    if (x.is_zero()) return x;
    long v = static_cast<long>(val(x).exponent().get_num().get_si());
    Integer m = ceil_div(w);
    if (Integer(v) >= m) return FieldElem(field, 0L);
    unsigned long digits = static_cast<unsigned long>(Integer(m - v).get_ui());

    if (field.is_padic()) {
        const Rational& q = x.rational();
        Integer pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), field.prime(), static_cast<unsigned long>(std::labs(v)));
        Rational unit = v >= 0 ? Rational(q / pk) : Rational(q * pk);
        Integer modulus;
        mpz_ui_pow_ui(modulus.get_mpz_t(), field.prime(), digits);
        Integer inv_den;
        mpz_invert(inv_den.get_mpz_t(), unit.get_den_mpz_t(), modulus.get_mpz_t());
        Integer r = unit.get_num() * inv_den;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
        Rational result = v >= 0 ? Rational(r * pk) : make_rational(r, pk);
        return FieldElem(field, result);
    }

    // t-adic: power-series division of the unit part up to `digits` terms.
    const auto& f = x.ratfunc_value();
    QPoly num = f.num.shift_down(f.num.low_order());
    QPoly den = f.den.shift_down(f.den.low_order());
    std::vector<Rational> series(digits, Rational(0));
    const Rational d0 = den.coeff(0);
    for (std::size_t k = 0; k < digits; ++k) {
        Rational acc = num.coeff(k);
        for (std::size_t j = 1; j <= k; ++j) acc -= den.coeff(j) * series[k - j];
        series[k] = acc / d0;
    }
    QPoly trunc(std::move(series));
    if (v >= 0) return FieldElem::ratfunc(trunc.shift_up(static_cast<std::size_t>(v)), QPoly::constant(1));
    return FieldElem::ratfunc(trunc, QPoly::monomial(1, static_cast<std::size_t>(-v)));
}

} // namespace berkline
