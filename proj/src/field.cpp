#include "cohiggs/field.hpp"

#include <algorithm>

namespace cohiggs {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw SchemaError("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(s);
            return Rational(n);
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw SchemaError("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception&) {
        throw SchemaError("malformed rational: " + s);
    }
}

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

static std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto n = exact_isqrt(numerator(r));
    auto d = exact_isqrt(denominator(r));
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) q -= 1;
    return q;
}

bool is_integral(const Rational& r) { return denominator(r) == 1; }

long long to_int64(const Rational& r) {
    if (!is_integral(r)) throw SchemaError("expected an integer, got " + format_rational(r));
    BigInt n = numerator(r);
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw SchemaError("integer out of range: " + n.str());
    return static_cast<long long>(n);
}

GaussQ GaussQ::inverse() const {
    Rational n = norm();
    if (n == 0) throw DomainError("DivisionByZero", "inverse of zero in Q(i)");
    return {re / n, -im / n};
}

std::optional<GaussQ> GaussQ::sqrt(const GaussQ& z) {
    // Solve (x + yi)^2 = a + bi over Q.
    const Rational& a = z.re;
    const Rational& b = z.im;
    if (b == 0) {
        if (a >= 0) {
            if (auto x = rational_sqrt(a)) return GaussQ(*x, Rational(0));
            return std::nullopt;
        }
        if (auto y = rational_sqrt(-a)) return GaussQ(Rational(0), *y);
        return std::nullopt;
    }
    auto r = rational_sqrt(a * a + b * b);
    if (!r) return std::nullopt;
    auto x = rational_sqrt((a + *r) / 2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = b / (2 * *x);
    GaussQ cand(*x, y);
    if (cand * cand == z) return cand;
    return std::nullopt;
}

TowerElem TowerElem::make(GaussQ a, GaussQ b, const GaussQ& theta) {
    TowerElem e(std::move(a), std::move(b), theta);
    e.normalize();
    return e;
}

const GaussQ& TowerElem::as_base() const {
    if (!in_base())
        throw DomainError("NestedExtension", "value does not lie in the base field Q(i)");
    return a_;
}

void TowerElem::normalize() {
    if (b_.is_zero()) theta_ = GaussQ();
}

GaussQ TowerElem::merge_theta(const TowerElem& x, const TowerElem& y) {
    if (x.in_base()) return y.theta_;
    if (y.in_base()) return x.theta_;
    if (x.theta_ != y.theta_)
        throw DomainError("NestedExtension",
                          "arithmetic across two distinct quadratic extensions");
    return x.theta_;
}

TowerElem TowerElem::operator-() const { return TowerElem(-a_, -b_, theta_); }

TowerElem TowerElem::operator+(const TowerElem& o) const {
    return make(a_ + o.a_, b_ + o.b_, merge_theta(*this, o));
}

TowerElem TowerElem::operator-(const TowerElem& o) const {
    return make(a_ - o.a_, b_ - o.b_, merge_theta(*this, o));
}

TowerElem TowerElem::operator*(const TowerElem& o) const {
    GaussQ th = merge_theta(*this, o);
    return make(a_ * o.a_ + b_ * o.b_ * th, a_ * o.b_ + b_ * o.a_, th);
}

TowerElem TowerElem::inverse() const {
    if (in_base()) return TowerElem(a_.inverse());
    GaussQ n = a_ * a_ - b_ * b_ * theta_;
    if (n.is_zero())
        throw DomainError("DivisionByZero", "non-invertible tower element (theta is a square)");
    GaussQ ninv = n.inverse();
    return make(a_ * ninv, -b_ * ninv, theta_);
}

bool TowerElem::operator==(const TowerElem& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    if (!b_.is_zero() && theta_ != o.theta_) return false;
    return true;
}

Mat2 Mat2::identity() {
    Mat2 r;
    r.m[0][0] = TowerElem(GaussQ(Rational(1)));
    r.m[1][1] = TowerElem(GaussQ(Rational(1)));
    return r;
}

Mat2 Mat2::from_gauss(const GaussQ& a, const GaussQ& b, const GaussQ& c, const GaussQ& d) {
    Mat2 r;
    r.m[0][0] = TowerElem(a);
    r.m[0][1] = TowerElem(b);
    r.m[1][0] = TowerElem(c);
    r.m[1][1] = TowerElem(d);
    return r;
}

bool Mat2::is_zero() const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!m[i][j].is_zero()) return false;
    return true;
}

Mat2 Mat2::operator+(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
}

Mat2 Mat2::operator-(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    return r;
}

Mat2 Mat2::scaled(const TowerElem& s) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] * s;
    return r;
}

Mat2 Mat2::inverse() const {
    TowerElem d = det();
    if (d.is_zero()) throw DomainError("DivisionByZero", "singular 2x2 matrix");
    TowerElem dinv = d.inverse();
    Mat2 r;
    r.m[0][0] = m[1][1] * dinv;
    r.m[0][1] = (-m[0][1]) * dinv;
    r.m[1][0] = (-m[1][0]) * dinv;
    r.m[1][1] = m[0][0] * dinv;
    return r;
}

Vec2 Mat2::apply(const Vec2& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
}

bool Mat2::operator==(const Mat2& o) const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!(m[i][j] == o.m[i][j])) return false;
    return true;
}

Mat2 conjugate(const Mat2& p, const Mat2& a) { return p * a * p.inverse(); }

HomPoly HomPoly::zero(int degree) {
    HomPoly p;
    p.deg = degree;
    return p;
}

HomPoly HomPoly::of(int degree, std::vector<GaussQ> cs) {
    if (!cs.empty() && static_cast<int>(cs.size()) != degree + 1)
        throw SchemaError("homogeneous polynomial of degree " + std::to_string(degree) +
                          " needs " + std::to_string(degree + 1) + " coefficients");
    HomPoly p;
    p.deg = degree;
    p.coeffs = std::move(cs);
    if (p.is_zero()) p.coeffs.clear();
    return p;
}

bool HomPoly::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const GaussQ& c) { return c.is_zero(); });
}

static std::vector<GaussQ> dense(const HomPoly& p) {
    if (!p.coeffs.empty()) return p.coeffs;
    return std::vector<GaussQ>(p.deg + 1, GaussQ());
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (deg != o.deg) throw DomainError("DegreeMismatch", "adding polynomials of unequal degree");
    auto a = dense(*this), b = dense(o);
    for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
    return of(deg, std::move(a));
}

HomPoly HomPoly::operator-(const HomPoly& o) const { return *this + o.scaled(GaussQ(Rational(-1))); }

HomPoly HomPoly::operator*(const HomPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(deg + o.deg);
    auto a = dense(*this), b = dense(o);
    std::vector<GaussQ> c(a.size() + b.size() - 1, GaussQ());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return of(deg + o.deg, std::move(c));
}

HomPoly HomPoly::scaled(const GaussQ& s) const {
    auto a = coeffs;
    for (auto& c : a) c = c * s;
    return of(deg, std::move(a));
}

bool HomPoly::operator==(const HomPoly& o) const {
    auto d = *this - o;
    return d.is_zero();
}

PolyMat2 PolyMat2::zero(int degree) {
    PolyMat2 p;
    p.deg = degree;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p.e[i][j] = HomPoly::zero(degree);
    return p;
}

bool PolyMat2::trace_free() const { return (e[0][0] + e[1][1]).is_zero(); }

bool PolyMat2::is_zero() const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!e[i][j].is_zero()) return false;
    return true;
}

PolyMat2 PolyMat2::scaled(const GaussQ& s) const {
    PolyMat2 p = *this;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p.e[i][j] = p.e[i][j].scaled(s);
    return p;
}

bool PolyMat2::operator==(const PolyMat2& o) const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!(e[i][j] == o.e[i][j])) return false;
    return true;
}

}  // namespace cohiggs
