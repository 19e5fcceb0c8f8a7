#pragma once

#include "cohiggs/errors.hpp"
#include "cohiggs/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace cohiggs {

// Element of Q(i).
struct GaussQ {
    Rational re, im;

    GaussQ() = default;
    GaussQ(Rational r) : re(std::move(r)) {}
    GaussQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussQ conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussQ operator-() const { return {-re, -im}; }
    GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
    GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
    GaussQ operator*(const GaussQ& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussQ inverse() const;
    GaussQ operator/(const GaussQ& o) const { return *this * o.inverse(); }
    bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussQ& o) const { return !(*this == o); }

    // Some s+ti with (s+ti)^2 == *this, when one exists in Q(i).
    static std::optional<GaussQ> sqrt(const GaussQ& z);
};

// Element a + b*t of the tower K = Q(i) or K(t) with t^2 = theta in K.
// theta is carried only while b != 0; a single quadratic extension is
// supported and mixing two different ones raises NestedExtension.
class TowerElem {
public:
    TowerElem() = default;
    TowerElem(GaussQ base) : a_(std::move(base)) {}
    static TowerElem root(const GaussQ& theta) { return TowerElem(GaussQ(Rational(0)), GaussQ(Rational(1)), theta); }
    static TowerElem make(GaussQ a, GaussQ b, const GaussQ& theta);

    const GaussQ& base_part() const { return a_; }
    const GaussQ& ext_part() const { return b_; }
    const GaussQ& theta() const { return theta_; }
    bool in_base() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    // Requires in_base().
    const GaussQ& as_base() const;

    TowerElem operator-() const;
    TowerElem operator+(const TowerElem& o) const;
    TowerElem operator-(const TowerElem& o) const;
    TowerElem operator*(const TowerElem& o) const;
    TowerElem inverse() const;
    TowerElem operator/(const TowerElem& o) const { return *this * o.inverse(); }
    bool operator==(const TowerElem& o) const;
    bool operator!=(const TowerElem& o) const { return !(*this == o); }

private:
    TowerElem(GaussQ a, GaussQ b, GaussQ theta)
        : a_(std::move(a)), b_(std::move(b)), theta_(std::move(theta)) {}
    static GaussQ merge_theta(const TowerElem& x, const TowerElem& y);
    void normalize();

    GaussQ a_, b_, theta_;
};

struct Vec2 {
    TowerElem x, y;
    bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

struct Mat2 {
    std::array<std::array<TowerElem, 2>, 2> m;

    static Mat2 zero() { return {}; }
    static Mat2 identity();
    static Mat2 from_gauss(const GaussQ& a, const GaussQ& b, const GaussQ& c, const GaussQ& d);

    TowerElem trace() const { return m[0][0] + m[1][1]; }
    TowerElem det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    bool is_zero() const;
    bool trace_free() const { return trace().is_zero(); }

    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(const Mat2& o) const;
    Mat2 scaled(const TowerElem& s) const;
    Mat2 inverse() const;
    Vec2 apply(const Vec2& v) const;
    bool operator==(const Mat2& o) const;
};

Mat2 conjugate(const Mat2& p, const Mat2& a);  // p a p^{-1}

// Homogeneous polynomial in (x, y) over Q(i); coeffs[i] multiplies x^(deg-i) y^i.
struct HomPoly {
    int deg = 0;
    std::vector<GaussQ> coeffs;  // size deg + 1; empty means the zero polynomial

    static HomPoly zero(int degree);
    static HomPoly of(int degree, std::vector<GaussQ> cs);

    bool is_zero() const;
    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator*(const HomPoly& o) const;
    HomPoly scaled(const GaussQ& s) const;
    bool operator==(const HomPoly& o) const;
};

// 2x2 matrix of homogeneous polynomials sharing one total degree.
struct PolyMat2 {
    int deg = 0;
    std::array<std::array<HomPoly, 2>, 2> e;

    static PolyMat2 zero(int degree);
    bool trace_free() const;
    bool is_zero() const;
    PolyMat2 scaled(const GaussQ& s) const;
    bool operator==(const PolyMat2& o) const;
};

}  // namespace cohiggs
