#include "cohiggs/hopf.hpp"

#include "cohiggs/errors.hpp"

#include <algorithm>

namespace cohiggs {

namespace {

void require_trace_free(const Mat2& a, const char* who) {
    if (!a.trace_free())
        throw DomainError("NotTraceFree", std::string(who) + " requires trace-free matrices");
}

// Nonzero vector spanning ker(A - t) for a nonzero trace-free A with
// t^2 = -det(A): image of (A + t), by Cayley-Hamilton.
Vec2 eigenvector_for(const Mat2& a, const TowerElem& t) {
    Mat2 shifted = a;
    shifted.m[0][0] = shifted.m[0][0] + t;
    shifted.m[1][1] = shifted.m[1][1] + t;
    for (int col = 0; col < 2; ++col) {
        Vec2 v{shifted.m[0][col], shifted.m[1][col]};
        if (!v.is_zero()) return v;
    }
    throw DomainError("InternalError", "no eigenvector found for nonzero matrix");
}

bool parallel(const Vec2& u, const Vec2& v) {
    return (u.x * v.y - u.y * v.x).is_zero();
}

bool invariant_under(const Mat2& a, const Vec2& v) { return parallel(a.apply(v), v); }

// Eigenvalue t of A in the tower: sqrt of -det(A), extending Q(i) if needed.
TowerElem tower_sqrt(const GaussQ& theta) {
    if (auto s = GaussQ::sqrt(theta)) return TowerElem(*s);
    return TowerElem::root(theta);
}

}  // namespace

TowerElem commutator_det(const Mat2& a1, const Mat2& a2) {
    require_trace_free(a1, "commutator_det");
    require_trace_free(a2, "commutator_det");
    return (a1 * a2 - a2 * a1).det();
}

CommonEigenvector common_eigenvector(const Mat2& a1, const Mat2& a2) {
    TowerElem d = commutator_det(a1, a2);
    if (!d.is_zero()) return {};

    CommonEigenvector out;
    out.found = true;
    if (a1.is_zero() && a2.is_zero()) {
        out.v = {TowerElem(GaussQ(Rational(1))), TowerElem(GaussQ(Rational(0)))};
        return out;
    }
    const Mat2& pivot = a1.is_zero() ? a2 : a1;
    const Mat2& other = a1.is_zero() ? a1 : a2;
    TowerElem t = tower_sqrt((-pivot.det()).as_base());
    for (const TowerElem& ev : {t, -t}) {
        Vec2 v = eigenvector_for(pivot, ev);
        if (invariant_under(other, v)) {
            out.v = v;
            return out;
        }
    }
    throw DomainError("InternalError", "vanishing commutator determinant without a shared eigenline");
}

NormalFormEven normal_form_even(const Mat2& a1, const Mat2& a2) {
    require_trace_free(a1, "normal_form_even");
    require_trace_free(a2, "normal_form_even");
    if (a1.is_zero() && a2.is_zero())
        throw DomainError("DegenerateInput", "normal_form_even needs a nonzero pair");

    NormalFormEven out;
    TowerElem d = commutator_det(a1, a2);
    if (d.is_zero()) {
        out.stable = false;
        out.common = common_eigenvector(a1, a2).v;
        return out;
    }
    out.stable = true;

    GaussQ theta = (-a1.det()).as_base();
    TowerElem t = tower_sqrt(theta);

    // Basis (v, w) with A1 v = t v and (A1 + t) w = v puts A1 into
    // [[t, 1], [0, -t]]. v is a nonzero column of A1 + t, so the matching
    // unit vector already solves (A1 + t) w = v.
    Mat2 shifted = a1;
    shifted.m[0][0] = shifted.m[0][0] + t;
    shifted.m[1][1] = shifted.m[1][1] + t;
    int col = shifted.m[0][0].is_zero() && shifted.m[1][0].is_zero() ? 1 : 0;
    Vec2 v{shifted.m[0][col], shifted.m[1][col]};
    Vec2 w = col == 0 ? Vec2{TowerElem(GaussQ(Rational(1))), TowerElem()}
                      : Vec2{TowerElem(), TowerElem(GaussQ(Rational(1)))};
    if (parallel(v, w)) {
        // Shift along ker(A1 + t), spanned by (m01, -m00) or (m11, -m10).
        Vec2 k{shifted.m[0][1], -shifted.m[0][0]};
        if (k.is_zero()) k = Vec2{shifted.m[1][1], -shifted.m[1][0]};
        w = {w.x + k.x, w.y + k.y};
    }
    Mat2 basis;
    basis.m[0][0] = v.x;
    basis.m[1][0] = v.y;
    basis.m[0][1] = w.x;
    basis.m[1][1] = w.y;
    Mat2 p1 = basis.inverse();

    Mat2 b2 = p1 * a2 * basis;
    TowerElem u = b2.m[0][0];
    TowerElem vv = b2.m[0][1];
    TowerElem s = b2.m[1][0];
    if (s.is_zero())
        throw DomainError("InternalError", "stable pair reduced to an upper-triangular second matrix");

    Mat2 c2m;  // [[1, -u/s], [0, 1/s]]
    c2m.m[0][0] = TowerElem(GaussQ(Rational(1)));
    c2m.m[0][1] = -(u / s);
    c2m.m[1][1] = s.inverse();
    out.certificate = c2m * p1;

    TowerElem two(GaussQ(Rational(2)));
    out.point.t_sq = theta;
    out.point.s_p = s + two * t * u;
    out.point.v_p = u * u + s * vv;

    out.nf1 = Mat2::zero();
    out.nf1.m[0][0] = t;
    out.nf1.m[0][1] = out.point.s_p;
    out.nf1.m[1][1] = -t;
    out.nf2 = Mat2::zero();
    out.nf2.m[0][1] = out.point.v_p;
    out.nf2.m[1][0] = TowerElem(GaussQ(Rational(1)));

    TowerElem four(GaussQ(Rational(4)));
    TowerElem ident = four * TowerElem(theta) * out.point.v_p - out.point.s_p * out.point.s_p;
    if (!(ident == d))
        throw DomainError("InternalError", "4 t^2 v' - s'^2 != det([A1, A2])");
    if (!(conjugate(out.certificate, a1) == out.nf1) ||
        !(conjugate(out.certificate, a2) == out.nf2))
        throw DomainError("InternalError", "certificate does not reproduce the normal form");
    return out;
}

NormalFormOdd normal_form_odd(const HomPoly& a, const HomPoly& b, const GaussQ& c) {
    if (a.deg != 1 || (!b.coeffs.empty() && b.deg != 2))
        throw DomainError("DegreeMismatch", "normal_form_odd needs deg a = 1, deg b = 2");
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw DomainError("DegenerateInput", "normal_form_odd needs a nonzero field");
    NormalFormOdd out;
    if (c.is_zero()) return out;  // O_X is invariant exactly when c = 0
    out.stable = true;
    GaussQ a1 = a.coeffs.empty() ? GaussQ() : a.coeffs[0];
    GaussQ a2 = a.coeffs.empty() ? GaussQ() : a.coeffs[1];
    GaussQ b1 = b.coeffs.empty() ? GaussQ() : b.coeffs[0];
    GaussQ b2 = b.coeffs.empty() ? GaussQ() : b.coeffs[1];
    GaussQ b3 = b.coeffs.empty() ? GaussQ() : b.coeffs[2];
    out.point.b1 = c * b1 + a1 * a1;
    out.point.b2 = c * b2 + GaussQ(Rational(2)) * a1 * a2;
    out.point.b3 = c * b3 + a2 * a2;
    return out;
}

bool integrability_check(const PolyMat2& phi1, const PolyMat2& phi2) {
    if (!phi1.trace_free() || !phi2.trace_free())
        throw DomainError("NotTraceFree", "integrability_check requires trace-free matrices");
    if (!phi1.is_zero() && !phi2.is_zero() && phi1.deg != phi2.deg)
        throw DomainError("DegreeMismatch", "wedge factors must share their entry degree");
    const HomPoly &a1 = phi1.e[0][0], &b1 = phi1.e[0][1], &c1 = phi1.e[1][0];
    const HomPoly &a2 = phi2.e[0][0], &b2 = phi2.e[0][1], &c2 = phi2.e[1][0];
    return (a1 * b2 - a2 * b1).is_zero() && (c1 * a2 - c2 * a1).is_zero() &&
           (b1 * c2 - b2 * c1).is_zero();
}

std::pair<GaussQ, GaussQ> normalize_scale(const GaussQ& alpha, const GaussQ& beta) {
    if (!alpha.is_zero()) return {GaussQ(Rational(1)), beta / alpha};
    if (!beta.is_zero()) return {GaussQ(), GaussQ(Rational(1))};
    return {GaussQ(Rational(1)), GaussQ()};
}

Proportionality proportionality_decompose(const PolyMat2& phi1, const PolyMat2& phi2) {
    Proportionality out;
    if (phi1.is_zero() && phi2.is_zero()) {
        out.proportional = true;
        out.phi0 = phi1;
        std::tie(out.alpha, out.beta) = normalize_scale(GaussQ(Rational(1)), GaussQ());
        return out;
    }
    if (phi1.is_zero()) {
        out.proportional = true;
        out.phi0 = phi2;
        std::tie(out.alpha, out.beta) = normalize_scale(GaussQ(), GaussQ(Rational(1)));
        return out;
    }
    // First nonzero coefficient of phi1 determines the candidate ratio.
    GaussQ k;
    bool have_k = false;
    for (int i = 0; i < 2 && !have_k; ++i)
        for (int j = 0; j < 2 && !have_k; ++j) {
            const auto& p = phi1.e[i][j].coeffs;
            const auto& q = phi2.e[i][j].coeffs;
            for (size_t n = 0; n < p.size(); ++n) {
                if (!p[n].is_zero()) {
                    k = (n < q.size() ? q[n] : GaussQ()) / p[n];
                    have_k = true;
                    break;
                }
            }
        }
    PolyMat2 scaled = phi1.scaled(k);
    if (!(scaled == phi2)) return out;  // proportional only through meromorphic functions
    out.proportional = true;
    out.phi0 = phi1;
    std::tie(out.alpha, out.beta) = normalize_scale(GaussQ(Rational(1)), k);
    return out;
}

H0Value h0_end0_twisted(const HopfH0Input& in) {
    if (in.c2 < 0) throw DomainError("InconsistentCase", "c2 must be nonnegative");
    if (in.regular_generic_fibre)
        return H0Value::exact(std::max<long long>(0, in.m + 2));
    if (in.extension_of_line_bundles) {
        if (in.c2 != 0)
            throw DomainError("InconsistentCase",
                              "a non-regular extension of line bundles has c2 = 0");
        if (in.m != in.ell || in.m < 0)
            throw DomainError("InconsistentCase", "the extension case forces m = ell >= 0");
        return H0Value::exact(std::max<long long>(6, in.m + 4));
    }
    if (in.c2 <= 0)
        throw DomainError("InconsistentCase", "the non-extension case needs c2 > 0");
    if (in.ell <= in.m)
        throw DomainError("InconsistentCase", "the non-extension case needs ell > m");
    return H0Value::exact(std::max<long long>(0, in.m + 2) +
                          std::max<long long>(0, in.m - in.ell + 2));
}

StabilityVerdict classify_pair(bool filtrable, long long c2, bool phi_nonzero, bool e_stable,
                               SplitShape shape) {
    (void)phi_nonzero;
    if (!filtrable) return StabilityVerdict::OnlyZeroHiggs;
    if (c2 > 0) return e_stable ? StabilityVerdict::StablePair : StabilityVerdict::NotStable;
    if (shape == SplitShape::KplusK || shape == SplitShape::KplusKminusT)
        return StabilityVerdict::StableCapable;
    return StabilityVerdict::NoStableHiggs;
}

std::string to_string(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::OnlyZeroHiggs: return "OnlyZeroHiggs";
        case StabilityVerdict::StablePair: return "StablePair";
        case StabilityVerdict::NotStable: return "NotStable";
        case StabilityVerdict::StableCapable: return "StableCapable";
        case StabilityVerdict::NoStableHiggs: return "NoStableHiggs";
    }
    return "?";
}

std::string to_string(SplitShape s) {
    switch (s) {
        case SplitShape::KplusK: return "KplusK";
        case SplitShape::KplusKminusT: return "KplusKminusT";
        case SplitShape::Other: return "Other";
    }
    return "?";
}

StableExample construct_stable_example(long long c2) {
    if (c2 < 1)
        throw DomainError("InvalidArgument", "the stable construction needs c2 >= 1");
    StableExample ex;
    ex.surface = SurfaceSpec{0, 1, Rational(1)};
    ex.l1 = LineBundleX{0, Rational(-1, 2), 0, 0, ""};  // degree 1/2
    ex.l2 = LineBundleX{0, Rational(0), 0, 0, ""};      // degree 0
    ex.fibre = "pt:b0";
    ex.deg_lambda = c2;
    ex.c2 = c2;
    // Destabilizers L_i(-T) of the modified bundle give
    // m = (deg L1 - 1) + (deg L2 - 1) - (deg L1 + deg L2 - 1) = -1.
    ex.m = -1;
    ex.stable = true;
    ex.h0_end0_twist = h0_end0_twisted({true, false, c2, ex.m, 0});
    ex.higgs_family_dim = 2 * ex.h0_end0_twist.value;
    return ex;
}

}  // namespace cohiggs
