#pragma once

#include "cohiggs/field.hpp"
#include "cohiggs/invariants.hpp"
#include "cohiggs/surface.hpp"

#include <optional>
#include <string>

namespace cohiggs {

// det([A1, A2]) for a trace-free pair; vanishes exactly when the pair has a
// common eigenvector.
TowerElem commutator_det(const Mat2& a1, const Mat2& a2);

struct CommonEigenvector {
    bool found = false;
    Vec2 v;
};

// Decides via the commutator determinant; the witness vector is produced by
// enumerating the eigenlines of A1 (of A2 when A1 = 0) in the field tower.
CommonEigenvector common_eigenvector(const Mat2& a1, const Mat2& a2);

// Coordinates (t', s', v') of the even component: t' = t^2 stays in Q(i),
// s' and v' may live in the quadratic extension.
struct ModuliPointEven {
    GaussQ t_sq;
    TowerElem s_p, v_p;
};

struct NormalFormEven {
    bool stable = false;
    ModuliPointEven point;  // stable only
    Mat2 certificate;       // P with P A_i P^{-1} = nf_i
    Mat2 nf1, nf2;
    Vec2 common;            // unstable only
};

// Brings a stable pair to ([[t, s'], [0, -t]], [[0, v'], [1, 0]]), adjoining
// t with t^2 = -det(A1) when that is not a square in Q(i). Unstable pairs
// return the shared eigenvector instead. The identity
// det([A1, A2]) = 4 t^2 v' - s'^2 is asserted on every stable output.
NormalFormEven normal_form_even(const Mat2& a1, const Mat2& a2);

struct ModuliPointOdd {
    GaussQ b1, b2, b3;
};

struct NormalFormOdd {
    bool stable = false;
    ModuliPointOdd point;
};

// phi0 = [[a, b], [c, -a]] with deg a = 1, deg b = 2, c constant: stable iff
// c != 0, with conjugacy class b' = c*b + a^2.
NormalFormOdd normal_form_odd(const HomPoly& a, const HomPoly& b, const GaussQ& c);

// phi = Phi1 (x) e1 + Phi2 (x) e2 wedges to zero iff the three cross
// polynomials vanish identically.
bool integrability_check(const PolyMat2& phi1, const PolyMat2& phi2);

struct Proportionality {
    bool proportional = false;
    PolyMat2 phi0;
    GaussQ alpha, beta;  // scale [alpha : beta], first nonzero coordinate 1
};

// Detects the constant-proportional case (Phi1, Phi2) = (alpha, beta) * phi0;
// meromorphic-coefficient decompositions are reported NotProportional.
Proportionality proportionality_decompose(const PolyMat2& phi1, const PolyMat2& phi2);

struct HopfH0Input {
    bool regular_generic_fibre = false;
    bool extension_of_line_bundles = false;
    long long c2 = 0;
    long long m = 0;
    long long ell = 0;
};

// h^0(X, End0 E(T)) for filtrable rank-2 bundles on a Hopf surface:
//   regular:                       max(0, m+2)
//   non-regular, extension, c2=0:  max(6, m+4)   (requires m = ell >= 0)
//   non-regular, not extension:    max(0, m+2) + max(0, m-ell+2)  (c2>0, ell>m)
H0Value h0_end0_twisted(const HopfH0Input& in);

enum class SplitShape { KplusK, KplusKminusT, Other };
enum class StabilityVerdict { OnlyZeroHiggs, StablePair, NotStable, StableCapable, NoStableHiggs };

StabilityVerdict classify_pair(bool filtrable, long long c2, bool phi_nonzero, bool e_stable,
                               SplitShape shape);
std::string to_string(StabilityVerdict v);
std::string to_string(SplitShape s);

// Recipe for a stable co-Higgs bundle with prescribed c2 >= 1: two line
// bundles whose degrees differ by 1/2, one positive elementary modification.
struct StableExample {
    SurfaceSpec surface;
    LineBundleX l1, l2;
    std::string fibre;
    long long deg_lambda = 0;
    long long c2 = 0;
    long long m = 0;
    bool stable = true;
    H0Value h0_end0_twist;
    long long higgs_family_dim = 0;  // dim of trace-free tangent-twisted fields
};

StableExample construct_stable_example(long long c2);

// Moduli component dimension bookkeeping for c2 = 0: each component is
// Pic x (3 affine coordinates) x P^1.
inline constexpr int kEvenComponentCoords = 3;
inline constexpr int kOddComponentCoords = 3;
inline constexpr int kPicFactorDim = 1;
inline constexpr int kScaleFactorDim = 1;
inline constexpr int even_component_dimension() {
    return kEvenComponentCoords + kPicFactorDim + kScaleFactorDim;
}
inline constexpr int odd_component_dimension() {
    return kOddComponentCoords + kPicFactorDim + kScaleFactorDim;
}

// [alpha : beta] with the first nonzero coordinate normalized to 1.
std::pair<GaussQ, GaussQ> normalize_scale(const GaussQ& alpha, const GaussQ& beta);

}  // namespace cohiggs
