#pragma once

#include "cohiggs/rational.hpp"
#include "cohiggs/surface.hpp"

#include <optional>
#include <string>

namespace cohiggs {

// Existence / filtrability classification of (delta, c2).
//   exists:                 Delta >= -e/4
//   filtrable_exists:       Delta >= m(2, delta)
//   in_nonfiltrable_range:  -e/4 <= Delta < m(2, delta)
struct RangeVerdict {
    bool exists = false;
    bool filtrable_exists = false;
    bool in_nonfiltrable_range = false;
    Rational delta;   // discriminant
    Rational m;       // filtrability threshold
    Rational floor_;  // existence threshold -e/4
};

// Delta(2, delta, c2) = c2/2 + n_delta/4. This fixes Delta = (4c2 - c1^2)/8
// with c1(delta)^2 = -2 n_delta, the unique normalization reproducing both
// Delta = c2/2 on Hopf surfaces and 4*Delta = -e_delta at the existence floor.
Rational discriminant(long long c2, const LineBundleX& delta);

// m(2, delta) = n_delta / 4.
Rational m_invariant(const LineBundleX& delta);

RangeVerdict classify_range(long long c2, const LineBundleX& delta);

// h^0 answer whose exactness may depend on genericity data.
struct H0Value {
    enum class Kind { Exact, Interval, Undecidable };
    Kind kind = Kind::Undecidable;
    long long value = 0;
    long long lo = 0, hi = 0;
    std::string note;

    static H0Value exact(long long v);
    static H0Value interval(long long lo, long long hi);
    static H0Value undecidable(std::string note);
    bool operator==(const H0Value& o) const;
};

// Optional side conditions for middle-degree h^0 answers. Absent flags are
// never guessed; generic means generic in the degree-d Picard component.
struct H0Flags {
    std::optional<bool> is_canonical;
    std::optional<bool> is_trivial;
    std::optional<bool> is_effective;
    std::optional<bool> generic;
};

// Riemann-Roch / Serre-duality engine for line bundles on a genus-g curve.
// deg < 0 and deg > 2g-2 are always exact; deg = 0 and deg = 2g-2 need the
// trivial / canonical flag; the only remaining genus <= 2 middle degree
// (g = 2, deg = 1) is decided by effectivity; everything else is an interval
// [max(0, deg+1-g), floor(deg/2)+1] unless generic pins chi+.
H0Value h0_curve(long long deg, long long g, const H0Flags& flags = {});

// Largest h^0 any line bundle of the given degree can have (Clifford bound in
// the special range).
long long h0_upper_bound(long long deg, long long g);

enum class TwistKind { Tangent, Cotangent, LineBundle };
enum class GateVerdict { NoStablePairs, OnlyScalarFields, Possible };

// Gates ruling out non-trivial stable pairs before any computation:
// negative-degree line-bundle twists admit none, trivial twists only scalar
// fields, and the tangent/cotangent cases reduce to the base-genus dichotomy.
GateVerdict twist_gate(const Rational& v_deg, bool v_is_trivial, long long genus, TwistKind which);

std::string to_string(GateVerdict v);

}  // namespace cohiggs
