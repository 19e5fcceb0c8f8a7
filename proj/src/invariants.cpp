#include "cohiggs/invariants.hpp"

#include "cohiggs/errors.hpp"

#include <algorithm>

namespace cohiggs {

Rational discriminant(long long c2, const LineBundleX& delta) {
    validate_line_bundle_basic(delta);
    return Rational(c2, 2) + Rational(delta.n_delta, 4);
}

Rational m_invariant(const LineBundleX& delta) {
    validate_line_bundle_basic(delta);
    return Rational(delta.n_delta, 4);
}

RangeVerdict classify_range(long long c2, const LineBundleX& delta) {
    RangeVerdict v;
    v.delta = discriminant(c2, delta);
    v.m = m_invariant(delta);
    v.floor_ = Rational(-delta.e_inv, 4);
    v.exists = v.delta >= v.floor_;
    v.filtrable_exists = v.delta >= v.m;
    v.in_nonfiltrable_range = v.exists && v.delta < v.m;
    return v;
}

H0Value H0Value::exact(long long v) {
    H0Value h;
    h.kind = Kind::Exact;
    h.value = h.lo = h.hi = v;
    return h;
}

H0Value H0Value::interval(long long lo, long long hi) {
    if (lo > hi) throw DomainError("InvalidInterval", "h0 interval with lo > hi");
    if (lo == hi) return exact(lo);
    H0Value h;
    h.kind = Kind::Interval;
    h.lo = lo;
    h.hi = hi;
    return h;
}

H0Value H0Value::undecidable(std::string note) {
    H0Value h;
    h.kind = Kind::Undecidable;
    h.note = std::move(note);
    return h;
}

bool H0Value::operator==(const H0Value& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Exact: return value == o.value;
        case Kind::Interval: return lo == o.lo && hi == o.hi;
        case Kind::Undecidable: return true;
    }
    return false;
}

long long h0_upper_bound(long long deg, long long g) {
    if (deg < 0) return 0;
    if (deg > 2 * g - 2) return deg + 1 - g;
    if (deg == 0) return 1;
    return deg / 2 + 1;
}

H0Value h0_curve(long long deg, long long g, const H0Flags& flags) {
    if (g < 0) throw DomainError("NegativeGenus", "h0_curve needs g >= 0");
    if (deg < 0) return H0Value::exact(0);
    if (deg > 2 * g - 2) return H0Value::exact(deg + 1 - g);

    // From here 0 <= deg <= 2g-2, so g >= 1.
    if (deg == 0) {
        if (flags.is_trivial) return H0Value::exact(*flags.is_trivial ? 1 : 0);
        if (g == 1 && flags.is_canonical) return H0Value::exact(*flags.is_canonical ? 1 : 0);
        if (flags.generic && *flags.generic) return H0Value::exact(0);
        return H0Value::undecidable("is_trivial");
    }
    if (deg == 2 * g - 2) {
        if (flags.is_canonical) return H0Value::exact(*flags.is_canonical ? g : g - 1);
        if (flags.generic && *flags.generic) return H0Value::exact(g - 1);
        return H0Value::undecidable("is_canonical");
    }
    if (g == 2 && deg == 1) {
        if (flags.is_effective) return H0Value::exact(*flags.is_effective ? 1 : 0);
        if (flags.generic && *flags.generic) return H0Value::exact(0);
        return H0Value::undecidable("is_effective");
    }
    long long chi_plus = std::max<long long>(0, deg + 1 - g);
    if (flags.generic && *flags.generic) return H0Value::exact(chi_plus);
    long long hi = h0_upper_bound(deg, g);
    long long lo = chi_plus;
    if (flags.is_effective && *flags.is_effective) lo = std::max<long long>(lo, 1);
    return H0Value::interval(lo, hi);
}

GateVerdict twist_gate(const Rational& v_deg, bool v_is_trivial, long long genus, TwistKind which) {
    switch (which) {
        case TwistKind::LineBundle:
            if (v_deg < 0) return GateVerdict::NoStablePairs;
            if (v_is_trivial) return GateVerdict::OnlyScalarFields;
            return GateVerdict::Possible;
        case TwistKind::Tangent:
            return genus >= 1 ? GateVerdict::NoStablePairs : GateVerdict::Possible;
        case TwistKind::Cotangent:
            return genus <= 1 ? GateVerdict::NoStablePairs : GateVerdict::Possible;
    }
    throw DomainError("InvalidArgument", "unknown twist kind");
}

std::string to_string(GateVerdict v) {
    switch (v) {
        case GateVerdict::NoStablePairs: return "NoStablePairs";
        case GateVerdict::OnlyScalarFields: return "OnlyScalarFields";
        case GateVerdict::Possible: return "Possible";
    }
    return "?";
}

}  // namespace cohiggs
