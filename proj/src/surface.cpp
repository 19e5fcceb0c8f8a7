#include "cohiggs/surface.hpp"

#include "cohiggs/errors.hpp"

namespace cohiggs {

SurfaceSpec validate_surface(const SurfaceSpec& spec) {
    if (spec.g < 0) throw DomainError("NegativeGenus", "base genus must be nonnegative");
    if (spec.d == 0)
        throw DomainError("KaehlerCase", "d = 0 gives a Kaehler surface, which is out of scope");
    if (spec.d < 0) throw DomainError("InvalidTwistDegree", "d must be a positive integer");
    if (spec.tau_log <= 0) throw DomainError("InvalidTau", "tau_log must be a positive rational");
    return spec;
}

void validate_line_bundle_basic(const LineBundleX& lb) {
    if (lb.n_delta < 0)
        throw DomainError("InvalidLineBundle", "n_delta must be a nonnegative integer");
}

void validate_line_bundle(const LineBundleX& lb, const SurfaceSpec& spec) {
    validate_line_bundle_basic(lb);
    if (lb.e_inv < -spec.g || lb.e_inv > 0)
        throw DomainError("InvalidLineBundle", "e_inv must satisfy -g <= e_inv <= 0");
}

LineBundleX canonicalize(const LineBundleX& lb, const SurfaceSpec& spec) {
    LineBundleX out = lb;
    BigInt k = rational_floor(lb.q);
    out.q = lb.q - Rational(k);
    BigInt h = BigInt(lb.h_deg) - k * spec.d;
    if (h > std::numeric_limits<long long>::max() || h < std::numeric_limits<long long>::min())
        throw DomainError("InvalidLineBundle", "canonical h_deg out of range");
    out.h_deg = static_cast<long long>(h);
    return out;
}

Rational degree(const LineBundleX& lb, const SurfaceSpec& spec) {
    return Rational(lb.h_deg) - Rational(spec.d) * lb.q;
}

LineBundleX tensor(const LineBundleX& l1, const LineBundleX& l2) {
    LineBundleX out;
    out.h_deg = l1.h_deg + l2.h_deg;
    out.q = l1.q + l2.q;
    return out;
}

bool equal_ignoring_phase(const LineBundleX& l1, const LineBundleX& l2, const SurfaceSpec& spec) {
    LineBundleX a = canonicalize(l1, spec), b = canonicalize(l2, spec);
    return a.h_deg == b.h_deg && a.q == b.q && a.n_delta == b.n_delta && a.e_inv == b.e_inv;
}

bool equal_with_phase(const LineBundleX& l1, const LineBundleX& l2, const SurfaceSpec& spec) {
    return equal_ignoring_phase(l1, l2, spec) && l1.phase == l2.phase;
}

}  // namespace cohiggs
