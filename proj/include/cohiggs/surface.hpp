#pragma once

#include "cohiggs/rational.hpp"

#include <string>

namespace cohiggs {

// Non-Kaehler principal elliptic surface over a genus-g base, built from a
// degree-d line bundle and the quotient parameter tau. Only the ratio
// q = ln|a| / ln|tau| ever enters a formula, so tau_log is kept symbolic
// as a positive rational and |tau| is never evaluated.
struct SurfaceSpec {
    long long g = 0;
    long long d = 1;
    Rational tau_log = 1;
};

// Torsion line bundle in the decomposition H (x) L_a: h_deg = c1(H), q the
// tau-exponent of the constant factor of automorphy. n_delta is the degree of
// the minimal finite map realizing the spectral section (0 = constant section,
// torsion c1); e_inv is the e-invariant of the associated ruled surface,
// supplied by the caller. The phase of the automorphy factor never affects a
// degree, so it is kept as an opaque label.
struct LineBundleX {
    long long h_deg = 0;
    Rational q = 0;
    long long n_delta = 0;
    long long e_inv = 0;
    std::string phase;
};

SurfaceSpec validate_surface(const SurfaceSpec& spec);

// e-invariant range needs the genus, so bundle validation takes the spec.
void validate_line_bundle(const LineBundleX& lb, const SurfaceSpec& spec);
void validate_line_bundle_basic(const LineBundleX& lb);  // spec-independent part

// Unique representative with q in [0, 1) under (h_deg, q) ~ (h_deg + d, q + 1).
LineBundleX canonicalize(const LineBundleX& lb, const SurfaceSpec& spec);

// deg = h_deg - d * q, exactly.
Rational degree(const LineBundleX& lb, const SurfaceSpec& spec);

// Tensor product adds h_deg and q componentwise; spectral data is not modeled
// for products and is zeroed.
LineBundleX tensor(const LineBundleX& l1, const LineBundleX& l2);

// Default equality: canonical forms compared on (h_deg, q, n_delta, e_inv) only.
bool equal_ignoring_phase(const LineBundleX& l1, const LineBundleX& l2, const SurfaceSpec& spec);
bool equal_with_phase(const LineBundleX& l1, const LineBundleX& l2, const SurfaceSpec& spec);

}  // namespace cohiggs
