#pragma once

#include "cohiggs/invariants.hpp"
#include "cohiggs/surface.hpp"

#include <map>
#include <string>
#include <vector>

namespace cohiggs {

// Point on the base curve: Weierstrass index (genus 2), a generic point with
// a hyperelliptic sheet, or an opaque label for other genera.
struct PointLabel {
    enum class Kind { Weierstrass, Generic, Opaque };
    Kind kind = Kind::Opaque;
    int w = 0;               // 1..6, Weierstrass only
    std::string label;       // Generic / Opaque
    bool sheet_plus = true;  // Generic only

    static PointLabel weierstrass(int i);
    static PointLabel generic(std::string label, bool plus);
    static PointLabel opaque(std::string label);

    bool operator==(const PointLabel& o) const;
    bool operator<(const PointLabel& o) const;
    std::string str() const;
};

// Fibre where the bundle restricts unstably, recorded by its full heights
// profile h0 >= h1 >= ... >= h_{l-1} > 0 so the allowable-modification chain
// can be replayed.
struct Jump {
    PointLabel at;
    std::vector<long long> heights;
};

struct JumpStats {
    long long l = 0;   // length
    long long mu = 0;  // multiplicity
    long long s = 0;   // number of distinct heights
};

JumpStats jump_stats(const Jump& j);

struct BundleDescriptor {
    LineBundleX delta;
    long long c2 = 0;
    std::vector<Jump> jumps;
    bool filtrable = false;
    bool regular_generic_fibre = false;
};

// Checks jump profiles, the ledger bound sum(l) <= 2*Delta, and that a
// non-filtrable descriptor sits in the non-filtrable range (or is the Hopf
// positive-c2 case).
void validate_descriptor(const BundleDescriptor& desc);

// Elementary modification along the fibre over b by a degree-deg_lambda line
// bundle: det twists by the pullback of O(-b), c2 grows by deg_lambda.
// Negative degrees must be the allowable modification (deg_lambda = -h0);
// positive degrees need deg_lambda >= h0 and push a new top height.
BundleDescriptor apply_modification(const BundleDescriptor& desc, const PointLabel& b,
                                    long long deg_lambda);

struct Reduction {
    BundleDescriptor clean;
    Rational delta_shift;                  // (1/2) sum of multiplicities
    std::map<PointLabel, long long> twist;  // s_i at each jump point
};

// Removes every jump by its allowable chain; the pushforward of End0 untwists
// by the returned divisor.
Reduction reduce_jumps(const BundleDescriptor& desc);

struct Pushforward {
    Rational deg_N;
    Rational deg_R;
    bool n_sq_is_minus_r = false;
};

// deg N = -4*Delta(clean) - sum(s_i), deg R = 8*Delta(clean); the identity
// 2*deg N = -deg R is asserted on the jump-free part.
Pushforward pushforward_and_ramification(const BundleDescriptor& desc);

}  // namespace cohiggs
