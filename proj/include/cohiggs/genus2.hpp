#pragma once

#include "cohiggs/invariants.hpp"
#include "cohiggs/jumps.hpp"
#include "cohiggs/surface.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cohiggs {

// Points on a genus-2 hyperelliptic curve: W1..W6 are the Weierstrass points
// (fixed by the involution), generic labels come in sheet pairs swapped by it.
using PointG2 = PointLabel;

PointG2 g2_involution(const PointG2& p);

// Formal Z-linear combination of points; zero coefficients are dropped.
struct DivisorG2 {
    std::map<PointG2, long long> coeff;

    void add(const PointG2& p, long long mult);
    long long degree() const;
    bool effective() const;
    DivisorG2 operator+(const DivisorG2& o) const;
    DivisorG2 scaled(long long k) const;
    bool operator==(const DivisorG2& o) const { return coeff == o.coeff; }
};

DivisorG2 g2_involution(const DivisorG2& d);

// Reduced divisor class built from exactly the relations
//   2 W(i) ~ K,   G(l,+) + G(l,-) ~ K,   sum W(i) ~ 3K.
// eps lives over the generators e_i = [W(i) - W(6)], i = 1..5, with
// e_1 + ... + e_5 = 0, so eps and its complement name the same class.
// Residual generic symbols are canonicalized to nonnegative coefficients on a
// single sheet per label (negatives flip through -p = i(p) - K); comparisons
// that would need a relation between distinct generic labels stay Unknown.
struct PicClassG2 {
    long long degree = 0;
    std::array<bool, 5> eps{};
    long long canonical_multiple = 0;
    std::map<std::pair<std::string, bool>, long long> residual;

    bool eps_trivial() const;
    int eps_weight() const;  // min(#set bits, 5 - #set bits)
    long long residual_degree() const;
};

PicClassG2 g2_class_reduce(const DivisorG2& d);

enum class Ternary { Yes, No, Unknown };

Ternary class_trivial(const PicClassG2& c);
Ternary class_equal(const PicClassG2& a, const PicClassG2& b);

// Signed formal sums of divisors, reduced in one pass.
PicClassG2 g2_class_combine(const std::vector<std::pair<DivisorG2, long long>>& terms);

// h^0 on genus 2: negative degree 0, deg >= 3 Riemann-Roch, deg 2 canonical
// test, deg 1 effectivity, deg 0 triviality; Undecidable propagates from
// residual generic symbols.
H0Value h0_genus2(const PicClassG2& c);

enum class FiltrableCase { RegularGeneric, PullbackExtension, NotExtension };

struct FiltrableInput {
    FiltrableCase kind = FiltrableCase::RegularGeneric;
    long long h_deg = 0;   // deg of H = pi_*(det(E)^{-1} K1 K2)
    long long l_deg = 0;   // NotExtension only
    bool f_stable = true;  // PullbackExtension only
    H0Flags flags;         // side conditions forwarded to h0_curve
};

// Dimension of the space of trace-free canonical-twisted Higgs fields on a
// filtrable bundle, by destabilizer shape.
H0Value filtrable_higgs_h0(const FiltrableInput& in, long long g);

struct NonFiltrableVerdict {
    enum class V { Exists, NotGuaranteed, None };
    V v = V::NotGuaranteed;
    std::optional<H0Value> h0;
};

NonFiltrableVerdict nonfiltrable_existence(long long g, const LineBundleX& delta, long long c2);
std::string to_string(NonFiltrableVerdict::V v);

struct G2HiggsInput {
    long long e_inv = 0;  // -2, -1 or 0
    long long k = 0;      // Delta = -e/4 + k/2
    std::vector<Jump> jumps;
    DivisorG2 R;                       // ramification divisor of the clean part
    std::optional<DivisorG2> n_clean;  // divisor D with clean pushforward O(D)
};

struct G2Verdict {
    enum class V { HiggsExists, NoHiggs, Undecidable };
    V v = V::Undecidable;
    H0Value h0;
    std::string citation;  // decision-table case tag, for auditability
};

// The genus-2 decision procedure: deg(N (x) K) routes to a sign test, a
// triviality test, an effectivity test or an unconditional existence case;
// ramification data refutes when the class of N is not supplied.
G2Verdict g2_higgs_decide(const G2HiggsInput& in);
std::string to_string(G2Verdict::V v);

enum class Smoothness { NotSmooth, Smooth, Unknown };

struct SmoothVerdict {
    Smoothness v = Smoothness::Unknown;
    std::string reason;
};

// Moduli smoothness for g >= 2. Without bundle data the verdict is the
// moduli-level table; with a G2HiggsInput it is the pointwise verdict at that
// bundle (singular exactly when a non-zero trace-free Higgs field exists).
SmoothVerdict smoothness_verdict(long long g, const LineBundleX& delta, long long c2,
                                 const std::optional<G2HiggsInput>& g2 = std::nullopt);
std::string to_string(Smoothness s);

}  // namespace cohiggs
