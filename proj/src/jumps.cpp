#include "cohiggs/jumps.hpp"

#include "cohiggs/errors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace cohiggs {

PointLabel PointLabel::weierstrass(int i) {
    if (i < 1 || i > 6)
        throw SchemaError("Weierstrass index must be in 1..6, got " + std::to_string(i));
    PointLabel p;
    p.kind = Kind::Weierstrass;
    p.w = i;
    return p;
}

PointLabel PointLabel::generic(std::string label, bool plus) {
    PointLabel p;
    p.kind = Kind::Generic;
    p.label = std::move(label);
    p.sheet_plus = plus;
    return p;
}

PointLabel PointLabel::opaque(std::string label) {
    PointLabel p;
    p.kind = Kind::Opaque;
    p.label = std::move(label);
    return p;
}

bool PointLabel::operator==(const PointLabel& o) const {
    return kind == o.kind && w == o.w && label == o.label && sheet_plus == o.sheet_plus;
}

bool PointLabel::operator<(const PointLabel& o) const {
    return std::tie(kind, w, label, sheet_plus) < std::tie(o.kind, o.w, o.label, o.sheet_plus);
}

std::string PointLabel::str() const {
    switch (kind) {
        case Kind::Weierstrass: return "W" + std::to_string(w);
        case Kind::Generic: return label + (sheet_plus ? "+" : "-");
        case Kind::Opaque: return "pt:" + label;
    }
    return "?";
}

static void validate_jump(const Jump& j) {
    if (j.heights.empty())
        throw DomainError("InvalidDescriptor", "jump at " + j.at.str() + " has no heights");
    long long prev = std::numeric_limits<long long>::max();
    for (long long h : j.heights) {
        if (h <= 0)
            throw DomainError("InvalidDescriptor", "jump heights must be positive");
        if (h > prev)
            throw DomainError("InvalidDescriptor", "jump heights must be non-increasing");
        prev = h;
    }
}

JumpStats jump_stats(const Jump& j) {
    validate_jump(j);
    JumpStats st;
    st.l = static_cast<long long>(j.heights.size());
    for (long long h : j.heights) st.mu += h;
    std::set<long long> distinct(j.heights.begin(), j.heights.end());
    st.s = static_cast<long long>(distinct.size());
    return st;
}

void validate_descriptor(const BundleDescriptor& desc) {
    validate_line_bundle_basic(desc.delta);
    Rational dd = discriminant(desc.c2, desc.delta);
    long long total_l = 0;
    std::set<PointLabel> seen;
    for (const auto& j : desc.jumps) {
        validate_jump(j);
        if (!seen.insert(j.at).second)
            throw DomainError("InvalidDescriptor", "two jumps at " + j.at.str());
        total_l += static_cast<long long>(j.heights.size());
    }
    if (Rational(total_l) > 2 * dd)
        throw DomainError("LedgerViolation",
                          "total jump length exceeds 2*Delta = " + format_rational(2 * dd));
    if (!desc.filtrable) {
        RangeVerdict rv = classify_range(desc.c2, desc.delta);
        bool hopf_case = desc.delta.n_delta == 0 && desc.c2 > 0;
        if (!rv.in_nonfiltrable_range && !hopf_case)
            throw DomainError("InvalidDescriptor",
                              "non-filtrable descriptor outside the non-filtrable range");
    }
}

BundleDescriptor apply_modification(const BundleDescriptor& desc, const PointLabel& b,
                                    long long deg_lambda) {
    validate_descriptor(desc);
    BundleDescriptor out = desc;
    out.delta.h_deg -= 1;
    out.c2 += deg_lambda;

    auto it = std::find_if(out.jumps.begin(), out.jumps.end(),
                           [&](const Jump& j) { return j.at == b; });
    if (deg_lambda < 0) {
        if (it == out.jumps.end())
            throw DomainError("InvalidModification",
                              "negative-degree modification at a fibre with no jump");
        if (it->heights.front() != -deg_lambda)
            throw DomainError("InvalidModification",
                              "only the allowable modification (deg_lambda = -h0) is defined");
        it->heights.erase(it->heights.begin());
        if (it->heights.empty()) out.jumps.erase(it);
    } else if (deg_lambda > 0) {
        if (it == out.jumps.end()) {
            out.jumps.push_back(Jump{b, {deg_lambda}});
        } else {
            if (deg_lambda < it->heights.front())
                throw DomainError("InvalidModification",
                                  "positive modification needs degree >= current height");
            it->heights.insert(it->heights.begin(), deg_lambda);
        }
    }
    validate_descriptor(out);
    return out;
}

Reduction reduce_jumps(const BundleDescriptor& desc) {
    validate_descriptor(desc);
    if (desc.filtrable)
        throw DomainError("NotNonFiltrable", "jump reduction applies to non-filtrable bundles");
    Reduction red;
    red.clean = desc;
    red.clean.jumps.clear();
    long long total_mu = 0, total_l = 0;
    for (const auto& j : desc.jumps) {
        JumpStats st = jump_stats(j);
        total_mu += st.mu;
        total_l += st.l;
        red.twist[j.at] = st.s;
    }
    red.clean.c2 = desc.c2 - total_mu;
    red.clean.delta.h_deg = desc.delta.h_deg - total_l;
    red.delta_shift = Rational(total_mu, 2);
    if (discriminant(red.clean.c2, red.clean.delta) < 0)
        throw DomainError("LedgerViolation",
                          "jump multiplicities exceed the discriminant; no clean bundle exists");
    return red;
}

Pushforward pushforward_and_ramification(const BundleDescriptor& desc) {
    Reduction red = reduce_jumps(desc);  // throws NotNonFiltrable for filtrable input
    Rational clean_delta = discriminant(red.clean.c2, red.clean.delta);
    long long s_total = 0;
    for (const auto& [pt, s] : red.twist) s_total += s;

    Pushforward pf;
    pf.deg_R = 8 * clean_delta;
    Rational clean_deg_n = -4 * clean_delta;
    pf.deg_N = clean_deg_n - s_total;
    pf.n_sq_is_minus_r = (2 * clean_deg_n == -pf.deg_R);
    if (!pf.n_sq_is_minus_r)
        throw DomainError("InternalError", "2 deg N != -deg R on the jump-free part");
    return pf;
}

}  // namespace cohiggs
