#include "cohiggs/genus2.hpp"

#include "cohiggs/errors.hpp"

#include <algorithm>
#include <set>

namespace cohiggs {

PointG2 g2_involution(const PointG2& p) {
    switch (p.kind) {
        case PointLabel::Kind::Weierstrass: return p;
        case PointLabel::Kind::Generic: return PointLabel::generic(p.label, !p.sheet_plus);
        case PointLabel::Kind::Opaque:
            throw DomainError("InvalidInput", "involution of an opaque point label");
    }
    throw DomainError("InvalidInput", "bad point label");
}

void DivisorG2::add(const PointG2& p, long long mult) {
    if (p.kind == PointLabel::Kind::Opaque)
        throw SchemaError("genus-2 divisors need Weierstrass or generic points");
    if (mult == 0) return;
    auto [it, inserted] = coeff.emplace(p, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) coeff.erase(it);
    }
}

long long DivisorG2::degree() const {
    long long d = 0;
    for (const auto& [p, m] : coeff) d += m;
    return d;
}

bool DivisorG2::effective() const {
    return std::all_of(coeff.begin(), coeff.end(), [](const auto& e) { return e.second > 0; });
}

DivisorG2 DivisorG2::operator+(const DivisorG2& o) const {
    DivisorG2 r = *this;
    for (const auto& [p, m] : o.coeff) r.add(p, m);
    return r;
}

DivisorG2 DivisorG2::scaled(long long k) const {
    DivisorG2 r;
    for (const auto& [p, m] : coeff) r.add(p, m * k);
    return r;
}

DivisorG2 g2_involution(const DivisorG2& d) {
    DivisorG2 r;
    for (const auto& [p, m] : d.coeff) r.add(g2_involution(p), m);
    return r;
}

bool PicClassG2::eps_trivial() const {
    int n = 0;
    for (bool b : eps) n += b;
    return n == 0 || n == 5;
}

int PicClassG2::eps_weight() const {
    int n = 0;
    for (bool b : eps) n += b;
    return std::min(n, 5 - n);
}

long long PicClassG2::residual_degree() const {
    long long d = 0;
    for (const auto& [sym, m] : residual) d += m;
    return d;
}

PicClassG2 g2_class_reduce(const DivisorG2& d) {
    return g2_class_combine({{d, 1}});
}

PicClassG2 g2_class_combine(const std::vector<std::pair<DivisorG2, long long>>& terms) {
    std::array<long long, 7> wcoef{};  // 1..6 used
    // label -> (plus coeff, minus coeff)
    std::map<std::string, std::pair<long long, long long>> gen;
    long long degree = 0;

    for (const auto& [div, k] : terms) {
        for (const auto& [p, m0] : div.coeff) {
            long long m = m0 * k;
            degree += m;
            if (p.kind == PointLabel::Kind::Weierstrass) {
                wcoef[p.w] += m;
            } else {
                auto& g = gen[p.label];
                (p.sheet_plus ? g.first : g.second) += m;
            }
        }
    }

    long long kappa = 0;  // multiples of K split off (degree bookkeeping only)
    PicClassG2 out;
    out.degree = degree;

    for (auto& [label, cs] : gen) {
        auto& [cp, cm] = cs;
        // -p = i(p) - K, so negatives flip sheet.
        if (cp < 0) { cm += -cp; kappa += cp; cp = 0; }
        if (cm < 0) { cp += -cm; kappa += cm; cm = 0; }
        long long pairs = std::min(cp, cm);  // p + i(p) = K
        kappa += pairs;
        cp -= pairs;
        cm -= pairs;
        if (cp > 0) out.residual[{label, true}] = cp;
        if (cm > 0) out.residual[{label, false}] = cm;
    }

    long long n6 = 0;
    for (int i = 1; i <= 6; ++i) {
        long long r = ((wcoef[i] % 2) + 2) % 2;
        kappa += (wcoef[i] - r) / 2;  // 2 W(i) = K
        if (r) {
            if (i <= 5) out.eps[i - 1] = true;
            n6 += 1;  // W(i) = e_i + W(6)
        }
    }
    kappa += (n6 - (n6 % 2 + 2) % 2) / 2;
    n6 = n6 % 2;

    long long rdeg = out.residual_degree();
    if (2 * kappa + n6 + rdeg != degree)
        throw DomainError("InternalError", "divisor class reduction lost degree");
    out.canonical_multiple = kappa;
    return out;
}

static DivisorG2 class_to_divisor(const PicClassG2& c) {
    DivisorG2 d;
    long long w6 = c.degree - c.residual_degree();  // 2*kappa + n6 copies of W6
    for (int i = 0; i < 5; ++i)
        if (c.eps[i]) {
            d.add(PointLabel::weierstrass(i + 1), 1);
            w6 -= 1;
        }
    d.add(PointLabel::weierstrass(6), w6);
    for (const auto& [sym, m] : c.residual)
        d.add(PointLabel::generic(sym.first, sym.second), m);
    return d;
}

Ternary class_trivial(const PicClassG2& c) {
    if (c.residual.empty()) {
        return (c.degree == 0 && c.eps_trivial()) ? Ternary::Yes : Ternary::No;
    }
    // One leftover generic symbol of coefficient 1 cannot be linearly
    // equivalent to a pure Weierstrass-symbol class: the point would have to
    // be a Weierstrass point, and generic labels are not.
    if (c.residual.size() == 1) {
        long long m = c.residual.begin()->second;
        if (m == 1) return Ternary::No;
        if (m == 2) {
            // 2p ~ T with T the Weierstrass part; decidable only for T = K.
            PicClassG2 t = c;
            t.residual.clear();
            t.degree -= 2;
            t.canonical_multiple = (t.degree - t.residual_degree()) / 2;
            // class is trivial iff 2[p] = -T; -T = [K] <=> T = -[K]
            if (t.degree == -2 && t.eps_trivial()) return Ternary::No;
        }
    }
    return Ternary::Unknown;
}

Ternary class_equal(const PicClassG2& a, const PicClassG2& b) {
    PicClassG2 diff =
        g2_class_combine({{class_to_divisor(a), 1}, {class_to_divisor(b), -1}});
    return class_trivial(diff);
}

H0Value h0_genus2(const PicClassG2& c) {
    long long d = c.degree;
    if (d < 0) return H0Value::exact(0);
    if (d >= 3) return H0Value::exact(d - 1);
    if (d == 0) {
        switch (class_trivial(c)) {
            case Ternary::Yes: return H0Value::exact(1);
            case Ternary::No: return H0Value::exact(0);
            case Ternary::Unknown: return H0Value::undecidable("triviality of residual class");
        }
    }
    if (d == 1) {
        // Effective <=> the class is a point class.
        if (c.residual.empty()) return H0Value::exact(c.eps_weight() <= 1 ? 1 : 0);
        if (c.residual.size() == 1 && c.residual.begin()->second == 1 && c.eps_trivial())
            return H0Value::exact(1);
        return H0Value::undecidable("effectivity of residual class");
    }
    // d == 2: h0 = 2 iff canonical, else 1.
    DivisorG2 k2;
    k2.add(PointLabel::weierstrass(6), 2);
    switch (class_equal(c, g2_class_reduce(k2))) {
        case Ternary::Yes: return H0Value::exact(2);
        case Ternary::No: return H0Value::exact(1);
        case Ternary::Unknown: return H0Value::undecidable("canonicality of residual class");
    }
    return H0Value::undecidable("unreachable");
}

H0Value filtrable_higgs_h0(const FiltrableInput& in, long long g) {
    if (g < 2) throw DomainError("InvalidGenus", "filtrable Higgs dimensions need g >= 2");
    switch (in.kind) {
        case FiltrableCase::RegularGeneric:
            // H = O(-b): h0(K(-b)) = g-1 for every point b.
            if (in.h_deg == -1) return H0Value::exact(g - 1);
            return h0_curve(in.h_deg + 2 * g - 2, g, in.flags);
        case FiltrableCase::PullbackExtension:
            if (!in.f_stable)
                return H0Value::undecidable("pullback of an unstable pair");
            return H0Value::exact(3 * (g - 1));
        case FiltrableCase::NotExtension: {
            H0Value base = in.h_deg == -1 ? H0Value::exact(g - 1)
                                          : h0_curve(in.h_deg + 2 * g - 2, g, in.flags);
            if (base.kind == H0Value::Kind::Undecidable) return base;
            long long slack = h0_upper_bound(in.l_deg + 2 * g - 2, g);
            if (slack == 0) return base;  // the lower bound is already an isomorphism
            return H0Value::interval(base.lo, base.hi + slack);
        }
    }
    throw DomainError("InvalidArgument", "unknown filtrable case");
}

std::string to_string(NonFiltrableVerdict::V v) {
    switch (v) {
        case NonFiltrableVerdict::V::Exists: return "Exists";
        case NonFiltrableVerdict::V::NotGuaranteed: return "NotGuaranteed";
        case NonFiltrableVerdict::V::None: return "None";
    }
    return "?";
}

NonFiltrableVerdict nonfiltrable_existence(long long g, const LineBundleX& delta, long long c2) {
    if (g < 2) throw DomainError("InvalidGenus", "nonfiltrable existence table needs g >= 2");
    RangeVerdict rv = classify_range(c2, delta);
    if (!rv.in_nonfiltrable_range)
        throw DomainError("RangeError", "(delta, c2) is not in the non-filtrable range");
    const long long e = delta.e_inv;
    NonFiltrableVerdict out;
    if (rv.delta == rv.floor_ && e > 1 - g) {
        out.v = NonFiltrableVerdict::V::Exists;
        if (rv.delta == 0) {
            // Unramified spectral cover: the pushforward is a non-trivial
            // half-period and the count is exactly g-1.
            out.h0 = H0Value::exact(g - 1);
        }
        return out;
    }
    if (rv.delta > rv.floor_ && e > 2 - g && g >= 3) {
        out.v = NonFiltrableVerdict::V::Exists;
        return out;
    }
    if (g == 2) {
        if (e == 0) {
            out.v = NonFiltrableVerdict::V::Exists;
            return out;
        }
        if (e == -2 && rv.delta > Rational(1, 2)) {
            out.v = NonFiltrableVerdict::V::None;
            return out;
        }
    }
    out.v = NonFiltrableVerdict::V::NotGuaranteed;
    return out;
}

namespace {

struct G2Data {
    Rational delta;        // -e/4 + k/2
    Rational clean_delta;  // delta - (1/2) sum mu
    long long s_total = 0;
    long long deg_n = 0;  // of the full pushforward
    std::vector<std::pair<PointG2, long long>> twists;  // (b_i, s_i)
};

G2Data validate_g2_input(const G2HiggsInput& in) {
    if (in.e_inv < -2 || in.e_inv > 0)
        throw DomainError("InvalidInput", "genus-2 e-invariant must be -2, -1 or 0");
    if (in.k < 0) throw DomainError("InvalidInput", "k must be nonnegative");

    G2Data d;
    d.delta = Rational(-in.e_inv, 4) + Rational(in.k, 2);
    long long total_mu = 0, total_l = 0;
    std::set<PointG2> seen;
    for (const auto& j : in.jumps) {
        if (j.at.kind == PointLabel::Kind::Opaque)
            throw DomainError("InvalidInput", "genus-2 jumps need Weierstrass or generic points");
        JumpStats st = jump_stats(j);
        total_mu += st.mu;
        total_l += st.l;
        d.s_total += st.s;
        d.twists.emplace_back(j.at, st.s);
        if (!seen.insert(j.at).second)
            throw DomainError("InvalidInput", "two jumps over " + j.at.str());
    }
    if (Rational(total_l) > 2 * d.delta)
        throw DomainError("LedgerViolation", "total jump length exceeds 2*Delta");
    d.clean_delta = d.delta - Rational(total_mu, 2);
    if (d.clean_delta < 0)
        throw DomainError("InvalidInput", "jump multiplicities exceed the discriminant");

    if (!in.R.effective())
        throw DomainError("InvalidInput", "the ramification divisor must be effective");
    if (Rational(in.R.degree()) != 8 * d.clean_delta)
        throw DomainError("InconsistentInput",
                          "deg R must equal 8*Delta of the clean part");

    Rational deg_n_clean = -4 * d.clean_delta;
    Rational deg_n = deg_n_clean - d.s_total;
    if (!is_integral(deg_n)) throw DomainError("InternalError", "deg N not integral");
    d.deg_n = to_int64(deg_n);

    if (in.n_clean) {
        if (Rational(in.n_clean->degree()) != deg_n_clean)
            throw DomainError("InconsistentInput",
                              "deg of the clean pushforward must be -4*Delta(clean)");
        // N_clean^2 = O(-R)
        PicClassG2 check = g2_class_combine({{*in.n_clean, 2}, {in.R, 1}});
        if (class_trivial(check) == Ternary::No)
            throw DomainError("InconsistentInput", "N^2 != O(-R) for the supplied data");
        if (deg_n_clean == 0 && class_trivial(g2_class_reduce(*in.n_clean)) == Ternary::Yes)
            throw DomainError("InconsistentInput",
                              "a stable bundle has no trivial pushforward of End0");
    }
    return d;
}

PicClassG2 twisted_class(const G2HiggsInput& in, const G2Data& d) {
    // [N (x) K] = [N_clean] + [K] - sum s_i [b_i]
    std::vector<std::pair<DivisorG2, long long>> terms;
    terms.push_back({*in.n_clean, 1});
    DivisorG2 k2;
    k2.add(PointLabel::weierstrass(6), 2);
    terms.push_back({k2, 1});
    for (const auto& [b, s] : d.twists) {
        DivisorG2 pt;
        pt.add(b, 1);
        terms.push_back({pt, -s});
    }
    return g2_class_combine(terms);
}

}  // namespace

std::string to_string(G2Verdict::V v) {
    switch (v) {
        case G2Verdict::V::HiggsExists: return "HiggsExists";
        case G2Verdict::V::NoHiggs: return "NoHiggs";
        case G2Verdict::V::Undecidable: return "Undecidable";
    }
    return "?";
}

G2Verdict g2_higgs_decide(const G2HiggsInput& in) {
    G2Data d = validate_g2_input(in);
    long long deg_nk = d.deg_n + 2;

    G2Verdict out;
    if (deg_nk < 0) {
        out.v = G2Verdict::V::NoHiggs;
        out.h0 = H0Value::exact(0);
        out.citation = "twist-degree-negative";
        return out;
    }
    if (deg_nk == 0) {
        if (in.n_clean) {
            PicClassG2 c = twisted_class(in, d);
            switch (class_trivial(c)) {
                case Ternary::Yes:
                    out.v = G2Verdict::V::HiggsExists;
                    out.h0 = H0Value::exact(1);
                    out.citation = "class-triviality";
                    return out;
                case Ternary::No:
                    out.v = G2Verdict::V::NoHiggs;
                    out.h0 = H0Value::exact(0);
                    out.citation = "class-triviality";
                    return out;
                case Ternary::Unknown:
                    out.v = G2Verdict::V::Undecidable;
                    out.h0 = H0Value::undecidable("class data with unpaired generic points");
                    out.citation = "class-triviality";
                    return out;
            }
        }
        if (in.jumps.empty()) {
            // N (x) K trivial forces O(R) = K^2, whose members are all
            // involution-invariant.
            if (!(g2_involution(in.R) == in.R)) {
                out.v = G2Verdict::V::NoHiggs;
                out.h0 = H0Value::exact(0);
                out.citation = "ramification-involution";
                return out;
            }
        } else {
            // Necessary: [R] = 2[K] - 2 sum s_i [b_i].
            std::vector<std::pair<DivisorG2, long long>> terms;
            DivisorG2 k2;
            k2.add(PointLabel::weierstrass(6), 2);
            terms.push_back({in.R, 1});
            terms.push_back({k2, -2});
            for (const auto& [b, s] : d.twists) {
                DivisorG2 pt;
                pt.add(b, 1);
                terms.push_back({pt, 2 * s});
            }
            if (class_trivial(g2_class_combine(terms)) == Ternary::No) {
                out.v = G2Verdict::V::NoHiggs;
                out.h0 = H0Value::exact(0);
                out.citation = "ramification-class";
                return out;
            }
        }
        out.v = G2Verdict::V::Undecidable;
        out.h0 = H0Value::undecidable("needs the pushforward class");
        out.citation = "class-triviality";
        return out;
    }
    if (deg_nk == 1) {
        if (in.n_clean) {
            H0Value h = h0_genus2(twisted_class(in, d));
            if (h.kind == H0Value::Kind::Exact) {
                out.v = h.value > 0 ? G2Verdict::V::HiggsExists : G2Verdict::V::NoHiggs;
                out.h0 = h;
                out.citation = "class-effectivity";
                return out;
            }
            out.v = G2Verdict::V::Undecidable;
            out.h0 = h;
            out.citation = "class-effectivity";
            return out;
        }
        if (in.jumps.empty()) {
            // h0 != 0 needs R ~ K here.
            DivisorG2 k2;
            k2.add(PointLabel::weierstrass(6), 2);
            if (class_equal(g2_class_reduce(in.R), g2_class_reduce(k2)) == Ternary::No) {
                out.v = G2Verdict::V::NoHiggs;
                out.h0 = H0Value::exact(0);
                out.citation = "ramification-not-canonical";
                return out;
            }
        }
        out.v = G2Verdict::V::Undecidable;
        out.h0 = H0Value::undecidable("needs the pushforward class");
        out.citation = "class-effectivity";
        return out;
    }
    // deg_nk == 2 is the top case: h0 >= 1 always.
    out.v = G2Verdict::V::HiggsExists;
    out.citation = "twist-degree-two";
    if (in.n_clean) {
        H0Value h = h0_genus2(twisted_class(in, d));
        out.h0 = h.kind == H0Value::Kind::Undecidable ? H0Value::interval(1, 2) : h;
    } else {
        out.h0 = H0Value::interval(1, 2);
    }
    return out;
}

std::string to_string(Smoothness s) {
    switch (s) {
        case Smoothness::NotSmooth: return "NotSmooth";
        case Smoothness::Smooth: return "Smooth";
        case Smoothness::Unknown: return "Unknown";
    }
    return "?";
}

SmoothVerdict smoothness_verdict(long long g, const LineBundleX& delta, long long c2,
                                 const std::optional<G2HiggsInput>& g2) {
    if (g < 2) throw DomainError("InvalidGenus", "smoothness table needs g >= 2");
    RangeVerdict rv = classify_range(c2, delta);
    const long long e = delta.e_inv;

    if (!rv.exists) return {Smoothness::Smooth, "empty-moduli"};

    if (rv.filtrable_exists) {
        if (rv.delta != 0) return {Smoothness::NotSmooth, "filtrable-range"};
        return {Smoothness::Unknown, "zero-discriminant"};
    }

    // Non-filtrable range from here.
    if (g == 2) {
        if (g2) {
            if (g2->e_inv != e)
                throw DomainError("InconsistentInput", "bundle data disagrees with delta on e");
            Rational k2 = 2 * (rv.delta - rv.floor_);
            if (!is_integral(k2) || to_int64(k2) != g2->k)
                throw DomainError("InconsistentInput", "bundle data disagrees with Delta on k");
            G2Verdict dv = g2_higgs_decide(*g2);
            switch (dv.v) {
                case G2Verdict::V::HiggsExists:
                    return {Smoothness::NotSmooth, "higgs-field-present"};
                case G2Verdict::V::NoHiggs:
                    return {Smoothness::Smooth, "no-higgs-at-point"};
                case G2Verdict::V::Undecidable:
                    return {Smoothness::Unknown, "bundle-data-undecidable"};
            }
        }
        if (e == -2 && rv.delta > Rational(1, 2))
            return {Smoothness::Smooth, "no-higgs-in-range"};
        if (e == 0) return {Smoothness::NotSmooth, "higgs-always-exist"};
        return {Smoothness::Unknown, "needs-bundle-data"};
    }

    bool fires = (rv.delta == rv.floor_ && e > 1 - g) ||
                 (rv.delta > rv.floor_ && e > 2 - g && g >= 3);
    if (fires) {
        if (rv.delta != 0) return {Smoothness::NotSmooth, "existence-table"};
        return {Smoothness::Unknown, "zero-discriminant"};
    }
    return {Smoothness::Unknown, "no-table-applies"};
}

}  // namespace cohiggs
