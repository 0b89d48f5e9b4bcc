#include "foldcusp/realizability.hpp"

#include <algorithm>
#include <cstdlib>

namespace foldcusp {

int ClassContext::cup(const Z2Class1& x, const Z2Class1& y) const {
    if (x.size() != rank() || y.size() != rank())
        throw InputError("cup: class dimension mismatch");
    if (rank() == 0) return 0;
    return x.dot(pairing.mul(y));
}

ClassContext context_of(const HomologyBasis& h) {
    ClassContext ctx;
    ctx.m_class = h.surface->surface_class;
    ctx.w1 = h.w1_vector;
    ctx.pairing = h.cup_inverse;
    return ctx;
}

ClassContext standard_context(const SurfaceClass& cls) {
    ClassContext ctx;
    ctx.m_class = cls;
    const std::size_t r =
        cls.orientable ? 2 * static_cast<std::size_t>(cls.genus)
                       : static_cast<std::size_t>(cls.genus);
    ctx.w1 = Z2Class1(r);
    ctx.pairing = Gf2Mat(r, r);
    if (cls.orientable) {
        // Symplectic pairs (a_i, b_i); the form equals its inverse.
        for (std::size_t i = 0; i + 1 < r; i += 2) {
            ctx.pairing.set(i, i + 1, 1);
            ctx.pairing.set(i + 1, i, 1);
        }
    } else {
        // Crosscap basis: identity form, w1 = (1, ..., 1).
        for (std::size_t i = 0; i < r; ++i) {
            ctx.pairing.set(i, i, 1);
            ctx.w1.set(i, 1);
        }
    }
    return ctx;
}

namespace {

int mod2(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

long long split_quantity(const SplitData& sp) {
    return static_cast<long long>(sp.chi_plus) - sp.chi_minus - sp.n_plus + sp.n_minus;
}

}  // namespace

CurveSummary abstract_summary(const SurfaceClass& m_cls, const AbstractSummarySpec& spec) {
    if (!m_cls.orientable && m_cls.genus < 1)
        throw InputError("nonorientable genus must be >= 1");
    const ClassContext ctx = standard_context(m_cls);
    CurveSummary s;
    s.chi_M = m_cls.chi();
    s.orientable_M = m_cls.orientable;
    s.w2_M = mod2(s.chi_M);
    s.n_components = spec.n_components;
    s.p_count = spec.p_count;
    s.one_sided_count = spec.one_sided_count;
    s.c_is_zero = spec.separating;
    s.c_equals_w1 = spec.c_equals_w1;

    if (spec.n_components < 1) throw InputError("a multicurve has at least one component");
    if (spec.one_sided_count < 0 || spec.one_sided_count > spec.n_components)
        throw InputError("one-sided count out of range");
    if (spec.n_plus < 0 || spec.n_minus < 0 || spec.p_count < 0)
        throw InputError("negative counts");

    if (spec.separating) {
        if (spec.one_sided_count != 0)
            throw InputError("a separating multicurve has no one-sided components");
        if (spec.c_equals_w1 != m_cls.orientable)
            throw InputError("[C]=0 equals w1 exactly on orientable surfaces");
        if (spec.n_plus + spec.n_minus != spec.p_count)
            throw InputError("cusp side counts do not add up to |P|");
        SplitData sp;
        sp.chi_plus = spec.chi_plus;
        sp.chi_minus = spec.chi_minus;
        sp.n_plus = spec.n_plus;
        sp.n_minus = spec.n_minus;
        if (sp.chi_plus + sp.chi_minus != s.chi_M)
            throw InputError("side characteristics do not add up to chi(M)");
        if (sp.chi_plus > spec.n_components || sp.chi_minus > spec.n_components)
            throw InputError("side characteristic exceeds the component count");
        if (m_cls.orientable &&
            (mod2(sp.chi_plus) != mod2(spec.n_components) ||
             mod2(sp.chi_minus) != mod2(spec.n_components)))
            throw InputError("orientable side parity violated");
        s.split = sp;
        s.c_class = Z2Class1(ctx.rank());
        s.c_squared = 0;
    } else {
        if (m_cls.orientable && spec.one_sided_count > 0)
            throw InputError("orientable surfaces carry no one-sided curves");
        // Choose a standard-model class with the required relations.
        const int want_sq = mod2(spec.one_sided_count);
        if (spec.c_equals_w1) {
            if (m_cls.orientable)
                throw InputError("[C]=w1 with [C] nonzero needs a nonorientable surface");
            s.c_class = ctx.w1;
        } else if (m_cls.orientable) {
            if (m_cls.genus < 1) throw InputError("the sphere has no nonseparating curve");
            s.c_class = Z2Class1(ctx.rank());
            s.c_class.set(0, 1);
        } else {
            if (m_cls.genus < 2)
                throw InputError("projective plane: every nonzero class equals w1");
            s.c_class = Z2Class1(ctx.rank());
            if (want_sq == 1) {
                s.c_class.set(0, 1);
            } else {
                if (m_cls.genus == 2)
                    throw InputError(
                        "klein bottle: nonzero classes other than w1 are one-sided");
                s.c_class.set(0, 1);
                s.c_class.set(1, 1);
            }
        }
        s.c_squared = ctx.cup(s.c_class, s.c_class);
        if (s.c_squared != want_sq)
            throw InputError("one-sided parity inconsistent with the class");
        if (spec.c_equals_w1 && s.c_squared != s.w2_M)
            throw InputError("[C]=w1 forces [C]^2 = w2(M)");
    }
    return s;
}

Verdict check_theorem1(const ClassContext& ctx, const CurveSummary& s,
                       const SurfaceClass& n_cls, const HomotopyDatum& datum) {
    if (datum.pullback_w1.size() != ctx.rank())
        throw InputError("datum pullback has the wrong dimension");
    Verdict v;
    const Z2Class1 want = s.c_class ^ ctx.w1;

    const bool c11 = datum.pullback_w1 == want;
    v.conditions["1.1"] = c11 ? Cond::Pass : Cond::Fail;
    if (!c11) v.diagnostics["1.1"] = "[C] != w1(M) + f*w1(N)";

    const bool c12 = mod2(s.p_count) == mod2(s.w2_M + datum.pullback_w2);
    v.conditions["1.2"] = c12 ? Cond::Pass : Cond::Fail;
    if (!c12) v.diagnostics["1.2"] = "[P] != w2(M) + f*w2(N)";

    if (!s.c_is_zero) {
        v.conditions["1.3"] = Cond::NotApplicable;
        v.diagnostics["1.3"] = "[C] != 0";
    } else if (!c11) {
        v.conditions["1.3"] = Cond::NotApplicable;
        v.diagnostics["1.3"] = "degree undefined while 1.1 fails";
    } else {
        if (!datum.degree.has_value())
            throw InputError("datum must carry a degree when [C] = 0 and 1.1 holds");
        if (!s.split.has_value()) throw InternalError("separating summary lacks split data");
        const long long lhs = std::llabs(split_quantity(*s.split));
        const long long rhs = *datum.degree * std::llabs(static_cast<long long>(n_cls.chi()));
        v.conditions["1.3"] = lhs == rhs ? Cond::Pass : Cond::Fail;
        if (lhs != rhs)
            v.diagnostics["1.3"] = "|chi+ - chi- - n+ + n-| = " + std::to_string(lhs) +
                                   " but |deg * chi(N)| = " + std::to_string(rhs);
    }

    v.overall = true;
    for (const auto& [key, c] : v.conditions)
        if (c == Cond::Fail) v.overall = false;
    return v;
}

Verdict check_theorem2(const ClassContext& ctx, const CurveSummary& s,
                       const SurfaceClass& n_cls) {
    (void)ctx;  // part of the uniform concrete/abstract interface
    Verdict v;
    const int chi_n = n_cls.chi();
    const int chi_m = s.chi_M;
    const int w2_n = mod2(chi_n);

    const bool c21 = mod2(s.p_count) == s.c_squared;
    v.conditions["2.1"] = c21 ? Cond::Pass : Cond::Fail;
    if (!c21) v.diagnostics["2.1"] = "[P] != [C]^2";

    if (n_cls.orientable) {
        const bool c22 = s.c_equals_w1;
        v.conditions["2.2"] = c22 ? Cond::Pass : Cond::Fail;
        if (!c22) v.diagnostics["2.2"] = "w1(N) = 0 but [C] != w1(M)";
    } else {
        v.conditions["2.2"] = Cond::NotApplicable;
        v.diagnostics["2.2"] = "w1(N) != 0";
    }

    bool ineq_failed = false, other23_failed = false;
    if (!s.c_is_zero) {
        v.conditions["2.3"] = Cond::NotApplicable;
        v.diagnostics["2.3"] = "[C] != 0";
    } else {
        if (!s.split.has_value()) throw InternalError("separating summary lacks split data");
        const long long q = std::llabs(split_quantity(*s.split));
        if (chi_n != 0) {
            if (q % std::llabs(static_cast<long long>(chi_n)) != 0) {
                other23_failed = true;
                v.diagnostics["2.3"] = "chi(N) does not divide chi+ - chi- - n+ + n-";
            } else {
                const long long d = q / std::llabs(static_cast<long long>(chi_n));
                if (s.orientable_M && !n_cls.orientable && d % 2 != 0) {
                    other23_failed = true;
                    v.diagnostics["2.3"] =
                        "d must be even for orientable M and nonorientable N";
                } else if (!(chi_m <= d * chi_n)) {
                    ineq_failed = true;
                    v.diagnostics["2.3"] = "chi(M) <= |d| chi(N) fails with |d| = " +
                                           std::to_string(d);
                }
            }
        } else {
            if (q != 0) {
                other23_failed = true;
                v.diagnostics["2.3"] = "chi(N) = 0 forces chi+ - chi- - n+ + n- = 0";
            } else if (!(chi_m <= 0)) {
                ineq_failed = true;
                v.diagnostics["2.3"] = "chi(M) <= 0 fails for a chi(N) = 0 target";
            }
        }
        v.conditions["2.3"] =
            (ineq_failed || other23_failed) ? Cond::Fail : Cond::Pass;
    }

    const bool hyp24 = !s.c_is_zero && !s.orientable_M && s.c_squared != s.w2_M;
    if (!hyp24) {
        v.conditions["2.4"] = Cond::NotApplicable;
        v.diagnostics["2.4"] = "hypotheses not met";
    } else {
        const bool c24 = w2_n != 0 && chi_n > chi_m;
        v.conditions["2.4"] = c24 ? Cond::Pass : Cond::Fail;
        if (!c24)
            v.diagnostics["2.4"] = w2_n == 0 ? "w2(N) = 0" : "chi(N) <= chi(M)";
    }

    v.overall = true;
    int fails = 0;
    for (const auto& [key, c] : v.conditions)
        if (c == Cond::Fail) {
            v.overall = false;
            ++fails;
        }
    if (chi_n > 0 && fails == 1 && ineq_failed) v.flags.push_back("positive-chi-target-bound");
    return v;
}

bool degree_realizable(const SurfaceClass& m, const SurfaceClass& n, long long d) {
    if (d < 0) throw InputError("degree must be nonnegative");
    if (!m.orientable && n.orientable) return false;
    if (!(m.chi() <= d * n.chi())) return false;
    if (m.orientable && n.orientable) return true;
    if (m.orientable && !n.orientable) return d % 2 == 0;
    return mod2(m.chi()) == mod2(d * n.chi());
}

Witness construct_witness(const ClassContext& ctx, const CurveSummary& s,
                          const SurfaceClass& n_cls) {
    const Verdict v = check_theorem2(ctx, s, n_cls);
    if (!v.overall) throw InputError("construct_witness called on a failing instance");

    Witness w;
    w.datum.pullback_w1 = s.c_class ^ ctx.w1;
    w.datum.pullback_w2 = ctx.cup(w.datum.pullback_w1, w.datum.pullback_w1);
    if (s.c_is_zero) {
        const long long q = std::llabs(split_quantity(*s.split));
        w.datum.degree = n_cls.chi() != 0
                             ? q / std::llabs(static_cast<long long>(n_cls.chi()))
                             : 0;
    }

    const bool c_zero = s.c_is_zero;
    const bool w1_zero = s.orientable_M;
    const bool c_eq_w1 = s.c_equals_w1;
    if (n_cls.orientable) {
        w.case_label = "I";
        w.description = w1_zero ? "map of prescribed degree (handles collapsed onto a covering)"
                                : "null-homotopic map";
    } else if (c_zero && w1_zero) {
        w.case_label = "II";
        w.description = "even-degree map through the orientation double cover";
    } else if (c_eq_w1 && !c_zero) {
        w.case_label = "III";
        w.description = "null-homotopic map";
    } else if (!c_zero && w1_zero) {
        w.case_label = "IV";
        w.description =
            "retraction to a handle parallel composed with an orientation-reversing curve";
    } else if (c_zero && !w1_zero) {
        w.case_label = "V";
        w.description = "map of prescribed degree";
    } else {
        w.case_label = "VI";
        const Z2Class1 cprime = s.c_class ^ ctx.w1;
        if (ctx.cup(cprime, cprime) == 0)
            w.description =
                "retraction to a handle parallel composed with an orientation-reversing curve";
        else
            w.description = "collapse of the crosscaps missed by the curve";
    }
    return w;
}

std::vector<HomotopyDatum> enumerate_data(const ClassContext& ctx, const CurveSummary& s,
                                          const SurfaceClass& n_cls) {
    std::vector<HomotopyDatum> out;
    HomotopyDatum base;
    base.pullback_w1 = s.c_class ^ ctx.w1;
    // Pullbacks must come from N: w1(N) = 0 forces the first, w2(N) = 0 the
    // second; the Wu relation pins pullback_w2 either way.
    if (n_cls.orientable && !base.pullback_w1.is_zero()) return out;
    base.pullback_w2 = ctx.cup(base.pullback_w1, base.pullback_w1);
    if (mod2(n_cls.chi()) == 0 && base.pullback_w2 != 0) return out;

    const bool degree_defined = base.pullback_w1 == ctx.w1;
    if (!degree_defined) {
        out.push_back(base);
        return out;
    }
    long long dmax = 1;
    if (s.c_is_zero && s.split.has_value() && n_cls.chi() != 0)
        dmax = std::llabs(split_quantity(*s.split)) /
                   std::llabs(static_cast<long long>(n_cls.chi())) +
               1;
    for (long long d = 0; d <= dmax; ++d) {
        if (!degree_realizable(ctx.m_class, n_cls, d)) continue;
        HomotopyDatum datum = base;
        datum.degree = d;
        out.push_back(datum);
    }
    return out;
}

}  // namespace foldcusp
