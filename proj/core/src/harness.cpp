#include "foldcusp/harness.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "foldcusp/bundles.hpp"
#include "foldcusp/curve_moves.hpp"
#include "foldcusp/generator.hpp"
#include "foldcusp/realizability.hpp"

namespace foldcusp {

namespace {

int mod2(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

// One seeded fold/cusp instance checked against the closed-form values.
// Outer nullopt: the curve draw failed and the instance is skipped.
std::optional<std::pair<bool, std::string>> check_bundle_instance(uint64_t seed) {
    Rng rng(seed);
    const SurfacePtr m = random_surface(rng, 3);
    const bool separating = rng.coin();
    const auto curve = random_curve(rng, m, separating);
    if (!curve) return std::nullopt;
    const HomologyBasis h = homology(m);
    const CurveSummary s0 = curve_summary(h, *curve, {});

    const DiscreteBundle tangent = discrete_tangent(m);
    {
        const BundleInvariants ti = bundle_invariants(tangent, h);
        if (ti.euler.is_bit || ti.euler.value != std::abs(m->euler_char))
            return {{false, "tangent euler != |chi|"}};
    }
    const DiscreteBundle folded = fold_modify(tangent, *curve);
    const BundleInvariants fi = bundle_invariants(folded, h);

    // w1 naturality on every basis cycle.
    const Z2Class1 expect_w1 = h.w1_vector ^ s0.c_class;
    if (!(fi.w1_on_basis == expect_w1)) return {{false, "w1(T^C M) != w1(M) + [C]"}};

    if (s0.c_is_zero) {
        const long long want = std::abs(s0.split->chi_plus - s0.split->chi_minus);
        if (fi.euler.is_bit || fi.euler.value != want)
            return {{false, "fold euler != |chi+ - chi-|"}};
    } else {
        const int want = mod2(m->euler_char);
        if (!fi.euler.is_bit || fi.euler.value != want)
            return {{false, "fold euler bit != chi(M) mod 2"}};
    }

    // Cusps on the same curve.
    const int ncusps = 1 + static_cast<int>(rng.below(4));
    const auto cusps = random_cusps(rng, *curve, ncusps);
    const CurveSummary s = curve_summary(h, *curve, cusps);
    const DiscreteBundle cusped = cusp_modify(folded, *curve, cusps, 1);
    const BundleInvariants ci = bundle_invariants(cusped, h);
    if (!(ci.w1_on_basis == expect_w1)) return {{false, "w1(T^{C,P} M) != w1(M) + [C]"}};
    if (s.c_is_zero) {
        const long long want = std::abs(static_cast<long long>(s.split->chi_plus) -
                                        s.split->chi_minus - s.split->n_plus +
                                        s.split->n_minus);
        if (ci.euler.is_bit || ci.euler.value != want)
            return {{false, "cusp euler != |chi+ - chi- - n+ + n-|"}};
    } else {
        const int want = mod2(m->euler_char + s.p_count);
        if (!ci.euler.is_bit || ci.euler.value != want)
            return {{false, "cusp euler bit != chi(M) + |P| mod 2"}};
    }
    // Mod-2 compatibility with the cup-level second class.
    {
        const int w2e = mod2(s.w2_M + cup(h, s.c_class, h.w1_vector) +
                             cup(h, s.c_class, s.c_class) + s.p_count);
        const int got = ci.euler.is_bit ? static_cast<int>(ci.euler.value)
                                        : mod2(ci.euler.value);
        if (got != w2e) return {{false, "euler mod 2 != w2 from cup level"}};
    }
    const DiscreteBundle cusped2 = cusp_modify(folded, *curve, cusps, 2);
    if (!bundles_isomorphic(cusped, cusped2))
        return {{false, "cusp variants not isomorphic"}};
    return {{true, ""}};
}

}  // namespace

HarnessReport verify_bundles(uint64_t seed, int count, int parallelism) {
    HarnessReport rep;
    rep.suite = "bundles";
    // Workers race over draw indices, but aggregation is by draw order over
    // the first `count` successful draws, so the report is independent of
    // scheduling.
    const uint64_t max_draws = static_cast<uint64_t>(count) * 64 + 64;
    std::vector<std::optional<std::pair<bool, std::string>>> results(max_draws);
    std::mutex mu;
    std::atomic<uint64_t> next_draw{0};
    std::atomic<int> found{0};
    auto worker = [&]() {
        while (found.load() < count) {
            const uint64_t draw = next_draw.fetch_add(1);
            if (draw >= max_draws) return;
            std::optional<std::pair<bool, std::string>> res;
            try {
                res = check_bundle_instance(seed * 0x10001ull + draw);
            } catch (const std::exception& e) {
                res = {{false, std::string("exception: ") + e.what()}};
            }
            std::lock_guard<std::mutex> lock(mu);
            results[draw] = res;
            if (res) found.fetch_add(1);
        }
    };
    if (parallelism <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < parallelism; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (uint64_t draw = 0; draw < max_draws && rep.count < count; ++draw) {
        if (!results[draw]) continue;
        ++rep.count;
        if (results[draw]->first) {
            ++rep.passed;
        } else {
            rep.failures.push_back("seed " + std::to_string(seed) + " draw " +
                                   std::to_string(draw) + ": " + results[draw]->second);
        }
    }
    return rep;
}

HarnessReport verify_realizability(int max_genus, int chi_bound, int cusp_bound,
                                   int one_sided_bound) {
    HarnessReport rep;
    rep.suite = "realizability";

    std::vector<SurfaceClass> classes;
    for (int g = 0; g <= max_genus; ++g) classes.push_back(SurfaceClass{true, g});
    for (int g = 1; g <= max_genus; ++g) classes.push_back(SurfaceClass{false, g});

    auto run_one = [&](const ClassContext& ctx, const CurveSummary& s,
                       const SurfaceClass& n) {
        ++rep.count;
        bool ok = true;
        std::string why;
        const Verdict v2 = check_theorem2(ctx, s, n);
        // Witness soundness.
        if (v2.overall) {
            try {
                const Witness w = construct_witness(ctx, s, n);
                const Verdict v1 = check_theorem1(ctx, s, n, w.datum);
                if (!v1.overall) {
                    ok = false;
                    why = "witness datum fails the homotopy criterion";
                }
                if (w.datum.degree &&
                    !degree_realizable(ctx.m_class, n, *w.datum.degree)) {
                    ok = false;
                    why = "witness degree not realizable";
                }
            } catch (const std::exception& e) {
                ok = false;
                why = std::string("witness construction failed: ") + e.what();
            }
        }
        // Datum-level necessity, excluding instances meeting the 2.4
        // hypotheses (their necessity needs ring structure beyond a datum).
        const bool hyp24 = !s.c_is_zero && !s.orientable_M && s.c_squared != s.w2_M;
        if (ok && !hyp24) {
            bool any = false;
            for (const HomotopyDatum& d : enumerate_data(ctx, s, n))
                if (check_theorem1(ctx, s, n, d).overall) any = true;
            if (any != v2.overall) {
                ok = false;
                why = v2.overall ? "existence passes but no datum works"
                                 : "a datum works but existence fails";
            }
        }
        if (ok)
            ++rep.passed;
        else
            rep.failures.push_back("M=(" + std::to_string(ctx.m_class.orientable) + "," +
                                   std::to_string(ctx.m_class.genus) + ") N=(" +
                                   std::to_string(n.orientable) + "," +
                                   std::to_string(n.genus) + "): " + why);
    };

    for (const SurfaceClass& mc : classes) {
        const ClassContext ctx = standard_context(mc);
        // Separating summaries over the split grid.
        for (int chi_plus = -chi_bound; chi_plus <= chi_bound; ++chi_plus) {
            const int chi_minus = mc.chi() - chi_plus;
            if (chi_minus < -chi_bound || chi_minus > chi_bound) continue;
            for (int np = 0; np + 0 <= cusp_bound; ++np)
                for (int nm = 0; np + nm <= cusp_bound; ++nm) {
                    AbstractSummarySpec spec;
                    spec.separating = true;
                    spec.c_equals_w1 = mc.orientable;
                    spec.chi_plus = chi_plus;
                    spec.chi_minus = chi_minus;
                    spec.n_plus = np;
                    spec.n_minus = nm;
                    spec.p_count = np + nm;
                    int comps = std::max({1, chi_plus, chi_minus});
                    if (mc.orientable && ((chi_plus - comps) % 2 != 0)) ++comps;
                    spec.n_components = comps;
                    CurveSummary s;
                    try {
                        s = abstract_summary(mc, spec);
                    } catch (const InputError&) {
                        continue;
                    }
                    for (const SurfaceClass& n : classes) run_one(ctx, s, n);
                }
        }
        // Nonseparating summaries.
        for (int ceq = 0; ceq < 2; ++ceq)
            for (int os = 0; os <= one_sided_bound; ++os)
                for (int p = 0; p <= cusp_bound; ++p) {
                    AbstractSummarySpec spec;
                    spec.separating = false;
                    spec.c_equals_w1 = ceq == 1;
                    spec.one_sided_count = os;
                    spec.n_components = std::max(1, os);
                    spec.p_count = p;
                    CurveSummary s;
                    try {
                        s = abstract_summary(mc, spec);
                    } catch (const InputError&) {
                        continue;
                    }
                    for (const SurfaceClass& n : classes) run_one(ctx, s, n);
                }
    }
    return rep;
}

HarnessReport verify_curves(uint64_t seed, int count) {
    HarnessReport rep;
    rep.suite = "curves";
    Rng rng(seed);
    int attempts = 0;
    while (rep.count < count && attempts++ < count * 8) {
        const SurfacePtr m = [&] {
            const bool orientable = rng.coin();
            const int genus = orientable ? 1 + static_cast<int>(rng.below(4))
                                         : 1 + static_cast<int>(rng.below(4));
            return canonical_surface(SurfaceClass{orientable, genus});
        }();
        const HomologyBasis h = homology(m);
        if (h.rank() == 0) continue;
        // An admissible tuple: a random subset of a pairwise cup-orthogonal
        // family (the crosscap basis, or greedily filtered basis classes).
        std::vector<Z2Class1> family;
        if (!m->orientable) {
            family = crosscap_basis(h);
        } else {
            for (std::size_t i = 0; i < h.rank(); ++i) {
                const Z2Class1 x = h.class_of_basis(i);
                if (cup(h, x, x) != 0) continue;
                bool ok = true;
                for (const auto& y : family) ok = ok && cup(h, x, y) == 0;
                Gf2Mat mt;
                for (const auto& y : family) mt.add_row(y);
                mt.add_row(x);
                if (ok && mt.rank() == family.size() + 1) family.push_back(x);
            }
        }
        if (family.empty()) continue;
        std::vector<Z2Class1> picks;
        for (const auto& x : family)
            if (rng.coin()) picks.push_back(x);
        if (picks.empty()) picks.push_back(family[rng.below(family.size())]);
        if (picks.size() > 4) picks.resize(4);

        ++rep.count;
        try {
            const RealizedCurves res = realize_classes(m, picks);
            if (res.components.size() != picks.size())
                throw InternalError("wrong component count");
            embed_multicurve(res.surface, res.components);
            for (std::size_t i = 0; i < picks.size(); ++i) {
                Z2Class1 got(h.rank());
                for (std::size_t k = 0; k < h.rank(); ++k)
                    got.set(k, intersection_mod2(*res.surface, res.components[i],
                                                 res.carried_basis[k]));
                if (!(got == picks[i])) throw InternalError("class mismatch");
            }
            ++rep.passed;
        } catch (const std::exception& e) {
            rep.failures.push_back("curve tuple failed: " + std::string(e.what()));
        }
    }
    return rep;
}

}  // namespace foldcusp
