// Acceptance suite: one pass/fail line per criterion, exact assertions,
// with wall-clock budgets enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "foldcusp/bundles.hpp"
#include "foldcusp/curve_moves.hpp"
#include "foldcusp/generator.hpp"
#include "foldcusp/harness.hpp"
#include "foldcusp/realizability.hpp"
#include "test_helpers.hpp"

using namespace foldcusp;
namespace tt = foldcusp::testing;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (error.empty() && secs > budget_seconds) error = "runtime budget exceeded";
    if (error.empty()) {
        std::printf("[PASS] criterion %2d: %s (%.2fs)\n", number, name.c_str(), secs);
    } else {
        std::printf("[FAIL] criterion %2d: %s (%.2fs): %s\n", number, name.c_str(), secs,
                    error.c_str());
        ++g_failures;
    }
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

std::vector<SurfacePtr> classification_family() {
    std::vector<SurfacePtr> out;
    out.push_back(build_surface(tt::sphere_bigon()));
    out.push_back(build_surface(tt::torus_square()));
    out.push_back(build_surface(tt::projective_plane()));
    out.push_back(build_surface(tt::klein_bottle()));
    for (int g = 0; g <= 4; ++g) out.push_back(canonical_surface(SurfaceClass{true, g}));
    for (int g = 1; g <= 4; ++g) out.push_back(canonical_surface(SurfaceClass{false, g}));
    return out;
}

}  // namespace

int main() {
    criterion(1, "classification of canonical words and triangulations", 5.0, [] {
        const SurfaceClass expect[] = {{true, 0}, {true, 1}, {false, 1}, {false, 2},
                                       {true, 0}, {true, 1}, {true, 2},  {true, 3},
                                       {true, 4}, {false, 1}, {false, 2}, {false, 3},
                                       {false, 4}};
        const auto family = classification_family();
        require(family.size() == sizeof(expect) / sizeof(expect[0]), "family size");
        for (std::size_t i = 0; i < family.size(); ++i) {
            const CombSurface& m = *family[i];
            require(m.surface_class == expect[i], "wrong classification");
            require(m.euler_char == m.V - m.E + m.F, "chi != V - E + F");
            require(m.euler_char == expect[i].chi(), "chi mismatch with the class");
        }
    });

    criterion(2, "homology, cup products, Wu relation, subdivision invariance", 10.0, [] {
        for (const SurfacePtr& m : classification_family()) {
            const HomologyBasis h = homology(m);
            require(static_cast<int>(h.rank()) == 2 - m->euler_char, "rank != 2 - chi");
            require(h.w2_bit == ((m->euler_char % 2) + 2) % 2, "w2 != chi mod 2");
            if (h.rank() > 0) {
                require(h.cup_matrix.rank() == h.rank(), "degenerate cup matrix");
                require(h.cup_matrix.symmetric(), "cup matrix not symmetric");
            }
            for (std::size_t i = 0; i < h.rank(); ++i) {
                const Z2Class1 x = h.class_of_basis(i);
                require(cup(h, x, x) == h.w1_vector.get(i), "Wu relation fails");
            }
            require(cup(h, h.w1_vector, h.w1_vector) == h.w2_bit, "w1^2 != w2");
            require(h.w1_vector.is_zero() == m->orientable, "w1 = 0 iff orientable");
            // Subdivision invariance.
            const Subdivision sub = subdivide(m);
            const HomologyBasis h2 = homology(sub.sub);
            require(h2.rank() == h.rank(), "subdivision changed the rank");
            for (std::size_t i = 0; i < h.rank(); ++i) {
                const Walk ci = sub.carry_walk(h.basis_cycles[i]);
                for (std::size_t j = 0; j < h.rank(); ++j) {
                    const Walk cj = sub.carry_walk(h.basis_cycles[j]);
                    require(intersection_mod2(*sub.sub, ci, cj) == h.cup_matrix.get(i, j),
                            "subdivision changed the cup matrix");
                }
            }
        }
    });

    criterion(3, "Gauss-Bonnet oracle on >= 20 random triangulations", 30.0, [] {
        Rng rng(31);
        int done = 0, orientable = 0, nonorientable = 0;
        while (done < 24) {
            const SurfacePtr m = random_surface(rng, 3);
            (m->orientable ? orientable : nonorientable)++;
            const BundleInvariants inv = bundle_invariants(discrete_tangent(m));
            require(!inv.euler.is_bit, "tangent euler must be an integer");
            require(inv.euler.value == std::abs(m->euler_char), "tangent euler != |chi|");
            ++done;
        }
        require(orientable >= 5 && nonorientable >= 5, "both orientabilities sampled");
    });

    criterion(4, "fold modification suite, >= 100 seeded instances", 60.0, [] {
        const HarnessReport rep = verify_bundles(2001, 120);
        require(rep.count >= 100, "not enough instances");
        for (const std::string& f : rep.failures)
            if (f.find("fold") != std::string::npos || f.find("w1(T^C") != std::string::npos ||
                f.find("tangent") != std::string::npos)
                throw std::runtime_error(f);
        require(rep.passed == rep.count, rep.failures.empty() ? "miscount" : rep.failures[0]);
    });

    criterion(5, "cusp modification suite, >= 100 seeded instances", 60.0, [] {
        const HarnessReport rep = verify_bundles(2002, 120);
        require(rep.count >= 100, "not enough instances");
        require(rep.passed == rep.count, rep.failures.empty() ? "miscount" : rep.failures[0]);
    });

    criterion(6, "curve realization suite, >= 50 admissible tuples", 60.0, [] {
        const HarnessReport rep = verify_curves(606, 50);
        require(rep.count >= 50, "not enough tuples");
        require(rep.passed == rep.count, rep.failures.empty() ? "miscount" : rep.failures[0]);
    });

    criterion(7, "witness soundness over the abstract grid", 60.0, [] {
        const HarnessReport rep = verify_realizability(3, 6, 4, 3);
        require(rep.count > 0, "empty grid");
        for (const std::string& f : rep.failures)
            if (f.find("witness") != std::string::npos) throw std::runtime_error(f);
    });

    criterion(8, "datum-level necessity over the abstract grid", 60.0, [] {
        const HarnessReport rep = verify_realizability(3, 6, 4, 3);
        require(rep.count > 0, "empty grid");
        require(rep.passed == rep.count, rep.failures.empty() ? "miscount" : rep.failures[0]);
    });

    criterion(9, "paper-faithful sphere/equator edge case", 10.0, [] {
        const SurfacePtr m = build_surface(tt::octahedron());
        const HomologyBasis h = homology(m);
        const ClassContext ctx = context_of(h);
        const Multicurve c =
            embed_multicurve(m, {tt::walk_of(*m, {"e23", "e34", "e45", "e52"})});
        const CurveSummary s = curve_summary(h, c, {});

        const Verdict v2 = check_theorem2(ctx, s, SurfaceClass{true, 0});
        require(!v2.overall, "the stated conditions reject this instance");
        require(v2.failed("2.3"), "2.3 must fail");
        require(v2.passed("2.1") && v2.passed("2.2"), "only 2.3 may fail");
        require(v2.conditions.at("2.4") == Cond::NotApplicable, "2.4 not applicable");
        require(v2.flags.size() == 1 && v2.flags[0] == "positive-chi-target-bound",
                "flag must be set");

        HomotopyDatum datum;
        datum.pullback_w1 = Z2Class1(0);
        datum.pullback_w2 = 0;
        datum.degree = 0;
        const Verdict v1 = check_theorem1(ctx, s, SurfaceClass{true, 0}, datum);
        require(v1.overall, "the homotopy criterion accepts (0, 0, deg 0)");
    });

    criterion(10, "degree realizability spot checks", 5.0, [] {
        require(!degree_realizable(SurfaceClass{true, 1}, SurfaceClass{false, 2}, 1),
                "torus -> klein bottle, d = 1");
        for (long long d = 0; d <= 6; ++d)
            require(degree_realizable(SurfaceClass{true, 2}, SurfaceClass{true, 1}, d),
                    "genus 2 -> torus");
        for (long long d = 1; d <= 6; ++d)
            require(!degree_realizable(SurfaceClass{true, 1}, SurfaceClass{true, 2}, d),
                    "torus -> genus 2");
        for (int g = 1; g <= 3; ++g)
            for (int h2 = 0; h2 <= 3; ++h2)
                for (long long d = 0; d <= 4; ++d)
                    require(!degree_realizable(SurfaceClass{false, g}, SurfaceClass{true, h2}, d),
                            "nonorientable -> orientable");
    });

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
