#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foldcusp/curve_moves.hpp"
#include "test_helpers.hpp"

using namespace foldcusp;
namespace tt = foldcusp::testing;

TEST_CASE("figure eight on the sphere resolves into two circles") {
    auto m = build_surface(tt::octahedron());
    // Two loops through vertex 2 with interleaved passes: N-2-S-5-2-3-N.
    Walk w = tt::walk_of(*m, {"n2", "-s2", "s5", "e52", "e23", "-n3"});
    CurveDiagram d{m, {w}};
    CHECK(crossing_count(d) == 1);
    auto res = resolve_crossings(d);
    CHECK(res.components.size() == 2);
    auto c = embed_multicurve(res.surface, res.components);
    // Null-homologous before and after (sphere).
    CHECK(res.carried_basis.empty());
    CHECK(crossing_count(CurveDiagram{res.surface, res.components}) == 0);
    (void)c;
}

TEST_CASE("column and row crossing once on the torus") {
    auto m = build_surface(tt::torus_grid(3, 3));
    auto h = homology(m);
    // A column cycle and a row cycle cross transversally at one vertex;
    // the resolved diagram carries the class a+b.
    Walk col = tt::walk_of(*m, {"v0_0", "v0_1", "v0_2"});
    Walk row = tt::walk_of(*m, {"h0_0", "h1_0", "h2_0"});
    CurveDiagram d{m, {col, row}};
    CHECK(crossing_count(d) == 1);
    Z2Class1 before = h.class_of(col) ^ h.class_of(row);
    auto res = resolve_crossings(d);
    Z2Class1 after(h.rank());
    for (const Walk& comp : res.components)
        for (std::size_t i = 0; i < h.rank(); ++i)
            after.set(i, after.get(i) ^
                             intersection_mod2(*res.surface, comp, res.carried_basis[i]));
    CHECK(before == after);
    CHECK(crossing_count(CurveDiagram{res.surface, res.components}) == 0);
}

TEST_CASE("already embedded input is returned unchanged") {
    auto m = build_surface(tt::octahedron());
    auto eq = tt::walk_of(*m, {"e23", "e34", "e45", "e52"});
    CurveDiagram d{m, {eq}};
    auto res = resolve_crossings(d);
    CHECK(res.surface.get() == m.get());
    REQUIRE(res.components.size() == 1);
    CHECK(res.components[0] == eq);
}

TEST_CASE("connect two contractible circles on the sphere") {
    auto m = subdivide(build_surface(tt::octahedron())).sub;
    auto h = homology(m);
    // Boundaries of two disjoint faces of the octahedron carried into the
    // subdivision are disjoint embedded circles.
    auto base = build_surface(tt::octahedron());
    auto sub = subdivide(base);
    Walk f0, f2;
    for (const SideRef& s : base->faces[0]) f0.push_back(Step{s.edge, s.rev});
    // Face 6 = (S,5,4) shares no vertices with face 0 = (N,2,3).
    for (const SideRef& s : base->faces[6]) f2.push_back(Step{s.edge, s.rev});
    auto c = embed_multicurve(sub.sub, {sub.carry_walk(f0), sub.carry_walk(f2)});
    auto joined = connect_components(c);
    CHECK(joined.components.size() == 1);
    auto h2 = homology(sub.sub);
    CHECK(h2.class_of(joined.components).is_zero());
    (void)h;
}

TEST_CASE("single component input is unchanged by connect") {
    auto m = build_surface(tt::octahedron());
    auto c = embed_multicurve(m, {tt::walk_of(*m, {"e23", "e34", "e45", "e52"})});
    auto joined = connect_components(c);
    CHECK(joined.components.size() == 1);
}

TEST_CASE("realize a single basis class on the torus") {
    auto m = build_surface(tt::torus_square());
    auto h = homology(m);
    auto res = realize_classes(m, {h.class_of_basis(0)});
    REQUIRE(res.components.size() == 1);
    Z2Class1 got(h.rank());
    for (std::size_t k = 0; k < h.rank(); ++k)
        got.set(k, intersection_mod2(*res.surface, res.components[0], res.carried_basis[k]));
    CHECK(got == h.class_of_basis(0));
}

TEST_CASE("realize a one-sided class on the klein bottle") {
    auto m = build_surface(tt::klein_bottle());
    auto h = homology(m);
    auto cc = crosscap_basis(h);
    auto res = realize_classes(m, {cc[0]});
    REQUIRE(res.components.size() == 1);
    CHECK(walk_one_sided(*res.surface, res.components[0]));
    Z2Class1 got(h.rank());
    for (std::size_t k = 0; k < h.rank(); ++k)
        got.set(k, intersection_mod2(*res.surface, res.components[0], res.carried_basis[k]));
    CHECK(got == cc[0]);
}

TEST_CASE("realize two disjoint classes") {
    auto m = canonical_surface(SurfaceClass{true, 2});
    auto h = homology(m);
    // Two independent, cup-orthogonal classes: pick from a symplectic-ish
    // scan of basis classes.
    std::vector<Z2Class1> picks;
    for (std::size_t i = 0; i < h.rank() && picks.size() < 2; ++i) {
        Z2Class1 x = h.class_of_basis(i);
        bool ok = cup(h, x, x) == 0;
        for (const auto& y : picks) ok = ok && cup(h, x, y) == 0;
        if (!ok) continue;
        Gf2Mat mt;
        for (const auto& y : picks) mt.add_row(y);
        mt.add_row(x);
        if (mt.rank() == picks.size() + 1) picks.push_back(x);
    }
    REQUIRE(picks.size() == 2);
    auto res = realize_classes(m, picks);
    REQUIRE(res.components.size() == 2);
    embed_multicurve(res.surface, res.components);
    for (std::size_t i = 0; i < picks.size(); ++i) {
        Z2Class1 got(h.rank());
        for (std::size_t k = 0; k < h.rank(); ++k)
            got.set(k,
                    intersection_mod2(*res.surface, res.components[i], res.carried_basis[k]));
        CHECK(got == picks[i]);
    }
}

TEST_CASE("empty class list is accepted") {
    auto m = build_surface(tt::torus_square());
    auto res = realize_classes(m, {});
    CHECK(res.components.empty());
}

TEST_CASE("realize rejects bad inputs") {
    auto m = build_surface(tt::torus_square());
    auto h = homology(m);
    auto a = h.class_of_basis(0);
    CHECK_THROWS_AS(realize_classes(m, {a, a}), InputError);
    auto b = h.class_of_basis(1);
    // cup(a,b) = 1 on the torus.
    CHECK_THROWS_AS(realize_classes(m, {a, b}), InputError);
}

TEST_CASE("crosscap basis") {
    SUBCASE("projective plane") {
        auto h = homology(build_surface(tt::projective_plane()));
        auto b = crosscap_basis(h);
        REQUIRE(b.size() == 1);
        CHECK(cup(h, b[0], b[0]) == 1);
    }
    SUBCASE("klein bottle") {
        auto h = homology(build_surface(tt::klein_bottle()));
        auto b = crosscap_basis(h);
        REQUIRE(b.size() == 2);
        CHECK(cup(h, b[0], b[0]) == 1);
        CHECK(cup(h, b[1], b[1]) == 1);
        CHECK(cup(h, b[0], b[1]) == 0);
        Z2Class1 sum = b[0] ^ b[1];
        CHECK(sum == h.w1_vector);
    }
    SUBCASE("nonorientable genus 3") {
        auto h = homology(canonical_surface(SurfaceClass{false, 3}));
        auto b = crosscap_basis(h);
        REQUIRE(b.size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(cup(h, b[i], b[j]) == (i == j ? 1 : 0));
    }
    SUBCASE("nonorientable genus 4 (even genus, w2 = 0)") {
        auto h = homology(canonical_surface(SurfaceClass{false, 4}));
        auto b = crosscap_basis(h);
        REQUIRE(b.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK(cup(h, b[i], b[j]) == (i == j ? 1 : 0));
        Z2Class1 sum(h.rank());
        for (const auto& x : b) sum ^= x;
        CHECK(sum == h.w1_vector);
    }
    SUBCASE("orientable input rejected") {
        auto h = homology(build_surface(tt::torus_square()));
        CHECK_THROWS_AS(crosscap_basis(h), InputError);
    }
}
