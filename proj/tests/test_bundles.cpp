#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foldcusp/bundles.hpp"
#include "test_helpers.hpp"

using namespace foldcusp;
namespace tt = foldcusp::testing;

namespace {

SurfacePtr tri(const GluingScheme& s) { return subdivide(build_surface(s)).sub; }

long long tangent_euler(const SurfacePtr& m) {
    auto inv = bundle_invariants(discrete_tangent(m));
    REQUIRE(!inv.euler.is_bit);
    return inv.euler.value;
}

}  // namespace

TEST_CASE("gauss-bonnet: sphere") {
    auto m = build_surface(tt::octahedron());
    auto h = homology(m);
    auto inv = bundle_invariants(discrete_tangent(m), h);
    CHECK(inv.w1_on_basis == h.w1_vector);
    CHECK(!inv.euler.is_bit);
    CHECK(inv.euler.value == 2);
}

TEST_CASE("gauss-bonnet: canonical family") {
    CHECK(tangent_euler(canonical_surface(SurfaceClass{true, 0})) == 2);
    CHECK(tangent_euler(tri(tt::torus_square())) == 0);
    CHECK(tangent_euler(tri(tt::projective_plane())) == 1);
    CHECK(tangent_euler(tri(tt::klein_bottle())) == 0);
    CHECK(tangent_euler(build_surface(torus_diag_scheme(3, 3))) == 0);
    CHECK(tangent_euler(build_surface(rp2_six_scheme())) == 1);
    for (int g = 0; g <= 3; ++g) {
        auto m = canonical_surface(SurfaceClass{true, g});
        const int chi = 2 - 2 * g;
        CHECK(tangent_euler(m) == (chi < 0 ? -chi : chi));
    }
    for (int g = 1; g <= 4; ++g) {
        auto m = canonical_surface(SurfaceClass{false, g});
        const int chi = 2 - g;
        CHECK(tangent_euler(m) == (chi < 0 ? -chi : chi));
    }
}

TEST_CASE("gauss-bonnet survives subdivision") {
    auto m = canonical_surface(SurfaceClass{false, 3});
    auto m2 = subdivide(m).sub;
    CHECK(tangent_euler(m2) == 1);
}

TEST_CASE("tangent bundle w1 equals w1(M)") {
    for (auto s : {tt::torus_square(), tt::projective_plane(), tt::klein_bottle()}) {
        auto m = tri(s);
        auto h = homology(m);
        auto inv = bundle_invariants(discrete_tangent(m), h);
        CHECK(inv.w1_on_basis == h.w1_vector);
    }
}

TEST_CASE("trivial bundle has euler 0") {
    auto m = build_surface(tt::octahedron());
    auto h = homology(m);
    auto inv = bundle_invariants(trivial_bundle(m), h);
    CHECK(!inv.euler.is_bit);
    CHECK(inv.euler.value == 0);
}

TEST_CASE("fold along octahedron equator") {
    auto m = build_surface(tt::octahedron());
    auto h = homology(m);
    auto c = embed_multicurve(m, {tt::walk_of(*m, {"e23", "e34", "e45", "e52"})});
    auto tb = fold_modify(discrete_tangent(m), c);
    auto inv = bundle_invariants(tb, h);
    // w1(E) = w1(M) + [C] = 0; separating: euler = |chi+ - chi-| = 0.
    CHECK(inv.w1_on_basis == h.w1_vector);
    CHECK(!inv.euler.is_bit);
    CHECK(inv.euler.value == 0);
}

TEST_CASE("fold along torus meridian") {
    auto m = build_surface(torus_diag_scheme(3, 3));
    auto h = homology(m);
    auto c = embed_multicurve(m, {tt::walk_of(*m, {"v0_0", "v0_1", "v0_2"})});
    auto summary = curve_summary(h, c, {});
    REQUIRE(!summary.c_is_zero);
    auto tb = fold_modify(discrete_tangent(m), c);
    auto inv = bundle_invariants(tb, h);
    // w1(E) = [C] != 0 = w1(M): twisted euler is a bit, chi(M) mod 2 = 0.
    Z2Class1 expect = h.w1_vector ^ summary.c_class;
    CHECK(inv.w1_on_basis == expect);
    CHECK(inv.euler.is_bit);
    CHECK(inv.euler.value == 0);
}

TEST_CASE("fold along contractible circle on the torus") {
    auto base = build_surface(torus_diag_scheme(3, 3));
    auto sub = subdivide(base);
    auto m = sub.sub;
    auto h = homology(m);
    // Boundary of the cell-(0,0) triangle, carried into the subdivision so
    // the disk side has interior room.
    auto c = embed_multicurve(
        m, {sub.carry_walk(tt::walk_of(*base, {"h0_0", "v1_0", "-d0_0"}))});
    auto summary = curve_summary(h, c, {});
    REQUIRE(summary.split.has_value());
    auto tb = fold_modify(discrete_tangent(m), c);
    auto inv = bundle_invariants(tb, h);
    CHECK(inv.w1_on_basis == h.w1_vector);
    CHECK(!inv.euler.is_bit);
    // |chi+ - chi-| = |1 - (-1)| = 2.
    CHECK(inv.euler.value == 2);
}

TEST_CASE("fold along projective plane core") {
    auto rp2 = build_surface(tt::projective_plane());
    auto sub = subdivide(rp2);
    auto m = sub.sub;
    auto h = homology(m);
    auto c = embed_multicurve(m, {sub.carry_walk({Step{rp2->edge_id("a"), false}})});
    auto summary = curve_summary(h, c, {});
    REQUIRE(!summary.c_is_zero);
    auto tb = fold_modify(discrete_tangent(m), c);
    auto inv = bundle_invariants(tb, h);
    // [C] = w1(M) so w1(E) = 0 != w1(M): bit = chi mod 2 = 1.
    CHECK(inv.euler.is_bit);
    CHECK(inv.euler.value == 1);
}

TEST_CASE("cusps on the octahedron equator") {
    auto m = build_surface(tt::octahedron());
    auto h = homology(m);
    auto c = embed_multicurve(m, {tt::walk_of(*m, {"e23", "e34", "e45", "e52"})});
    auto tb = fold_modify(discrete_tangent(m), c);

    // Equator edge i has its northern face (id < 4) and southern (id >= 4).
    auto side_face = [&](int edge_index, bool want_north) {
        const int e = c.components[0][edge_index].edge;
        const int fa = m->edge_occs[e][0].face;
        const int fb = m->edge_occs[e][1].face;
        const int north = fa < 4 ? fa : fb;
        const int south = fa < 4 ? fb : fa;
        return want_north ? north : south;
    };

    SUBCASE("one cusp: magnitude 1") {
        auto b = cusp_modify(tb, c, {CuspSpec{0, 0, side_face(0, true)}}, 1);
        auto inv = bundle_invariants(b, h);
        CHECK(!inv.euler.is_bit);
        CHECK(inv.euler.value == 1);
    }
    SUBCASE("two cusps on the same side: magnitude 2") {
        auto b = cusp_modify(
            tb, c, {CuspSpec{0, 0, side_face(0, true)}, CuspSpec{0, 1, side_face(1, true)}}, 1);
        auto inv = bundle_invariants(b, h);
        CHECK(inv.euler.value == 2);
    }
    SUBCASE("two cusps on opposite sides cancel") {
        auto b = cusp_modify(
            tb, c, {CuspSpec{0, 0, side_face(0, true)}, CuspSpec{0, 1, side_face(1, false)}}, 1);
        auto inv = bundle_invariants(b, h);
        CHECK(inv.euler.value == 0);
    }
    SUBCASE("variants give isomorphic bundles") {
        std::vector<CuspSpec> cusps = {CuspSpec{0, 0, side_face(0, true)},
                                       CuspSpec{0, 2, side_face(2, false)},
                                       CuspSpec{0, 3, side_face(3, false)}};
        auto b1 = cusp_modify(tb, c, cusps, 1);
        auto b2 = cusp_modify(tb, c, cusps, 2);
        CHECK(bundles_isomorphic(b1, b2));
    }
}

TEST_CASE("cusp on a nonseparating curve flips the euler bit") {
    auto m = build_surface(torus_diag_scheme(3, 3));
    auto h = homology(m);
    auto c = embed_multicurve(m, {tt::walk_of(*m, {"v0_0", "v0_1", "v0_2"})});
    auto tb = fold_modify(discrete_tangent(m), c);
    const int e = c.components[0][0].edge;
    const int side = m->edge_occs[e][0].face;
    auto b = cusp_modify(tb, c, {CuspSpec{0, 0, side}}, 1);
    auto inv = bundle_invariants(b, h);
    // Lemma: bit = chi(M) + |P| mod 2 = 1.
    CHECK(inv.euler.is_bit);
    CHECK(inv.euler.value == 1);
}

TEST_CASE("isomorphism criterion") {
    auto m = build_surface(tt::octahedron());
    auto tg = discrete_tangent(m);
    CHECK(bundles_isomorphic(tg, tg));
    CHECK(!bundles_isomorphic(tg, trivial_bundle(m)));

    auto t = tri(tt::torus_square());
    CHECK(bundles_isomorphic(discrete_tangent(t), trivial_bundle(t)));
}

TEST_CASE("non-triangulated input is rejected") {
    auto m = build_surface(tt::torus_grid(3, 3));
    CHECK_THROWS_AS(discrete_tangent(m), InputError);
}

TEST_CASE("cusp_modify rejects a bundle without the fold") {
    auto m = build_surface(tt::octahedron());
    auto c = embed_multicurve(m, {tt::walk_of(*m, {"e23", "e34", "e45", "e52"})});
    auto tg = discrete_tangent(m);
    const int e = c.components[0][0].edge;
    CHECK_THROWS_AS(cusp_modify(tg, c, {CuspSpec{0, 0, m->edge_occs[e][0].face}}, 1),
                    InputError);
}
