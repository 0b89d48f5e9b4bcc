#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foldcusp/multicurve.hpp"
#include "test_helpers.hpp"

using namespace foldcusp;
namespace tt = foldcusp::testing;

TEST_CASE("embed validation") {
    auto m = build_surface(tt::torus_grid(3, 3));
    // Column cycle v0_0, v0_1, v0_2.
    auto col = tt::walk_of(*m, {"v0_0", "v0_1", "v0_2"});
    auto c = embed_multicurve(m, {col});
    CHECK(c.size() == 1);

    // Edge reuse.
    CHECK_THROWS_AS(embed_multicurve(m, {tt::walk_of(*m, {"v0_0", "-v0_0"})}), InputError);
    // Empty input.
    CHECK_THROWS_AS(embed_multicurve(m, {}), InputError);
    // Not closed.
    CHECK_THROWS_AS(embed_multicurve(m, {tt::walk_of(*m, {"v0_0", "v0_1"})}), InputError);
}

TEST_CASE("octahedron equator separates into two disks") {
    auto m = build_surface(tt::octahedron());
    auto eq = tt::walk_of(*m, {"e23", "e34", "e45", "e52"});
    auto c = embed_multicurve(m, {eq});
    auto cut = cut_along(m, c);
    REQUIRE(cut.components.size() == 2);
    CHECK(cut.components[0].chi == 1);
    CHECK(cut.components[1].chi == 1);
    CHECK(cut.components[0].boundary.size() == 1);
    CHECK(cut.components[1].boundary.size() == 1);

    auto h = homology(m);
    auto s = curve_summary(h, c, {});
    CHECK(s.c_is_zero);
    REQUIRE(s.split.has_value());
    CHECK(s.split->chi_plus == 1);
    CHECK(s.split->chi_minus == 1);
    CHECK(s.split->n_plus == 0);
    CHECK(s.split->n_minus == 0);
    CHECK(s.one_sided_count == 0);
}

TEST_CASE("torus meridian is nonseparating") {
    auto m = build_surface(tt::torus_grid(3, 3));
    auto col = tt::walk_of(*m, {"v0_0", "v0_1", "v0_2"});
    auto c = embed_multicurve(m, {col});
    auto cut = cut_along(m, c);
    REQUIRE(cut.components.size() == 1);
    CHECK(cut.components[0].chi == 0);
    CHECK(cut.components[0].boundary.size() == 2);

    auto h = homology(m);
    auto s = curve_summary(h, c, {});
    CHECK(!s.c_is_zero);
    CHECK(!s.split.has_value());
    CHECK(s.c_squared == 0);
    CHECK(s.one_sided_count == 0);
}

TEST_CASE("contractible square on the torus") {
    auto m = build_surface(tt::torus_grid(3, 3));
    // Boundary of face 0: h0_0, v1_0, -h0_1, -v0_0.
    Walk fb;
    for (const SideRef& s : m->faces[0]) fb.push_back(Step{s.edge, s.rev});
    auto c = embed_multicurve(m, {fb});
    auto cut = cut_along(m, c);
    REQUIRE(cut.components.size() == 2);
    int chis[2] = {cut.components[0].chi, cut.components[1].chi};
    CHECK(((chis[0] == 1 && chis[1] == -1) || (chis[0] == -1 && chis[1] == 1)));

    auto h = homology(m);
    // Two cusps whose side faces lie outside the disk; the disk side gets
    // labeled by the face with the smallest id, which is face 0 = the disk.
    // Direction into the outside = into the non-disk side.
    const int e_top = m->faces[0][0].edge;  // h0_0, also adjacent to a face != 0
    const auto& occ = m->edge_occs[e_top];
    const int outside = occ[0].face == 0 ? occ[1].face : occ[0].face;
    std::vector<CuspSpec> cusps = {{0, 0, outside}, {0, 0, outside}};
    auto s = curve_summary(h, c, cusps);
    REQUIRE(s.split.has_value());
    // M+ is the side of face 0 (the disk): chi_plus = 1, chi_minus = -1.
    CHECK(s.split->chi_plus == 1);
    CHECK(s.split->chi_minus == -1);
    // Cusps point into the outside = M-, so they are positive.
    CHECK(s.split->n_plus == 2);
    CHECK(s.split->n_minus == 0);
}

TEST_CASE("projective plane core curve") {
    auto rp2 = build_surface(tt::projective_plane());
    auto sub = subdivide(rp2);
    auto m = sub.sub;
    auto h = homology(m);
    // Carry the core loop a into the subdivision.
    Walk core = sub.carry_walk({Step{rp2->edge_id("a"), false}});
    auto c = embed_multicurve(m, {core});
    CHECK(component_one_sided(c, 0));

    const int side = m->edge_occs[core[0].edge][0].face;
    auto s = curve_summary(h, c, {CuspSpec{0, 0, side}});
    CHECK(s.one_sided_count == 1);
    CHECK(s.c_squared == 1);
    CHECK(!s.split.has_value());
    CHECK(s.p_count == 1);
    CHECK(s.c_equals_w1);
}

TEST_CASE("klein bottle crosscap core is one-sided") {
    auto kb = build_surface(tt::klein_bottle());
    auto sub = subdivide(kb);
    Walk core = sub.carry_walk({Step{kb->edge_id("a"), false}});
    auto c = embed_multicurve(sub.sub, {core});
    CHECK(component_one_sided(c, 0));
}

TEST_CASE("two meridians split the torus into two annuli") {
    auto m = build_surface(tt::torus_grid(4, 3));
    auto c = embed_multicurve(
        m, {tt::walk_of(*m, {"v0_0", "v0_1", "v0_2"}), tt::walk_of(*m, {"v2_0", "v2_1", "v2_2"})});
    auto h = homology(m);
    auto s = curve_summary(h, c, {});
    CHECK(s.c_is_zero);
    REQUIRE(s.split.has_value());
    CHECK(s.split->chi_plus == 0);
    CHECK(s.split->chi_minus == 0);
    auto cut = cut_along(m, c);
    CHECK(cut.components.size() == 2);
    CHECK(cut.total_boundary_circles == 4);
}

TEST_CASE("cusp validation") {
    auto m = build_surface(tt::octahedron());
    auto eq = tt::walk_of(*m, {"e23", "e34", "e45", "e52"});
    auto c = embed_multicurve(m, {eq});
    auto h = homology(m);
    CHECK_THROWS_AS(curve_summary(h, c, {CuspSpec{0, 9, 0}}), InputError);
    CHECK_THROWS_AS(curve_summary(h, c, {CuspSpec{2, 0, 0}}), InputError);
    // Side face not adjacent to e23: face of word {"n4","e45","-n5"} is id 2.
    CHECK_THROWS_AS(curve_summary(h, c, {CuspSpec{0, 0, 2}}), InputError);
}

TEST_CASE("side swap leaves |chi+ - chi- - n+ + n-| unchanged under relabel") {
    auto m = build_surface(tt::torus_grid(3, 3));
    Walk fb;
    for (const SideRef& s : m->faces[4]) fb.push_back(Step{s.edge, s.rev});
    auto c = embed_multicurve(m, {fb});
    auto h = homology(m);
    auto s = curve_summary(h, c, {});
    REQUIRE(s.split.has_value());
    CHECK(s.split->chi_plus + s.split->chi_minus == m->euler_char);
}

TEST_CASE("Wu specialization: <w1, [C]> = one-sided count mod 2") {
    auto check = [](const SurfacePtr& m, const std::vector<Walk>& walks,
                    int expect_one_sided) {
        auto h = homology(m);
        auto c = embed_multicurve(m, walks);
        auto s = curve_summary(h, c, {});
        CHECK(s.one_sided_count == expect_one_sided);
        CHECK(cup(h, s.c_class, h.w1_vector) == s.one_sided_count % 2);
        CHECK(cup(h, s.c_class, s.c_class) == s.one_sided_count % 2);
    };
    {
        auto rp2 = build_surface(tt::projective_plane());
        auto sub = subdivide(rp2);
        check(sub.sub, {sub.carry_walk({Step{rp2->edge_id("a"), false}})}, 1);
    }
    {
        auto m = build_surface(tt::torus_grid(3, 3));
        check(m, {tt::walk_of(*m, {"v0_0", "v0_1", "v0_2"})}, 0);
    }
}
