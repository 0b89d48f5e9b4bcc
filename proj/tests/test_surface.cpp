#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foldcusp/surface.hpp"
#include "test_helpers.hpp"

using namespace foldcusp;
namespace tt = foldcusp::testing;

TEST_CASE("canonical one-face words classify correctly") {
    auto torus = build_surface(tt::torus_square());
    CHECK(torus->euler_char == 0);
    CHECK(torus->orientable);
    CHECK(torus->surface_class == SurfaceClass{true, 1});
    CHECK(torus->V == 1);
    CHECK(torus->E == 2);

    auto rp2 = build_surface(tt::projective_plane());
    CHECK(rp2->euler_char == 1);
    CHECK(!rp2->orientable);
    CHECK(rp2->surface_class == SurfaceClass{false, 1});

    auto klein = build_surface(tt::klein_bottle());
    CHECK(klein->euler_char == 0);
    CHECK(!klein->orientable);
    CHECK(klein->surface_class == SurfaceClass{false, 2});

    auto sphere = build_surface(tt::sphere_bigon());
    CHECK(sphere->euler_char == 2);
    CHECK(sphere->orientable);
    CHECK(sphere->surface_class == SurfaceClass{true, 0});
    CHECK(sphere->V == 2);
}

TEST_CASE("octahedron counts") {
    auto m = build_surface(tt::octahedron());
    CHECK(m->V == 6);
    CHECK(m->E == 12);
    CHECK(m->F == 8);
    CHECK(m->euler_char == 2);
    CHECK(m->orientable);
    CHECK(m->triangulated());
}

TEST_CASE("torus grid") {
    auto m = build_surface(tt::torus_grid(3, 3));
    CHECK(m->V == 9);
    CHECK(m->E == 18);
    CHECK(m->F == 9);
    CHECK(m->euler_char == 0);
    CHECK(m->orientable);
}

TEST_CASE("scheme validation errors") {
    CHECK_THROWS_AS(build_surface(tt::scheme({{"a", "a", "a"}})), InputError);
    CHECK_THROWS_AS(build_surface(tt::scheme({{"a", "-a"}, {}})), InputError);
    CHECK_THROWS_AS(build_surface(tt::scheme({{"a", "-a"}, {"b", "-b"}})), InputError);
    CHECK_THROWS_AS(build_surface(GluingScheme{}), InputError);
}

TEST_CASE("build is deterministic") {
    auto a = build_surface(tt::torus_grid(3, 4));
    auto b = build_surface(tt::torus_grid(3, 4));
    CHECK(a->edge_names == b->edge_names);
    CHECK(a->V == b->V);
    for (int f = 0; f < a->F; ++f) CHECK(a->corner_vertex[f] == b->corner_vertex[f]);
}

TEST_CASE("canonical surfaces") {
    for (int g = 0; g <= 4; ++g) {
        auto m = canonical_surface(SurfaceClass{true, g});
        CHECK(m->surface_class == SurfaceClass{true, g});
        CHECK(m->euler_char == 2 - 2 * g);
        CHECK(m->triangulated());
    }
    for (int g = 1; g <= 4; ++g) {
        auto m = canonical_surface(SurfaceClass{false, g});
        CHECK(m->surface_class == SurfaceClass{false, g});
        CHECK(m->euler_char == 2 - g);
        CHECK(m->triangulated());
    }
    CHECK_THROWS_AS(canonical_surface(SurfaceClass{false, 0}), InputError);
}

TEST_CASE("subdivision preserves chi and orientability") {
    for (auto s : {tt::torus_square(), tt::projective_plane(), tt::klein_bottle(),
                   tt::sphere_bigon(), tt::octahedron()}) {
        auto m = build_surface(s);
        auto sub = subdivide(m);
        CHECK(sub.sub->euler_char == m->euler_char);
        CHECK(sub.sub->orientable == m->orientable);
        CHECK(sub.sub->triangulated());
        CHECK(sub.sub->V == m->V + m->E + m->F);
        CHECK(sub.sub->E == 6 * m->E);
        CHECK(sub.sub->F == 4 * m->E);
    }
}

TEST_CASE("links are consistent") {
    auto m = build_surface(tt::octahedron());
    int total_corners = 0;
    for (int v = 0; v < m->V; ++v) {
        total_corners += static_cast<int>(m->links[v].size());
        for (const auto& le : m->links[v]) {
            CHECK(m->corner_vertex[le.corner.face][le.corner.pos] == v);
            CHECK(m->vertex_of_end(le.crossed) == v);
        }
    }
    int expect = 0;
    for (int f = 0; f < m->F; ++f) expect += m->face_len(f);
    CHECK(total_corners == expect);
}
