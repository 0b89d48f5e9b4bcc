#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foldcusp/homology.hpp"
#include "test_helpers.hpp"

using namespace foldcusp;
namespace tt = foldcusp::testing;

namespace {

void check_invariants(const SurfacePtr& m) {
    auto h = homology(m);
    const std::size_t r = h.rank();
    CHECK(static_cast<int>(r) == 2 - m->euler_char);
    CHECK(h.w2_bit == ((m->euler_char % 2) + 2) % 2);
    if (r > 0) {
        CHECK(h.cup_matrix.symmetric());
        CHECK(h.cup_matrix.rank() == r);  // nondegenerate
    }
    // Wu relation on basis classes: cup(x,x) = <w1, x>.
    for (std::size_t i = 0; i < r; ++i) {
        auto x = h.class_of_basis(i);
        CHECK(cup(h, x, x) == h.w1_vector.get(i));
    }
    // cup(w1, w1) = w2.
    CHECK(cup(h, h.w1_vector, h.w1_vector) == h.w2_bit);
    // Orientable iff w1 vanishes.
    CHECK(h.w1_vector.is_zero() == m->orientable);
}

}  // namespace

TEST_CASE("torus homology") {
    auto m = build_surface(tt::torus_square());
    auto h = homology(m);
    REQUIRE(h.rank() == 2);
    CHECK(h.cup_matrix.get(0, 0) == 0);
    CHECK(h.cup_matrix.get(0, 1) == 1);
    CHECK(h.cup_matrix.get(1, 0) == 1);
    CHECK(h.cup_matrix.get(1, 1) == 0);
    CHECK(h.w1_vector.is_zero());
    CHECK(h.w2_bit == 0);

    // cup(a, b) = 1, cup(a, a) = 0 on the basis classes.
    auto a = h.class_of_basis(0);
    auto b = h.class_of_basis(1);
    CHECK(cup(h, a, b) == 1);
    CHECK(cup(h, a, a) == 0);
    CHECK(cup(h, b, b) == 0);
}

TEST_CASE("projective plane homology") {
    auto m = build_surface(tt::projective_plane());
    auto h = homology(m);
    REQUIRE(h.rank() == 1);
    CHECK(h.cup_matrix.get(0, 0) == 1);
    CHECK(h.w1_vector.get(0) == 1);
    auto a = h.class_of_basis(0);
    CHECK(cup(h, a, a) == 1);
}

TEST_CASE("klein bottle homology") {
    auto m = build_surface(tt::klein_bottle());
    auto h = homology(m);
    REQUIRE(h.rank() == 2);
    // The crosscap word basis diagonalizes the form.
    CHECK(h.cup_matrix.get(0, 0) == 1);
    CHECK(h.cup_matrix.get(1, 1) == 1);
    CHECK(h.cup_matrix.get(0, 1) == 0);
    CHECK(h.w1_vector.get(0) == 1);
    CHECK(h.w1_vector.get(1) == 1);
    CHECK(h.w2_bit == 0);
    // Consistency: w1^2 = 1 + 1 = 0 = w2.
    CHECK(cup(h, h.w1_vector, h.w1_vector) == 0);
}

TEST_CASE("sphere has trivial H1") {
    auto m = build_surface(tt::octahedron());
    auto h = homology(m);
    CHECK(h.rank() == 0);
}

TEST_CASE("homology invariants across the canonical family") {
    for (int g = 0; g <= 3; ++g) check_invariants(canonical_surface(SurfaceClass{true, g}));
    for (int g = 1; g <= 4; ++g) check_invariants(canonical_surface(SurfaceClass{false, g}));
    check_invariants(build_surface(tt::torus_grid(3, 3)));
}

TEST_CASE("subdivision invariance of rank and cup matrix") {
    for (auto s : {tt::torus_square(), tt::klein_bottle(), tt::projective_plane()}) {
        auto m = build_surface(s);
        auto h = homology(m);
        auto sub = subdivide(m);
        auto h2 = homology(sub.sub);
        REQUIRE(h2.rank() == h.rank());
        // The carried basis has the same pairwise intersection matrix.
        for (std::size_t i = 0; i < h.rank(); ++i) {
            Walk ci = sub.carry_walk(h.basis_cycles[i]);
            for (std::size_t j = 0; j < h.rank(); ++j) {
                Walk cj = sub.carry_walk(h.basis_cycles[j]);
                CHECK(intersection_mod2(*sub.sub, ci, cj) ==
                      h.cup_matrix.get(i, j));
            }
            // One-sidedness transported too.
            CHECK(walk_one_sided(*sub.sub, ci) == (h.w1_vector.get(i) == 1));
        }
    }
}

TEST_CASE("class_of is linear and detects boundaries") {
    auto m = build_surface(tt::torus_grid(3, 3));
    auto h = homology(m);
    // A face boundary is null-homologous.
    Walk fb;
    for (const SideRef& s : m->faces[0]) fb.push_back(Step{s.edge, s.rev});
    CHECK(h.class_of(fb).is_zero());
    // A basis cycle evaluates to its cup_matrix column.
    for (std::size_t i = 0; i < h.rank(); ++i)
        CHECK(h.class_of(h.basis_cycles[i]) == h.class_of_basis(i));
}

TEST_CASE("coefficients invert evaluations") {
    auto m = build_surface(tt::klein_bottle());
    auto h = homology(m);
    for (std::size_t i = 0; i < h.rank(); ++i) {
        auto x = h.class_of_basis(i);
        auto coef = h.coefficients(x);
        // x = sum coef_j PD(b_j); re-evaluate.
        Z2Class1 acc(h.rank());
        for (std::size_t j = 0; j < h.rank(); ++j)
            if (coef.get(j)) acc ^= h.class_of_basis(j);
        CHECK(acc == x);
    }
}
