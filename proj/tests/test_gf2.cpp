#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foldcusp/gf2.hpp"

using namespace foldcusp;

TEST_CASE("echelon and rank") {
    Gf2Mat a(3, 3);
    a.set(0, 0, 1);
    a.set(0, 1, 1);
    a.set(1, 1, 1);
    a.set(1, 2, 1);
    a.set(2, 0, 1);
    a.set(2, 2, 1);  // row2 = row0 + row1
    CHECK(a.rank() == 2);
}

TEST_CASE("inverse round trip") {
    Gf2Mat a(2, 2);
    a.set(0, 1, 1);
    a.set(1, 0, 1);
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    Gf2Vec x(2);
    x.set(0, 1);
    CHECK(inv->mul(a.mul(x)) == x);
}

TEST_CASE("singular matrix has no inverse") {
    Gf2Mat a(2, 2);
    a.set(0, 0, 1);
    a.set(1, 0, 1);
    CHECK(!a.inverse().has_value());
}

TEST_CASE("solve combination") {
    std::vector<Gf2Vec> rows(3, Gf2Vec(4));
    rows[0].set(0, 1);
    rows[0].set(1, 1);
    rows[1].set(1, 1);
    rows[1].set(2, 1);
    rows[2].set(3, 1);
    Gf2Vec target(4);
    target.set(0, 1);
    target.set(2, 1);
    target.set(3, 1);
    auto x = gf2_solve_combination(rows, target);
    REQUIRE(x.has_value());
    Gf2Vec acc(4);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (x->get(i)) acc ^= rows[i];
    CHECK(acc == target);

    Gf2Vec unreachable(4);
    unreachable.set(0, 1);
    CHECK(!gf2_solve_combination(rows, unreachable).has_value());
}
