#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdc/ring.hpp"

#include <stdexcept>

using namespace sdc;

namespace {

Elem E(int symbol)
{
    return from_symbol(char('0' + symbol), RingId::F2u);
}

} // namespace

TEST_CASE("F2u addition and multiplication tables")
{
    // Full tables over the symbol order 0, 1, u, 1+u, written out by hand.
    const int add_tab[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    const int mul_tab[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 0, 2},
        {0, 3, 2, 1},
    };
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            CHECK(add(E(x), E(y)) == E(add_tab[x][y]));
            CHECK(mul(E(x), E(y)) == E(mul_tab[x][y]));
        }
}

TEST_CASE("ring axioms on all F2u elements")
{
    for (int x = 0; x < 4; ++x) {
        CHECK(add(E(x), zero(RingId::F2u)) == E(x));
        CHECK(mul(E(x), one(RingId::F2u)) == E(x));
        CHECK(add(E(x), E(x)) == zero(RingId::F2u)); // characteristic 2
        CHECK(square(E(x)) == mul(E(x), E(x)));
        for (int y = 0; y < 4; ++y) {
            CHECK(add(E(x), E(y)) == add(E(y), E(x)));
            CHECK(mul(E(x), E(y)) == mul(E(y), E(x)));
            for (int z = 0; z < 4; ++z)
                CHECK(mul(E(x), add(E(y), E(z))) == add(mul(E(x), E(y)), mul(E(x), E(z))));
        }
    }
    // u is nilpotent: u^2 = 0.
    CHECK(is_zero(square(E(2))));
}

TEST_CASE("units and involutions")
{
    CHECK(is_unit(E(1)));
    CHECK(is_unit(E(3)));
    CHECK_FALSE(is_unit(E(0)));
    CHECK_FALSE(is_unit(E(2)));

    CHECK(is_involution(E(1)));
    CHECK(is_involution(E(3)));
    CHECK_FALSE(is_involution(E(2)));

    CHECK(inverse(E(1)) == E(1));
    CHECK(inverse(E(3)) == E(3));
    CHECK_THROWS_AS(inverse(E(2)), std::invalid_argument);
    CHECK_THROWS_AS(inverse(E(0)), std::invalid_argument);

    CHECK(is_unit(one(RingId::F2)));
    CHECK_FALSE(is_unit(zero(RingId::F2)));
    CHECK(is_involution(one(RingId::F2)));
}

TEST_CASE("symbol codec")
{
    for (int x = 0; x < 4; ++x)
        CHECK(from_symbol(to_symbol(E(x)), RingId::F2u) == E(x));
    CHECK(to_symbol(zero(RingId::F2)) == '0');
    CHECK(to_symbol(one(RingId::F2)) == '1');
    CHECK_THROWS_AS(from_symbol('2', RingId::F2), std::invalid_argument);
    CHECK_THROWS_AS(from_symbol('3', RingId::F2), std::invalid_argument);
    CHECK_THROWS_AS(from_symbol('x', RingId::F2u), std::invalid_argument);
}

TEST_CASE("mixed-ring operations throw")
{
    Elem a = one(RingId::F2);
    Elem b = one(RingId::F2u);
    CHECK_THROWS_AS(add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
}

TEST_CASE("ring names")
{
    CHECK(ring_name(RingId::F2) == "F2");
    CHECK(ring_name(RingId::F2u) == "F2u");
    CHECK(parse_ring("F2") == RingId::F2);
    CHECK(parse_ring("F2u") == RingId::F2u);
    CHECK_THROWS_AS(parse_ring("GF4"), std::invalid_argument);
}

TEST_CASE("vector parsing and transport")
{
    RingVector v = parse_vector("0123", RingId::F2u);
    REQUIRE(v.size() == 4);
    CHECK(v[0] == E(0));
    CHECK(v[3] == E(3));
    CHECK(to_string(v) == "0123");

    RingVector w = parse_vector("0110", RingId::F2);
    CHECK(to_string(w) == "0110");
    CHECK_THROWS_AS(parse_vector("012", RingId::F2), std::invalid_argument);
}

TEST_CASE("vector arithmetic")
{
    RingVector x = parse_vector("0123", RingId::F2u);
    RingVector y = parse_vector("1111", RingId::F2u);
    CHECK(to_string(add(x, y)) == "1032");

    // dot = sum of products: 0*1 + 1*1 + 2*1 + 3*1 = 1 + u + 1 + u = 0.
    CHECK(is_zero(dot(x, y)));
    // scaling by u kills u-parts: u * (0,1,u,1+u) = (0,u,0,u).
    CHECK(to_string(scale(E(2), x)) == "0202");

    RingVector z = parse_vector("011", RingId::F2);
    CHECK_THROWS_AS(add(x, z), std::invalid_argument);
    CHECK_THROWS_AS(add(x, parse_vector("01", RingId::F2u)), std::invalid_argument);
}
