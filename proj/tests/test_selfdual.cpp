#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdc/bordered.hpp"
#include "sdc/code.hpp"
#include "sdc/weights.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

using namespace sdc;

namespace {

BinaryMatrix from_strings(const std::vector<std::string>& rows)
{
    BinaryMatrix m(rows.size(), rows.at(0).size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == '1')
                m.set(r, c, true);
    return m;
}

// The extended Hamming code of length 8.
BinaryCode hamming8()
{
    return BinaryCode::from_generator(from_strings({
        "11110000",
        "00111100",
        "00001111",
        "10101010",
    }));
}

// i2 x 4: the repetition code summed four times, the simplest Type I code.
BinaryCode rep2x4()
{
    return BinaryCode::from_generator(from_strings({
        "11000000",
        "00110000",
        "00001100",
        "00000011",
    }));
}

BinaryMatrix word8(const std::string& bits)
{
    return from_strings({bits});
}

} // namespace

TEST_CASE("from_generator canonicalizes")
{
    BinaryMatrix g = from_strings({"1100", "0110", "1010"});
    BinaryCode c = BinaryCode::from_generator(g);
    CHECK(c.length() == 4);
    CHECK(c.dim() == 2);
    REQUIRE(c.pivots().size() == 2);
    CHECK(c.pivots()[0] == 0);
    CHECK(c.pivots()[1] == 1);

    // Same row space in a different presentation gives the same object.
    BinaryCode d = BinaryCode::from_generator(from_strings({"1010", "0110"}));
    CHECK(c == d);

    BinaryCode z = BinaryCode::from_generator(BinaryMatrix(3, 5));
    CHECK(z.dim() == 0);
    CHECK(z.length() == 5);
}

TEST_CASE("membership")
{
    BinaryCode c = hamming8();
    CHECK(c.contains(word8("00000000").row(0)));
    CHECK(c.contains(word8("11111111").row(0)));
    CHECK(c.contains(word8("11110000").row(0)));
    CHECK(c.contains(word8("01011010").row(0)));
    CHECK_FALSE(c.contains(word8("10000000").row(0)));
    CHECK_FALSE(c.contains(word8("11100000").row(0)));
}

TEST_CASE("extended Hamming code is Type II")
{
    BinaryCode c = hamming8();
    REQUIRE(c.dim() == 4);
    CHECK(is_self_dual(c));
    CHECK(type_of(c) == CodeType::TypeII);

    WeightProfile dist = weight_distribution_exhaustive(c);
    CHECK(dist.census == std::map<uint32_t, uint64_t>{{0, 1}, {4, 14}, {8, 1}});
    REQUIRE(dist.min_distance.has_value());
    CHECK(*dist.min_distance == 4);
}

TEST_CASE("repetition blocks are Type I")
{
    BinaryCode c = rep2x4();
    CHECK(is_self_dual(c));
    CHECK(type_of(c) == CodeType::TypeI);
}

TEST_CASE("non-self-dual inputs are recognized")
{
    // Self-orthogonal but of too small a dimension.
    BinaryCode small = BinaryCode::from_generator(from_strings({"11110000", "00001111"}));
    CHECK_FALSE(is_self_dual(small));

    // Half dimension but not self-orthogonal.
    BinaryCode skew = BinaryCode::from_generator(from_strings({
        "10000001",
        "01000001",
        "00100001",
        "00010001",
    }));
    CHECK(skew.dim() == 4);
    CHECK_FALSE(is_self_dual(skew));
}

TEST_CASE("the all-ones word lies in every self-dual code")
{
    // 1 . c = wt(c) mod 2 = 0 for all c in C, so 1 is in C-perp = C.
    ConstructionParams p =
        parse_record("F2 13 1 1 0111000101101 1101110000100 0101111110011 001101");
    BinaryCode c = build_selfdual(p);
    BinaryMatrix ones(1, c.length());
    for (size_t i = 0; i < c.length(); ++i)
        ones.set(0, i, true);
    CHECK(c.contains(ones.row(0)));
    CHECK(hamming8().contains(word8("11111111").row(0)));
    CHECK(rep2x4().contains(word8("11111111").row(0)));
}

TEST_CASE("neighbour of a small code")
{
    BinaryCode c = hamming8();
    BinaryMatrix x = word8("11000000"); // even weight, outside c
    REQUIRE_FALSE(c.contains(x.row(0)));

    BinaryCode nb = neighbour(c, x);
    CHECK(nb.length() == 8);
    CHECK(nb.dim() == 4);
    CHECK(is_self_dual(nb));
    CHECK(nb.contains(x.row(0)));
    CHECK(intersection_dim(c, nb) == 3);
    CHECK_FALSE(nb == c);
}

TEST_CASE("neighbour argument checks")
{
    BinaryCode c = hamming8();
    // Odd weight.
    CHECK_THROWS_AS(neighbour(c, word8("10000000")), std::invalid_argument);
    // Already in the code.
    CHECK_THROWS_AS(neighbour(c, word8("11110000")), std::invalid_argument);
    // Wrong length.
    CHECK_THROWS_AS(neighbour(c, from_strings({"110000"})), std::invalid_argument);
    // Not self-dual.
    BinaryCode bad = BinaryCode::from_generator(from_strings({"11110000"}));
    CHECK_THROWS_AS(neighbour(bad, word8("11000000")), std::invalid_argument);
}

TEST_CASE("neighbour properties on random constructions")
{
    ConstructionParams p =
        parse_record("F2 13 1 1 0111000101101 1101110000100 0101111110011 001101");
    BinaryCode c = build_selfdual(p);
    std::mt19937_64 rng(51);

    int done = 0;
    while (done < 10) {
        BinaryMatrix x(1, c.length());
        for (size_t i = 0; i < c.length(); ++i)
            x.set(0, i, rng() & 1);
        if (x.row_weight(0) % 2 != 0 || c.contains(x.row(0)))
            continue;
        ++done;
        BinaryCode nb = neighbour(c, x);
        CHECK(is_self_dual(nb));
        CHECK(nb.dim() == c.dim());
        CHECK(nb.contains(x.row(0)));
        CHECK(intersection_dim(c, nb) == c.dim() - 1);
        // The neighbour relation is symmetric: building back along any
        // word of c outside nb returns some self-dual code meeting nb in
        // dimension k-1; the original c qualifies.
        CHECK(intersection_dim(nb, c) == c.dim() - 1);
    }
}

TEST_CASE("intersection_dim agrees with direct enumeration")
{
    std::mt19937_64 rng(52);
    for (int t = 0; t < 40; ++t) {
        size_t len = 6 + rng() % 5;
        BinaryMatrix g1(2 + rng() % 2, len), g2(2 + rng() % 2, len);
        for (size_t r = 0; r < g1.rows(); ++r)
            for (size_t c = 0; c < len; ++c)
                g1.set(r, c, rng() & 1);
        for (size_t r = 0; r < g2.rows(); ++r)
            for (size_t c = 0; c < len; ++c)
                g2.set(r, c, rng() & 1);
        BinaryCode c1 = BinaryCode::from_generator(g1);
        BinaryCode c2 = BinaryCode::from_generator(g2);

        // Count words of c1 lying in c2 by enumerating c1.
        uint64_t hits = 0;
        for (uint64_t msg = 0; msg < (uint64_t(1) << c1.dim()); ++msg) {
            BinaryMatrix w(1, len);
            for (size_t r = 0; r < c1.dim(); ++r)
                if ((msg >> r) & 1)
                    for (size_t c = 0; c < len; ++c)
                        if (c1.generator().get(r, c))
                            w.set(0, c, !w.get(0, c));
            if (c2.contains(w.row(0)))
                ++hits;
        }
        size_t dim = intersection_dim(c1, c2);
        CHECK((uint64_t(1) << dim) == hits);
    }
}
