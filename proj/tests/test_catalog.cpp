#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdc/catalog.hpp"

#include <set>
#include <string>

using namespace sdc;

TEST_CASE("fnv1a64 reference values")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(fnv1a64(kCatalogText) == kCatalogChecksum);
}

TEST_CASE("embedded catalog loads")
{
    const Catalog& cat = Catalog::embedded();
    CHECK(cat.entries().size() == 47);

    std::set<std::string> ids;
    size_t constructions = 0, neighbours = 0;
    for (const CatalogEntry& e : cat.entries()) {
        CHECK(ids.insert(e.id).second);
        if (e.kind == EntryKind::Construction) {
            ++constructions;
            CHECK(e.params.has_value());
            CHECK(e.parent.empty());
        } else {
            ++neighbours;
            CHECK_FALSE(e.params.has_value());
            CHECK(cat.has(e.parent));
        }
    }
    CHECK(constructions == 39);
    CHECK(neighbours == 8);

    CHECK(cat.has("C68.1"));
    CHECK_FALSE(cat.has("C68.15"));
    CHECK_THROWS_AS(cat.at("C68.15"), std::out_of_range);

    const CatalogEntry& e = cat.at("C68.4");
    CHECK(e.kind == EntryKind::Construction);
    CHECK(e.d == 12);
    CHECK(e.family == 2);
    CHECK(e.alpha == 28);
    CHECK(e.beta == 1);
    CHECK(e.aut == 2);
    REQUIRE(e.params.has_value());
    CHECK(e.params->mu == make_elem(RingId::F2u, 1, 1));

    const CatalogEntry& n = cat.at("C54.1");
    CHECK(n.kind == EntryKind::Neighbour);
    CHECK(n.parent == "C54s.1");
    CHECK(n.x0.size() == 27);
    CHECK(n.d == 10);
    CHECK(n.family == 1);
    CHECK(n.alpha == 23);
    CHECK_FALSE(n.beta.has_value());
}

TEST_CASE("the embedded data lints clean")
{
    CHECK(Catalog::embedded().lint().empty());
}

TEST_CASE("parse rejects malformed text")
{
    const std::string good =
        "X1 construction F2 13 1 1 0111000101101 1101110000100 0101111110011 001101 "
        "d=- j=- alpha=- beta=- aut=-";

    CHECK_NOTHROW(Catalog::parse(good));
    CHECK_NOTHROW(Catalog::parse("# comment only\n\n"));

    // Duplicate id.
    CHECK_THROWS_AS(Catalog::parse(good + "\n" + good), std::runtime_error);
    // Unknown kind.
    CHECK_THROWS_AS(Catalog::parse("X1 mutation F2 13 1 1 0 0 0 0 d=- j=- alpha=- beta=- aut=-"),
                    std::runtime_error);
    // Missing a key in the tail.
    CHECK_THROWS_AS(
        Catalog::parse("X1 construction F2 13 1 1 0111000101101 1101110000100 0101111110011 "
                       "001101 d=- j=- alpha=- beta=-"),
        std::runtime_error);
    // Wrong key name.
    CHECK_THROWS_AS(
        Catalog::parse("X1 construction F2 13 1 1 0111000101101 1101110000100 0101111110011 "
                       "001101 d=- j=- alpha=- gamma=- aut=-"),
        std::runtime_error);
    // Non-numeric value.
    CHECK_THROWS_AS(
        Catalog::parse("X1 construction F2 13 1 1 0111000101101 1101110000100 0101111110011 "
                       "001101 d=ten j=- alpha=- beta=- aut=-"),
        std::runtime_error);
    // Bad construction params.
    CHECK_THROWS_AS(
        Catalog::parse("X1 construction F2 13 1 1 0111000101101 1101110000100 0101111110011 "
                       "00110 d=- j=- alpha=- beta=- aut=-"),
        std::runtime_error);
    // Neighbour with a non-binary x0.
    CHECK_THROWS_AS(Catalog::parse(good + "\nX2 neighbour X1 01201 d=- j=- alpha=- beta=- aut=-"),
                    std::runtime_error);
}

TEST_CASE("lint catches inconsistent records")
{
    const std::string base =
        "X1 construction F2 13 1 1 0111000101101 1101110000100 0101111110011 001101 "
        "d=- j=- alpha=- beta=- aut=-\n";

    // Unknown parent.
    Catalog c = Catalog::parse(
        base + "X2 neighbour NOPE 000001100101001000111101101 d=- j=- alpha=- beta=- aut=-");
    CHECK_FALSE(c.lint().empty());

    // x0 length differs from half the parent's binary length (27 here).
    c = Catalog::parse(base + "X2 neighbour X1 0011 d=- j=- alpha=- beta=- aut=-");
    CHECK_FALSE(c.lint().empty());

    // Family out of range for the length.
    c = Catalog::parse(
        base + "X2 neighbour X1 000001100101001000111101101 d=10 j=7 alpha=23 beta=- aut=-");
    CHECK_FALSE(c.lint().empty());

    // Family 1 at length 54 has no beta.
    c = Catalog::parse(
        base + "X2 neighbour X1 000001100101001000111101101 d=10 j=1 alpha=23 beta=4 aut=-");
    CHECK_FALSE(c.lint().empty());

    // Recorded distance contradicts the enumerator: family 1, alpha = 23
    // puts 167 words at weight 10, so d = 12 is impossible.
    c = Catalog::parse(
        base + "X2 neighbour X1 000001100101001000111101101 d=12 j=1 alpha=23 beta=- aut=-");
    CHECK_FALSE(c.lint().empty());

    // Alpha so large the predicted count goes negative.
    c = Catalog::parse(
        base + "X2 neighbour X1 000001100101001000111101101 d=10 j=1 alpha=100 beta=- aut=-");
    CHECK_FALSE(c.lint().empty());

    // Alpha recorded without a family.
    c = Catalog::parse(
        base + "X2 neighbour X1 000001100101001000111101101 d=10 j=- alpha=23 beta=- aut=-");
    CHECK_FALSE(c.lint().empty());
}

TEST_CASE("build resolves chains and caches nothing surprising")
{
    const Catalog& cat = Catalog::embedded();

    // C34s.1 repeats the C68.3 parameters, so their codes coincide.
    BinaryCode a = cat.build("C68.3");
    BinaryCode b = cat.build("C34s.1");
    CHECK(a == b);
    CHECK(a.length() == 68);
    CHECK(a.dim() == 34);

    // A neighbour differs from its parent but meets it in dimension k-1.
    BinaryCode nb = cat.build("C68.8");
    CHECK(nb.length() == 68);
    CHECK(is_self_dual(nb));
    CHECK_FALSE(nb == b);
    CHECK(intersection_dim(nb, b) == 33);

    CHECK_THROWS_AS(cat.build("missing"), std::out_of_range);
}

TEST_CASE("a neighbour cycle is detected")
{
    Catalog c = Catalog::parse("A1 neighbour B1 0011 d=- j=- alpha=- beta=- aut=-\n"
                               "B1 neighbour A1 0011 d=- j=- alpha=- beta=- aut=-");
    CHECK_THROWS_AS(c.build("A1"), std::runtime_error);
}

TEST_CASE("fast verification of selected entries")
{
    const Catalog& cat = Catalog::embedded();
    for (const std::string& id : {"C54s.1", "C54.1", "C68.1", "C68.14", "C82.1", "C94.1"}) {
        VerifyResult r = cat.verify_entry(id, VerifyDepth::Fast);
        CHECK(r.id == id);
        CHECK(r.ok);
        CHECK(r.failures.empty());
        CHECK_FALSE(r.profile.has_value());
    }
}

TEST_CASE("full verification compares the enumerator class")
{
    const Catalog& cat = Catalog::embedded();
    VerifyResult r = cat.verify_entry("C68.5", VerifyDepth::Full);
    CHECK(r.ok);
    REQUIRE(r.profile.has_value());
    CHECK(r.profile->census.at(12) == 442 + 4 * 32);
    CHECK(*r.profile->min_distance == 12);
}

TEST_CASE("verification flags a falsified record")
{
    // Reparse the embedded text with one distance bumped; the rebuilt code
    // cannot match it.
    std::string text = kCatalogText;
    size_t pos = text.find("C68.1 construction");
    REQUIRE(pos != std::string::npos);
    size_t dpos = text.find("d=12", pos);
    REQUIRE(dpos != std::string::npos);
    text.replace(dpos, 4, "d=14");
    Catalog c = Catalog::parse(text);
    VerifyResult r = c.verify_entry("C68.1", VerifyDepth::Fast);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failures.empty());
}
