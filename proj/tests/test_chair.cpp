#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "retcoh/chair.hpp"

using namespace retcoh;

TEST_CASE("arrow names and rotation") {
    CHECK(arrow_from_name("NE") == Arrow::NE);
    CHECK(std::string(arrow_name(Arrow::SW)) == "SW");
    CHECK(rotate_ccw(Arrow::NE) == Arrow::NW);
    CHECK(rotate_ccw(Arrow::NW) == Arrow::SW);
    CHECK(rotate_ccw(Arrow::SW) == Arrow::SE);
    CHECK(rotate_ccw(Arrow::SE) == Arrow::NE);
    CHECK_THROWS(arrow_from_name("N"));
}

TEST_CASE("builtin rule parses and validates") {
    BlockSubstitution b = BlockSubstitution::builtin();
    CHECK_NOTHROW(b.validate());
    // re-parse of the shipped text is identical
    BlockSubstitution b2 = BlockSubstitution::parse(
        BlockSubstitution::builtin_config());
    for (int a = 0; a < 4; ++a)
        for (int qy = 0; qy < 2; ++qy)
            for (int qx = 0; qx < 2; ++qx)
                CHECK(b.rule[a][qy][qx] == b2.rule[a][qy][qx]);
}

TEST_CASE("malformed rules are rejected with diagnostics") {
    CHECK_THROWS_WITH_AS(
        BlockSubstitution::parse("NE = SW:NE SE:NW NW:SE\n"),
        doctest::Contains("missing quadrant"), std::invalid_argument);
    CHECK_THROWS(BlockSubstitution::parse("bogus\n"));
    // a rotation-breaking rule parses but fails validation
    std::string broken =
        "NE = SW:NE SE:NW NW:SE NE:NE\n"
        "NW = SW:NE SE:NW NW:NW NE:NE\n"  // NE quadrant should carry SW
        "SW = SW:SW SE:NW NW:SE NE:SW\n"
        "SE = SW:NE SE:SE NW:SE NE:SW\n";
    BlockSubstitution b = BlockSubstitution::parse(broken);
    CHECK_THROWS_WITH_AS(b.validate(),
                         doctest::Contains("rotation-equivariant"),
                         std::invalid_argument);
}

TEST_CASE("region generation and consistency through order 8") {
    BlockSubstitution b = BlockSubstitution::builtin();
    for (unsigned n = 1; n <= 8; ++n) {
        Grid g = generate_region(b, Arrow::NE, n);
        REQUIRE(g.size == (std::size_t(1) << n));
        ChairConsistency cc = chair_consistency(g);
        REQUIRE(cc.ok);
        REQUIRE(cc.bad_vertices == 0);
        if (n >= 2) REQUIRE(cc.triominoes > 0);
    }
    // triomino count: each derived chair covers 3 interior cells; at order n
    // the (2^n - 2)^2 interior cells are covered exactly once
    Grid g = generate_region(b, Arrow::NE, 6);
    ChairConsistency cc = chair_consistency(g);
    std::size_t interior = (g.size - 2) * (g.size - 2);
    CHECK(cc.triominoes * 3 >= interior);
}

TEST_CASE("consistency holds for every seed") {
    BlockSubstitution b = BlockSubstitution::builtin();
    for (Arrow a : {Arrow::NE, Arrow::NW, Arrow::SW, Arrow::SE}) {
        ChairConsistency cc = chair_consistency(generate_region(b, a, 6));
        REQUIRE(cc.ok);
    }
}

TEST_CASE("single-arrow return lattices have rank 2") {
    BlockSubstitution b = BlockSubstitution::builtin();
    for (Arrow a : {Arrow::NE, Arrow::NW, Arrow::SW, Arrow::SE}) {
        ChairReturn r = return_lattice(b, Patch2D::single(a), 6);
        REQUIRE(r.stabilized);
        CHECK(r.lattice.rank() == 2);
        REQUIRE(r.lattice.index().has_value());
        CHECK(*r.lattice.index() == 2);  // the checkerboard sublattice
    }
}

TEST_CASE("supertile patches: rank 2, index a power of 2, k <= 4") {
    BlockSubstitution b = BlockSubstitution::builtin();
    for (unsigned k = 1; k <= 4; ++k) {
        Patch2D p = Patch2D::supertile(b, Arrow::NE, k);
        ChairReturn r = return_lattice(b, p, k + 4);
        REQUIRE(r.stabilized);
        REQUIRE(r.lattice.rank() == 2);
        REQUIRE(r.lattice.index().has_value());
        Int ix = *r.lattice.index();
        REQUIRE(ix > 0);
        while (ix % 2 == 0) ix /= 2;
        REQUIRE(ix == 1);
    }
}

TEST_CASE("random certified window patches have rank-2 lattices") {
    BlockSubstitution b = BlockSubstitution::builtin();
    Grid g = generate_region(b, Arrow::NE, 7);
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> pos(0, g.size - 4);
    std::uniform_int_distribution<int> wh(1, 3);
    int done = 0;
    while (done < 12) {
        std::size_t x0 = pos(rng), y0 = pos(rng);
        std::size_t w = wh(rng), h = wh(rng);
        Patch2D p;
        for (std::size_t dy = 0; dy < h; ++dy)
            for (std::size_t dx = 0; dx < w; ++dx)
                p.cells.push_back({static_cast<long>(dx), static_cast<long>(dy),
                                   g.at(x0 + dx, y0 + dy)});
        std::sort(p.cells.begin(), p.cells.end());
        ChairReturn r = return_lattice(b, p, 7);
        if (!r.stabilized) continue;  // only certified patches are asserted
        REQUIRE(r.lattice.rank() == 2);
        ++done;
    }
}

TEST_CASE("occurrences2d finds aligned and unaligned copies") {
    BlockSubstitution b = BlockSubstitution::builtin();
    Grid g = generate_region(b, Arrow::NE, 4);
    auto occ = occurrences2d(g, Patch2D::single(Arrow::NE));
    std::size_t ne = 0;
    for (std::size_t y = 0; y < g.size; ++y)
        for (std::size_t x = 0; x < g.size; ++x)
            if (g.at(x, y) == Arrow::NE) ++ne;
    CHECK(occ.size() == ne);
    // the patch occurring at most everywhere: empty never matches
    CHECK(occurrences2d(g, Patch2D{}).empty());
}

TEST_CASE("too few occurrences is an error") {
    BlockSubstitution b = BlockSubstitution::builtin();
    Patch2D p = Patch2D::supertile(b, Arrow::NE, 3);
    CHECK_THROWS(return_lattice(b, p, 3));  // patch is the whole region
}
