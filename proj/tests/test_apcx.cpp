#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "retcoh/apcx.hpp"
#include "retcoh/config.hpp"

using namespace retcoh;

TEST_CASE("fibonacci radius 0 AP graph") {
    CollaredAlphabet c = collar(presets::fibonacci(), 0);
    APGraph g = build_ap(c);
    CHECK(g.num_edges == 2);
    CHECK(g.num_vertices == 1);  // legal pairs aa, ab, ba glue everything
    CHECK(g.num_components == 1);
    CHECK(cycle_rank(g) == 2);
    InducedMap m = induced_map(g);
    CHECK(m.matrix.rows() == 2);
    CHECK(m.matrix.is_integral());
    // similar to the substitution matrix: same char poly x^2 - x - 1
    auto cp = char_poly(m.matrix);
    CHECK(cp == char_poly(RatMatrix::from_int_rows({{1, 1}, {1, 0}})));
    CHECK(eventual_rank(m.matrix) == 2);
}

TEST_CASE("cycle basis elements are cycles") {
    for (auto [mk, r] :
         std::vector<std::pair<Substitution (*)(), std::size_t>>{
             {presets::fibonacci, 0},
             {presets::thue_morse, 1},
             {presets::three_e_morse, 1}}) {
        CollaredAlphabet c = collar(mk(), r);
        APGraph g = build_ap(c);
        for (const IntVec& z : g.cycle_basis) {
            IntVec b = g.boundary(z);
            for (const Int& x : b) REQUIRE(x == 0);
            // coordinates read back as the standard basis
        }
        for (std::size_t i = 0; i < g.cycle_basis.size(); ++i) {
            IntVec coords = g.cycle_coords(g.cycle_basis[i]);
            for (std::size_t j = 0; j < coords.size(); ++j)
                REQUIRE(coords[j] == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("cech H1 ranks of the paper examples") {
    CHECK(cech_h1_rank(presets::fibonacci(), 0) == 2);
    CHECK(cech_h1_rank(presets::thue_morse(), 1) == 2);
    CHECK(cech_h1_rank(presets::three_e_morse(), 1) == 3);
}

TEST_CASE("cycle ranks of the paper examples") {
    CHECK(cycle_rank(build_ap(collar(presets::fibonacci(), 0))) == 2);
    CHECK(cycle_rank(build_ap(collar(presets::thue_morse(), 1))) == 3);
    CHECK(cycle_rank(build_ap(collar(presets::three_e_morse(), 1))) == 5);
}

TEST_CASE("three-e morse induced map invariants") {
    APGraph g = build_ap(collar(presets::three_e_morse(), 1));
    RatMatrix m = induced_map(g).matrix;
    REQUIRE(m.rows() == 5);
    CHECK(eventual_rank(m) == 3);
    // char poly x^2 (x-3)(x-1)(x+1), i.e. eigenvalues 3, 1, -1, 0, 0
    PolyFactors f = factor_poly(char_poly(m));
    std::map<Rat, unsigned> roots(f.roots.begin(), f.roots.end());
    CHECK(roots[Rat(0)] == 2);
    CHECK(roots[Rat(3)] == 1);
    CHECK(roots[Rat(1)] == 1);
    CHECK(roots[Rat(-1)] == 1);
    CHECK(f.remainder.size() == 1);
    // basis-independent eigenvalue checks via ranks of shifted products
    RatMatrix mk = m.pow(5);
    CHECK(rank_q(mk) == 3);
    for (long lam : {3L, 1L, -1L})
        CHECK(rank_q(m.shifted(Rat(lam)) * mk) == 2);
    CHECK(rank_q(m.shifted(Rat(2)) * mk) == 3);  // 2 is not an eigenvalue
    // Cayley-Hamilton for the nonzero part
    RatMatrix prod = m.shifted(Rat(3)) * m.shifted(Rat(1)) *
                     m.shifted(Rat(-1)) * m.pow(2);
    CHECK(prod.is_zero());
}

TEST_CASE("thue-morse induced map invariants") {
    RatMatrix m = induced_map(build_ap(collar(presets::thue_morse(), 1))).matrix;
    REQUIRE(m.rows() == 3);
    CHECK(eventual_rank(m) == 2);
    PolyFactors f = factor_poly(char_poly(m));
    std::map<Rat, unsigned> roots(f.roots.begin(), f.roots.end());
    CHECK(roots[Rat(0)] == 1);
    CHECK(roots[Rat(2)] == 1);
    CHECK(roots[Rat(-1)] == 1);
}

TEST_CASE("edge substitution paths are consistent") {
    for (auto [mk, r] :
         std::vector<std::pair<Substitution (*)(), std::size_t>>{
             {presets::fibonacci, 1}, {presets::thue_morse, 1}}) {
        CollaredAlphabet c = collar(mk(), r);
        APGraph g = build_ap(c);
        for (std::size_t e = 0; e < g.num_edges; ++e) {
            const Word& path = g.edge_subst[e];
            REQUIRE(!path.empty());
            // path endpoints are the vertex images of the edge endpoints
            REQUIRE(g.src[static_cast<std::size_t>(path.front())] ==
                    g.vertex_image[static_cast<std::size_t>(g.src[e])]);
            REQUIRE(g.dst[static_cast<std::size_t>(path.back())] ==
                    g.vertex_image[static_cast<std::size_t>(g.dst[e])]);
            // interior adjacency
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                REQUIRE(g.dst[static_cast<std::size_t>(path[i])] ==
                        g.src[static_cast<std::size_t>(path[i + 1])]);
        }
    }
}

TEST_CASE("h1 rank is stable under extra collaring") {
    CHECK(cech_h1_rank(presets::fibonacci(), 1) == 2);
    CHECK(cech_h1_rank(presets::fibonacci(), 2) == 2);
    CHECK(cech_h1_rank(presets::thue_morse(), 2) == 2);
    CHECK(cech_h1_rank(presets::three_e_morse(), 2) == 3);
}
