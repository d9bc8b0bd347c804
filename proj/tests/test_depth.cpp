#include "doctest.h"

#include "asr/depth.hpp"
#include "asr/engine.hpp"
#include "asr/io.hpp"
#include "asr/random_instances.hpp"

using namespace asr;

TEST_CASE("stanley-reisner complexes") {
    // (x1*x2) in two variables: two isolated points
    CHECK(stanley_reisner(parse_ideal_text("(x1*x2)", 2)).facets() ==
          std::vector<std::vector<int>>{{0}, {1}});
    // variable ideal: the full simplex on the remaining vertices
    CHECK(stanley_reisner(parse_ideal_text("(x1, x2)", 4)).facets() ==
          std::vector<std::vector<int>>{{2, 3}});
    // all three pairs: three isolated points
    CHECK(stanley_reisner(parse_ideal_text("(x1*x2, x2*x3, x1*x3)", 3)).facets() ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    // the maximal ideal leaves only the empty face
    CHECK(stanley_reisner(parse_ideal_text("(x1, x2)", 2)).facets() ==
          std::vector<std::vector<int>>{{}});
    CHECK_THROWS_AS(stanley_reisner(parse_ideal_text("(x1^2)", 2)), PreconditionError);

    // the radical route agrees with the transversal route
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const SquareFreeInstance instance = random_square_free_ideal(rng, 5, 4);
        CHECK(stanley_reisner(instance.ideal).facets() ==
              stanley_reisner(instance.primes).facets());
    }
}

TEST_CASE("reduced homology") {
    const Field q = Field::rationals();
    // hollow triangle: a circle
    CHECK(reduced_homology_ranks(SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}}), q) ==
          std::vector<std::int64_t>{0, 0, 1});
    // two isolated points
    CHECK(reduced_homology_ranks(SimplicialComplex(2, {{0}, {1}}), q) ==
          std::vector<std::int64_t>{0, 1});
    // solid simplex: contractible
    CHECK(reduced_homology_ranks(SimplicialComplex(3, {{0, 1, 2}}), q) ==
          std::vector<std::int64_t>{0, 0, 0, 0});
    // just the empty face
    CHECK(reduced_homology_ranks(SimplicialComplex(1, {{}}), q) ==
          std::vector<std::int64_t>{1});
    // hollow tetrahedron boundary: a 2-sphere
    CHECK(reduced_homology_ranks(
              SimplicialComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), q) ==
          std::vector<std::int64_t>{0, 0, 0, 1});

    // rationals and GF(2) agree on the curated small complexes
    const Field f2 = Field::prime(2);
    for (const auto& facets : std::vector<std::vector<std::vector<int>>>{
             {{0, 1}, {1, 2}, {0, 2}}, {{0}, {1}}, {{0, 1, 2}}, {{}},
             {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}}) {
        const SimplicialComplex c(4, facets);
        CHECK(reduced_homology_ranks(c, q) == reduced_homology_ranks(c, f2));
    }

    // six-vertex projective plane: 2-torsion separates the coefficient fields
    const SimplicialComplex rp2(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                    {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
    CHECK(reduced_homology_ranks(rp2, q) == std::vector<std::int64_t>{0, 0, 0, 0});
    CHECK(reduced_homology_ranks(rp2, f2) == std::vector<std::int64_t>{0, 0, 1, 1});
    CHECK(reduced_homology_ranks(rp2, Field::prime(3)) ==
          std::vector<std::int64_t>{0, 0, 0, 0});
}

TEST_CASE("square-free depth") {
    const Field q = Field::rationals();
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<Monomial> gens;
            for (int i = 0; i < k; ++i) gens.push_back(Monomial::variable(n, i));
            CHECK(depth_square_free(MonomialIdeal(n, gens), q) == n - k);
        }
    CHECK(depth_square_free(parse_ideal_text("(x1*x2)", 2), q) == 1);
    CHECK(depth_square_free(parse_ideal_text("(x1*x2, x2*x3, x1*x3)", 3), q) == 1);

    // the lattice scan agrees with the exhaustive scan
    Rng rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        const SquareFreeInstance instance = random_square_free_ideal(rng, 5, 4);
        CHECK(depth_square_free(instance.ideal, q) ==
              depth_square_free_full_scan(instance.ideal, q));
        CHECK(depth_square_free(instance.primes, q) == depth_square_free(instance.ideal, q));
    }
}

TEST_CASE("depth via associated radicals") {
    const Field q = Field::rationals();
    // the maximal ideal has depth zero
    CHECK(depth_via_hochster(parse_ideal_text("(x1, x2, x3)", 3), q).depth == 0);

    // self-consistency on curated Cohen-Macaulay square-free ideals
    for (const auto& text : {"(x1, x2)", "(x1*x2, x2*x3, x1*x3)", "(x1*x2)"}) {
        const MonomialIdeal ideal = parse_ideal_text(text, 3);
        const DepthReport report = depth_via_hochster(ideal, q);
        CHECK(report.depth == depth_square_free(ideal, q));
        CHECK(report.per_radical.at(report.argmin) == report.depth);
    }

    // the minimum can only drop below the square-free depth, never exceed it
    Rng rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        const SquareFreeInstance instance = random_square_free_ideal(rng, 4, 3);
        const DepthReport report = depth_via_hochster(instance.ideal, q);
        CHECK(report.depth <= depth_square_free(instance.ideal, q));
        for (const auto& [radical, d] : report.per_radical) CHECK(report.depth <= d);
    }
}

TEST_CASE("depth bounds") {
    const Field q = Field::rationals();
    Rng rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        const SquareFreeInstance instance = random_square_free_ideal(rng, 5, 4);
        const int d = depth_square_free(instance.ideal, q);
        CHECK(d >= 0);
        CHECK(d <= instance.ideal.ambient() - 1);
    }
}
