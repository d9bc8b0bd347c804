#include "doctest.h"

#include "asr/decomposition.hpp"
#include "asr/io.hpp"
#include "asr/random_instances.hpp"

using namespace asr;

TEST_CASE("primary certification") {
    const PrimaryComponent c = check_primary(parse_ideal_text("(x1, x2^2)", 2));
    CHECK(c.prime_support == PrimeSupport({0, 1}));

    // squared component keeps its pure powers
    const MonomialIdeal q = power(parse_ideal_text("(x1^2, x2^2, x3^2)", 5), 2);
    CHECK(check_primary(q).prime_support == PrimeSupport({0, 1, 2}));

    CHECK_THROWS_WITH_AS(check_primary(parse_ideal_text("(x1*x2)", 2)),
                         doctest::Contains("not primary"), PreconditionError);
}

TEST_CASE("square-free decomposition") {
    CHECK(square_free_decompose(parse_ideal_text("(x1*x2)", 2)) ==
          RadicalIdeal(2, {PrimeSupport({0}), PrimeSupport({1})}));
    CHECK(square_free_decompose(parse_ideal_text("(x2, x1*x3)", 3)) ==
          RadicalIdeal(3, {PrimeSupport({0, 1}), PrimeSupport({1, 2})}));
    CHECK(square_free_decompose(parse_ideal_text("(x1*x2, x2*x3, x1*x3)", 3)) ==
          RadicalIdeal(3, {PrimeSupport({0, 1}), PrimeSupport({1, 2}), PrimeSupport({0, 2})}));
    CHECK_THROWS_AS(square_free_decompose(parse_ideal_text("(x1^2)", 2)), PreconditionError);

    // round-trip: re-intersecting the minimal primes reproduces the ideal
    Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const SquareFreeInstance instance = random_square_free_ideal(rng, 5, 4);
        CHECK(square_free_decompose(instance.ideal) == instance.primes);
        CHECK(instance.primes.to_monomial_ideal() == instance.ideal);
    }
}

TEST_CASE("symbolic powers of a decomposition") {
    const int n = 2;
    const Decomposition principal(
        n, {check_primary(parse_ideal_text("(x1)", n)), check_primary(parse_ideal_text("(x2)", n))});
    CHECK(symbolic_power(principal, 2) == parse_ideal_text("(x1^2*x2^2)", n));

    // all three supports of the alternating-depth ideal are minimal
    const Decomposition d(5, {check_primary(power(parse_ideal_text("(x1^2, x2^2, x3^2)", 5), 2)),
                              check_primary(parse_ideal_text("(x1^3, x2^3, x4)", 5)),
                              check_primary(parse_ideal_text("(x3, x4)", 5))});
    CHECK(d.minimal_components().size() == 3);
    CHECK(symbolic_power(d, 1) == d.full_intersection());
    CHECK(d.bight() == 3);

    // an embedded component is excluded from the symbolic power, which then
    // strictly contains the full intersection
    const Decomposition embedded(2, {check_primary(parse_ideal_text("(x1)", 2)),
                                     check_primary(parse_ideal_text("(x1^2, x2)", 2))});
    CHECK(embedded.minimal_components().size() == 1);
    CHECK(symbolic_power(embedded, 1) == parse_ideal_text("(x1)", 2));
    const MonomialIdeal full = embedded.full_intersection();
    for (const auto& g : full.generators()) CHECK(member(g, symbolic_power(embedded, 1)));
    CHECK(symbolic_power(embedded, 1) != full);

    // with no embedded component, symbolic power 1 is the full intersection
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const SquareFreeInstance instance = random_square_free_ideal(rng, 4, 4);
        CHECK(symbolic_power(instance.primes, 1) == instance.ideal);
    }
}

TEST_CASE("ordinary power sits inside the symbolic power") {
    Rng rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const SquareFreeInstance instance = random_square_free_ideal(rng, 4, 3);
        for (std::int64_t s = 1; s <= 3; ++s) {
            const MonomialIdeal ordinary = power(instance.ideal, s);
            const MonomialIdeal symbolic = symbolic_power(instance.primes, s);
            for (const auto& g : ordinary.generators()) CHECK(member(g, symbolic));
        }
    }
}

TEST_CASE("associated primes by box scan") {
    auto supports = [](const MonomialIdeal& ideal) { return ass_brute_force(ideal); };
    CHECK(supports(parse_ideal_text("(x1*x2)", 2)) ==
          std::vector<PrimeSupport>{PrimeSupport({0}), PrimeSupport({1})});
    CHECK(supports(parse_ideal_text("(x1*x2, x2^2*x3, x1*x3^3)", 3)) ==
          std::vector<PrimeSupport>{PrimeSupport({0, 1}), PrimeSupport({0, 2}),
                                    PrimeSupport({1, 2})});
    // an embedded prime shows up
    CHECK(supports(parse_ideal_text("(x1^2, x1*x2)", 2)) ==
          std::vector<PrimeSupport>{PrimeSupport({0}), PrimeSupport({0, 1})});
}

TEST_CASE("associated radical in canonical prime form") {
    const MonomialIdeal golden = parse_ideal_text("(x1*x2, x2^2*x3, x1*x3^3)", 3);
    CHECK(assoc_radical(golden, parse_monomial("x2*x3^2", 3)) ==
          RadicalIdeal(3, {PrimeSupport({0, 1})}));
    CHECK(assoc_radical(parse_ideal_text("(x1)", 2), Monomial::one(2)) ==
          RadicalIdeal(2, {PrimeSupport({0})}));
    CHECK(assoc_radical(parse_ideal_text("(x1^2*x2)", 2), parse_monomial("x1", 2)) ==
          RadicalIdeal(2, {PrimeSupport({0}), PrimeSupport({1})}));
    CHECK_THROWS_AS(assoc_radical(parse_ideal_text("(x1)", 2), parse_monomial("x1", 2)),
                    PreconditionError);
}

TEST_CASE("big height") {
    CHECK(bight(parse_ideal_text("(x1*x2, x2*x3, x1*x3)", 3)) == 2);
    CHECK(bight(parse_ideal_text("(x1^2, x1*x2)", 2)) == 2);
    CHECK(bight(parse_ideal_text("(x1)", 3)) == 1);
}

TEST_CASE("minimal transversals") {
    CHECK(minimal_transversals({{0, 1}}, 2) ==
          std::vector<PrimeSupport>{PrimeSupport({0}), PrimeSupport({1})});
    CHECK(minimal_transversals({{1}, {0, 2}}, 3) ==
          std::vector<PrimeSupport>{PrimeSupport({0, 1}), PrimeSupport({1, 2})});
    CHECK(minimal_transversals({}, 3).empty());
    CHECK_THROWS_AS(minimal_transversals({{}}, 2), PreconditionError);

    // every output hits every set and is inclusion-minimal
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const SquareFreeInstance instance = random_square_free_ideal(rng, 6, 5);
        std::vector<std::vector<int>> sets;
        for (const auto& p : instance.primes.primes()) sets.push_back(p.vars);
        auto hits_all = [&sets](const PrimeSupport& t) {
            for (const auto& s : sets) {
                bool hit = false;
                for (int v : s) hit = hit || t.contains(v);
                if (!hit) return false;
            }
            return true;
        };
        for (const auto& t : minimal_transversals(sets, 6)) {
            CHECK(hits_all(t));
            for (std::size_t drop = 0; drop < t.vars.size(); ++drop) {
                std::vector<int> smaller(t.vars);
                smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!smaller.empty()) CHECK_FALSE(hits_all(PrimeSupport(smaller)));
            }
        }
    }
}
