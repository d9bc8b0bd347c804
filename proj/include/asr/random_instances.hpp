#pragma once

#include <cstdint>
#include <random>

#include "asr/decomposition.hpp"
#include "asr/hypergraph.hpp"
#include "asr/monomial.hpp"

namespace asr {

using Rng = std::mt19937_64;

/// A square-free ideal given both ways: by its minimal primes and expanded.
struct SquareFreeInstance {
    RadicalIdeal primes;
    MonomialIdeal ideal;
};

/// Random antichain of at most `max_primes` non-empty supports in at most
/// `max_n` variables.
SquareFreeInstance random_square_free_ideal(Rng& rng, int max_n, int max_primes);

/// Like the above with a fixed ambient dimension.
SquareFreeInstance random_square_free_ideal_n(Rng& rng, int n, int max_primes);

/// Random proper nonzero monomial ideal with exponents bounded by `max_deg`.
MonomialIdeal random_monomial_ideal(Rng& rng, int max_n, int max_deg);

/// Random monomial in n variables with exponents bounded by `max_deg`.
Monomial random_monomial(Rng& rng, int n, std::int64_t max_deg);

/// Random bipartite graph without isolated vertices.
Hypergraph random_bipartite_graph(Rng& rng, int max_n);

/// Random balanced hypergraph without isolated vertices (rejection sampling
/// against the cycle search, with interval hypergraphs as a fallback).
Hypergraph random_balanced_hypergraph(Rng& rng, int max_n);

}  // namespace asr
