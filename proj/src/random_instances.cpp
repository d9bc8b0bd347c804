#include "asr/random_instances.hpp"

#include <algorithm>
#include <set>

namespace asr {

namespace {

std::vector<int> random_subset(Rng& rng, int n, int min_size, int max_size) {
    std::uniform_int_distribution<int> size_dist(min_size, std::min(max_size, n));
    const int size = size_dist(rng);
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(size));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

SquareFreeInstance random_square_free_ideal_n(Rng& rng, int n, int max_primes) {
    std::uniform_int_distribution<int> count_dist(1, max_primes);
    const int r = count_dist(rng);
    std::vector<PrimeSupport> primes;
    for (int j = 0; j < r; ++j) primes.emplace_back(random_subset(rng, n, 1, n));
    RadicalIdeal radical(n, std::move(primes));  // canonicalizes to the antichain
    return SquareFreeInstance{radical, radical.to_monomial_ideal()};
}

SquareFreeInstance random_square_free_ideal(Rng& rng, int max_n, int max_primes) {
    std::uniform_int_distribution<int> n_dist(2, max_n);
    return random_square_free_ideal_n(rng, n_dist(rng), max_primes);
}

Monomial random_monomial(Rng& rng, int n, std::int64_t max_deg) {
    std::uniform_int_distribution<std::int64_t> e_dist(0, max_deg);
    std::vector<std::int64_t> exps(static_cast<std::size_t>(n));
    for (auto& e : exps) e = e_dist(rng);
    return Monomial(std::move(exps));
}

MonomialIdeal random_monomial_ideal(Rng& rng, int max_n, int max_deg) {
    std::uniform_int_distribution<int> n_dist(2, max_n);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> count_dist(2, 5);
    const int count = count_dist(rng);
    std::vector<Monomial> gens;
    while (static_cast<int>(gens.size()) < count) {
        Monomial m = random_monomial(rng, n, max_deg);
        if (!m.is_one()) gens.push_back(std::move(m));
    }
    return MonomialIdeal(n, std::move(gens));
}

Hypergraph random_bipartite_graph(Rng& rng, int max_n) {
    std::uniform_int_distribution<int> n_dist(2, max_n);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> side_dist(1, n - 1);
    const int left = side_dist(rng);
    std::bernoulli_distribution edge_dist(0.5);
    std::set<std::vector<int>> edges;
    for (int a = 0; a < left; ++a)
        for (int b = left; b < n; ++b)
            if (edge_dist(rng)) edges.insert({a, b});
    // connect isolated vertices so the cover ideal is defined
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    for (const auto& e : edges)
        for (int v : e) covered[static_cast<std::size_t>(v)] = true;
    std::uniform_int_distribution<int> left_pick(0, left - 1);
    std::uniform_int_distribution<int> right_pick(left, n - 1);
    for (int v = 0; v < n; ++v) {
        if (covered[static_cast<std::size_t>(v)]) continue;
        const int other = v < left ? right_pick(rng) : left_pick(rng);
        edges.insert({std::min(v, other), std::max(v, other)});
        covered[static_cast<std::size_t>(other)] = true;
    }
    return Hypergraph(n, std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

Hypergraph random_balanced_hypergraph(Rng& rng, int max_n) {
    std::uniform_int_distribution<int> n_dist(3, max_n);
    const int n = n_dist(rng);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::uniform_int_distribution<int> m_dist(2, 6);
        const int m = m_dist(rng);
        std::set<std::vector<int>> edges;
        while (static_cast<int>(edges.size()) < m) edges.insert(random_subset(rng, n, 1, 4));
        std::vector<bool> covered(static_cast<std::size_t>(n), false);
        for (const auto& e : edges)
            for (int v : e) covered[static_cast<std::size_t>(v)] = true;
        for (int v = 0; v < n; ++v)
            if (!covered[static_cast<std::size_t>(v)]) edges.insert({v});
        Hypergraph h(n, std::vector<std::vector<int>>(edges.begin(), edges.end()));
        if (is_balanced(h).balanced) return h;
    }
    // Interval hypergraphs have totally unimodular incidence matrices.
    std::set<std::vector<int>> edges;
    std::uniform_int_distribution<int> v_dist(0, n - 1);
    while (static_cast<int>(edges.size()) < 3) {
        int a = v_dist(rng), b = v_dist(rng);
        if (a > b) std::swap(a, b);
        std::vector<int> interval;
        for (int v = a; v <= b; ++v) interval.push_back(v);
        edges.insert(std::move(interval));
    }
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    for (const auto& e : edges)
        for (int v : e) covered[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v < n; ++v)
        if (!covered[static_cast<std::size_t>(v)]) edges.insert({v});
    Hypergraph h(n, std::vector<std::vector<int>>(edges.begin(), edges.end()));
    check_invariant(is_balanced(h).balanced, "interval fallback produced an unbalanced hypergraph");
    return h;
}

}  // namespace asr
