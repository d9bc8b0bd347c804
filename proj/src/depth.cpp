#include "asr/depth.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "asr/engine.hpp"

namespace asr {

namespace {

using BInt = boost::multiprecision::cpp_int;

bool is_prime_int(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(std::int64_t p) {
    require(is_prime_int(p), "field characteristic must be prime");
    return Field{false, p};
}

Field Field::parse(const std::string& text) {
    if (text == "q") return rationals();
    if (text.rfind("p:", 0) == 0) {
        try {
            return prime(std::stoll(text.substr(2)));
        } catch (const PreconditionError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("malformed field: " + text);
        }
    }
    throw ParseError("field must be q or p:<prime>, got " + text);
}

SimplicialComplex::SimplicialComplex(int n, std::vector<std::vector<int>> facets) : n_(n) {
    require(n >= 0, "ambient must be non-negative");
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        require(f.empty() || (f.front() >= 0 && f.back() < n_), "facet vertex out of range");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Keep the maximal faces only.
    for (const auto& f : facets) {
        bool dominated = false;
        for (const auto& g : facets)
            if (g != f && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                dominated = true;
                break;
            }
        if (!dominated) facets_.push_back(f);
    }
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& sigma) const {
    std::vector<std::vector<int>> cut;
    cut.reserve(facets_.size());
    for (const auto& f : facets_) {
        std::vector<int> inter;
        std::set_intersection(f.begin(), f.end(), sigma.begin(), sigma.end(),
                              std::back_inserter(inter));
        cut.push_back(std::move(inter));
    }
    return SimplicialComplex(n_, std::move(cut));
}

SimplicialComplex stanley_reisner(const MonomialIdeal& j) {
    require(j.is_square_free(), "square-free ideal required");
    require(j.is_proper(), "proper ideal required");
    const int n = j.ambient();
    if (j.is_zero()) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        return SimplicialComplex(n, {all});
    }
    // sigma is a face iff its complement hits every generator support, so the
    // facets are the complements of the minimal transversals.
    std::vector<std::vector<int>> supports;
    for (const auto& g : j.generators()) supports.push_back(g.support());
    std::vector<std::vector<int>> facets;
    for (const auto& t : minimal_transversals(supports, n)) {
        std::vector<int> complement;
        for (int i = 0; i < n; ++i)
            if (!t.contains(i)) complement.push_back(i);
        facets.push_back(std::move(complement));
    }
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex stanley_reisner(const RadicalIdeal& r) {
    require(r.is_proper(), "proper radical ideal required");
    const int n = r.ambient();
    std::vector<std::vector<int>> facets;
    for (const auto& p : r.primes()) {
        std::vector<int> complement;
        for (int i = 0; i < n; ++i)
            if (!p.contains(i)) complement.push_back(i);
        facets.push_back(std::move(complement));
    }
    return SimplicialComplex(n, std::move(facets));
}

namespace {

BInt inverse_mod(const BInt& a, std::int64_t p) {
    // extended Euclid; a must be nonzero mod the prime p
    BInt old_r = a % p, r = p, old_s = 1, s = 0;
    if (old_r < 0) old_r += p;
    while (r != 0) {
        const BInt q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    check_invariant(old_r == 1, "element not invertible mod p");
    old_s %= p;
    if (old_s < 0) old_s += p;
    return old_s;
}

// Exact rank of a small integer matrix: fraction-free elimination over the
// rationals, modular elimination over a prime field.
int matrix_rank(std::vector<std::vector<BInt>> m, const Field& field) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();
    if (!field.is_rational)
        for (auto& row : m)
            for (auto& x : row) {
                x %= field.p;
                if (x < 0) x += field.p;
            }
    int rank = 0;
    BInt prev = 1;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        const auto& prow = m[static_cast<std::size_t>(rank)];
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows; ++i) {
            if (field.is_rational) {
                for (std::size_t j = col + 1; j < cols; ++j)
                    m[i][j] = (prow[col] * m[i][j] - m[i][col] * prow[j]) / prev;
            } else {
                const BInt factor = (m[i][col] * inverse_mod(prow[col], field.p)) % field.p;
                for (std::size_t j = col + 1; j < cols; ++j) {
                    m[i][j] = (m[i][j] - factor * prow[j]) % field.p;
                    if (m[i][j] < 0) m[i][j] += field.p;
                }
            }
            m[i][col] = 0;
        }
        prev = field.is_rational ? prow[col] : prev;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::vector<int>>> faces_by_dimension(const SimplicialComplex& complex) {
    // index d+1 holds the faces of dimension d (so index 0 is the empty face)
    std::set<std::vector<int>> all;
    for (const auto& f : complex.facets()) {
        const std::size_t k = f.size();
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
            std::vector<int> face;
            for (std::size_t i = 0; i < k; ++i)
                if (sub & (std::uint64_t{1} << i)) face.push_back(f[i]);
            all.insert(std::move(face));
        }
    }
    std::vector<std::vector<std::vector<int>>> by_dim;
    for (const auto& face : all) {
        const std::size_t slot = face.size();
        if (by_dim.size() <= slot) by_dim.resize(slot + 1);
        by_dim[slot].push_back(face);
    }
    return by_dim;
}

}  // namespace

std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                 const Field& field) {
    if (complex.is_void()) return {};
    const auto faces = faces_by_dimension(complex);  // faces[k]: dimension k-1
    const int levels = static_cast<int>(faces.size());

    // boundary_rank[k] is the rank of the map from faces[k] to faces[k-1]
    std::vector<int> boundary_rank(static_cast<std::size_t>(levels) + 1, 0);
    for (int k = 1; k < levels; ++k) {
        std::map<std::vector<int>, std::size_t> row_index;
        for (std::size_t i = 0; i < faces[static_cast<std::size_t>(k - 1)].size(); ++i)
            row_index[faces[static_cast<std::size_t>(k - 1)][i]] = i;
        std::vector<std::vector<BInt>> m(
            faces[static_cast<std::size_t>(k - 1)].size(),
            std::vector<BInt>(faces[static_cast<std::size_t>(k)].size(), 0));
        for (std::size_t c = 0; c < faces[static_cast<std::size_t>(k)].size(); ++c) {
            const auto& face = faces[static_cast<std::size_t>(k)][c];
            int sign = 1;
            for (std::size_t omit = 0; omit < face.size(); ++omit) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < face.size(); ++i)
                    if (i != omit) sub.push_back(face[i]);
                m[row_index.at(sub)][c] = sign;
                sign = -sign;
            }
        }
        boundary_rank[static_cast<std::size_t>(k)] = matrix_rank(std::move(m), field);
    }

    std::vector<std::int64_t> ranks(static_cast<std::size_t>(levels), 0);
    for (int k = 0; k < levels; ++k) {
        const std::int64_t chain_dim = static_cast<std::int64_t>(faces[static_cast<std::size_t>(k)].size());
        ranks[static_cast<std::size_t>(k)] = chain_dim - boundary_rank[static_cast<std::size_t>(k)] -
                                             boundary_rank[static_cast<std::size_t>(k + 1)];
        check_invariant(ranks[static_cast<std::size_t>(k)] >= 0, "negative homology rank");
    }

    // Reduced Euler characteristic consistency.
    std::int64_t euler_faces = 0, euler_ranks = 0;
    for (int k = 0; k < levels; ++k) {
        const std::int64_t sign = (k % 2 == 0) ? 1 : -1;  // dimension k-1
        euler_faces += sign * static_cast<std::int64_t>(faces[static_cast<std::size_t>(k)].size());
        euler_ranks += sign * ranks[static_cast<std::size_t>(k)];
    }
    check_invariant(euler_faces == euler_ranks, "Euler characteristic mismatch in homology");
    return ranks;
}

namespace {

struct InducedKey {
    std::vector<std::vector<int>> relabeled_facets;
    auto operator<=>(const InducedKey&) const = default;
};

// Projective dimension of R/J read from induced-subcomplex homology, scanning
// sigma over the union-closure of the generator supports (Betti numbers of a
// monomial ideal live on the lcm lattice).
int projective_dimension(const SimplicialComplex& delta, const std::vector<std::vector<int>>& gen_supports,
                         int n, const Field& field) {
    require(n <= 63, "ambient dimension exceeds the scan limit");
    std::set<std::uint64_t> sigmas;
    sigmas.insert(0);
    std::vector<std::uint64_t> gen_masks;
    for (const auto& s : gen_supports) {
        std::uint64_t m = 0;
        for (int v : s) m |= std::uint64_t{1} << v;
        gen_masks.push_back(m);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> current(sigmas.begin(), sigmas.end());
        for (std::uint64_t s : current)
            for (std::uint64_t g : gen_masks)
                if (sigmas.insert(s | g).second) grew = true;
    }

    std::map<InducedKey, std::vector<std::int64_t>> cache;
    int pd = 0;
    for (std::uint64_t sigma_mask : sigmas) {
        std::vector<int> sigma;
        for (int i = 0; i < n; ++i)
            if (sigma_mask & (std::uint64_t{1} << i)) sigma.push_back(i);
        const SimplicialComplex induced = delta.induced(sigma);

        // Relabel to 0..|sigma|-1 so structurally equal subcomplexes share ranks.
        std::map<int, int> relabel;
        for (std::size_t i = 0; i < sigma.size(); ++i) relabel[sigma[i]] = static_cast<int>(i);
        InducedKey key;
        for (const auto& f : induced.facets()) {
            std::vector<int> rf;
            for (int v : f) rf.push_back(relabel.at(v));
            key.relabeled_facets.push_back(std::move(rf));
        }
        std::sort(key.relabeled_facets.begin(), key.relabeled_facets.end());

        auto it = cache.find(key);
        if (it == cache.end()) {
            SimplicialComplex relabeled(static_cast<int>(sigma.size()), key.relabeled_facets);
            it = cache.emplace(key, reduced_homology_ranks(relabeled, field)).first;
        }
        const auto& ranks = it->second;
        for (std::size_t k = 0; k < ranks.size(); ++k) {
            if (ranks[k] == 0) continue;
            const int d = static_cast<int>(k) - 1;  // homology dimension
            const int i = static_cast<int>(sigma.size()) - 1 - d;
            pd = std::max(pd, i);
        }
    }
    return pd;
}

}  // namespace

int depth_square_free(const MonomialIdeal& j, const Field& field) {
    require(j.is_square_free(), "square-free ideal required");
    require(!j.is_zero() && j.is_proper(), "proper nonzero ideal required");
    std::vector<std::vector<int>> supports;
    for (const auto& g : j.generators()) supports.push_back(g.support());
    const int depth = j.ambient() - projective_dimension(stanley_reisner(j), supports, j.ambient(), field);
    check_invariant(depth >= 0 && depth <= j.ambient() - 1, "depth outside [0, n-1]");
    return depth;
}

int depth_square_free(const RadicalIdeal& r, const Field& field) {
    return depth_square_free(r.to_monomial_ideal(), field);
}

int depth_square_free_full_scan(const MonomialIdeal& j, const Field& field) {
    require(j.is_square_free(), "square-free ideal required");
    require(!j.is_zero() && j.is_proper(), "proper nonzero ideal required");
    const int n = j.ambient();
    require(n <= 20, "full scan is for small oracles only");
    const SimplicialComplex delta = stanley_reisner(j);
    int pd = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> sigma;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) sigma.push_back(i);
        const auto ranks = reduced_homology_ranks(delta.induced(sigma), field);
        for (std::size_t k = 0; k < ranks.size(); ++k)
            if (ranks[k] != 0)
                pd = std::max(pd, static_cast<int>(sigma.size()) - 1 - (static_cast<int>(k) - 1));
    }
    return n - pd;
}

namespace {

DepthReport report_from_asr(const AsrSet& asr_set, const Field& field) {
    DepthReport report;
    bool first = true;
    for (const auto& [radical, witness] : asr_set.members) {
        const int d = depth_square_free(radical, field);
        report.per_radical.emplace(radical, d);
        if (first || d < report.depth) {
            report.depth = d;
            report.argmin = radical;
            first = false;
        }
    }
    check_invariant(!first, "asr set was empty");
    return report;
}

}  // namespace

DepthReport depth_via_hochster(const MonomialIdeal& ideal, const Field& field) {
    return report_from_asr(asr_brute_force(ideal), field);
}

DepthReport depth_via_hochster(const Decomposition& d, std::int64_t s, const Field& field) {
    return report_from_asr(asr_symbolic_decomposition(d, s), field);
}

}  // namespace asr
