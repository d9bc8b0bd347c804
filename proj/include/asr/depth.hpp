#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "asr/decomposition.hpp"
#include "asr/monomial.hpp"

namespace asr {

/// Coefficient field for homology: the rationals or a prime field.
struct Field {
    bool is_rational = true;
    std::int64_t p = 0;

    static Field rationals() { return Field{true, 0}; }
    static Field prime(std::int64_t p);
    /// "q" or "p:<prime>".
    static Field parse(const std::string& text);
};

/// A simplicial complex on {0..n-1}, held by its facet antichain. The faces
/// are all subsets of the facets; the complex containing only the empty face
/// is represented by a single empty facet.
class SimplicialComplex {
  public:
    SimplicialComplex(int n, std::vector<std::vector<int>> facets);

    int ambient() const { return n_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    int dimension() const;  // -1 for {empty face}; meaningless when void

    /// Faces of the induced subcomplex on sigma, as a new complex.
    SimplicialComplex induced(const std::vector<int>& sigma) const;

  private:
    int n_;
    std::vector<std::vector<int>> facets_;
};

/// Faces are the sigma whose squarefree monomial lies outside J.
SimplicialComplex stanley_reisner(const MonomialIdeal& j);

/// Stanley-Reisner complex of an intersection of primes: the facets are the
/// maximal complements of the prime supports.
SimplicialComplex stanley_reisner(const RadicalIdeal& r);

/// Reduced homology ranks by dimension, ranks[d + 1] = rank of H~_d, for
/// d = -1 .. dim. Verifies the reduced Euler characteristic identity.
std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                 const Field& field);

/// depth R/J for a proper nonzero square-free monomial ideal, through the
/// projective dimension read off induced-subcomplex homology.
int depth_square_free(const MonomialIdeal& j, const Field& field);
int depth_square_free(const RadicalIdeal& r, const Field& field);

struct DepthReport {
    std::map<RadicalIdeal, int> per_radical;
    int depth = 0;
    RadicalIdeal argmin;
};

/// depth R/I as the minimum of depth R/J over the associated radicals J of I.
DepthReport depth_via_hochster(const MonomialIdeal& ideal, const Field& field);

/// Same, for the symbolic power of a user-supplied decomposition.
DepthReport depth_via_hochster(const Decomposition& d, std::int64_t s, const Field& field);

/// Exhaustive variant scanning all vertex subsets; the independent oracle for
/// depth_square_free, which scans only the union-closure of the generator
/// supports.
int depth_square_free_full_scan(const MonomialIdeal& j, const Field& field);

}  // namespace asr
