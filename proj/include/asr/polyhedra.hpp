#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "asr/decomposition.hpp"

namespace asr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::int64_t ceil_to_int64(const Rational& r);
Rational ceil_rational(const Rational& r);

/// The closed constraint system
///   sum_{i in F} x_i <= t  (le rows),  sum_{i in F} x_i >= t  (ge rows),
///   x_i >= 0,
/// with a positive rational right-hand side t.
struct HalfspaceSystem {
    int n = 0;
    std::vector<PrimeSupport> le;
    std::vector<PrimeSupport> ge;
    Rational t = 1;
};

HalfspaceSystem build_system(int n, std::vector<PrimeSupport> le_supports,
                             std::vector<PrimeSupport> ge_supports, Rational t);

/// A vertex of the system: exact rational coordinates delta_i / det obtained
/// by Cramer's rule from a nonsingular choice of n tight constraints.
/// The numerators are integral whenever the right-hand side is.
struct PolyVertex {
    std::vector<Rational> coords;
    BigInt det;                      // |determinant| of the tight 0/1 system
    std::vector<Rational> numerators;  // coords[i] * det, exactly
    std::vector<int> tight_rows;     // indices: le rows, then ge rows, then x_i = 0 rows

    bool is_integral() const;
};

/// True when the union of the le supports covers every coordinate; for a
/// feasible system this is exactly boundedness.
bool covers_all_coordinates(const HalfspaceSystem& s);

/// All vertices (basic feasible solutions), deduplicated by coordinates and
/// sorted lexicographically. Every returned vertex is re-checked against the
/// full system in exact arithmetic. Works for unbounded systems too; callers
/// that need a polytope should test covers_all_coordinates first.
std::vector<PolyVertex> enumerate_vertices(const HalfspaceSystem& s);

/// dim = n test for the bounded case: the barycenter of all vertices
/// satisfies every constraint strictly iff no constraint is tight on the
/// whole polytope. Throws "unbounded" when the coverage hypothesis fails.
bool is_full_dimensional(const HalfspaceSystem& s);

/// lambda_i = ceil(alpha_i) - alpha_i; alpha + lambda is integral with
/// 0 <= lambda_i < 1, so sum_{i in F} lambda_i < |F| for every non-empty F.
std::vector<Rational> lambda_round(const std::vector<Rational>& alpha);

/// ceil(n * bight^{(n+2)/2}) in exact integer arithmetic (integer square
/// root resolves the odd-exponent case).
BigInt s0_bound(int n, int bight);

/// Adds the lexicographically first integral vertex of the C_1 system to the
/// integral point alpha of the Lambda_s system with the same rows, producing
/// beta with le-sums <= s and ge-sums >= s+1.
std::vector<std::int64_t> witness_lift(const std::vector<std::int64_t>& alpha,
                                       const HalfspaceSystem& c1, std::int64_t s);

/// The barycenter construction on the facet supported by the given ge row of
/// the C_1 system: picks the lexicographically smallest n affinely
/// independent vertices on the facet, scales the barycenter by s and rounds
/// up coordinatewise. Requires s >= s0_bound(n, bight of the system).
std::vector<std::int64_t> barycentric_witness(const HalfspaceSystem& c1, int ge_row_index,
                                              std::int64_t s);

/// Exact affine rank of a family of rational points.
int affine_rank(const std::vector<std::vector<Rational>>& points);

}  // namespace asr
