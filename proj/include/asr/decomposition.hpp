#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "asr/monomial.hpp"

namespace asr {

/// The support of a monomial prime ideal: a non-empty sorted set of
/// 0-based variable indices.
struct PrimeSupport {
    std::vector<int> vars;

    PrimeSupport() = default;
    explicit PrimeSupport(std::vector<int> v);

    int size() const { return static_cast<int>(vars.size()); }
    bool contains(int i) const;
    bool subset_of(const PrimeSupport& other) const;
    MonomialIdeal to_ideal(int n) const;

    auto operator<=>(const PrimeSupport&) const = default;
};

/// An intersection of monomial primes in canonical form: the inclusion-
/// antichain of their supports, sorted. Equality is set equality.
class RadicalIdeal {
  public:
    RadicalIdeal() : n_(0) {}
    /// Canonicalizes: keeps the inclusion-minimal supports, sorted, deduped.
    RadicalIdeal(int n, std::vector<PrimeSupport> primes);

    int ambient() const { return n_; }
    const std::vector<PrimeSupport>& primes() const { return primes_; }
    bool is_proper() const { return !primes_.empty(); }
    std::vector<int> support() const;
    MonomialIdeal to_monomial_ideal() const;

    auto operator<=>(const RadicalIdeal&) const = default;

  private:
    int n_;
    std::vector<PrimeSupport> primes_;
};

/// A primary monomial ideal together with its certified prime support:
/// every generator is supported inside it and every support variable has a
/// pure power among the generators.
struct PrimaryComponent {
    MonomialIdeal ideal;
    PrimeSupport prime_support;
};

/// A user-supplied primary decomposition; the minimal flags mark the
/// components whose supports are inclusion-minimal.
class Decomposition {
  public:
    Decomposition(int n, std::vector<PrimaryComponent> components);

    int ambient() const { return n_; }
    const std::vector<PrimaryComponent>& components() const { return comps_; }
    const std::vector<bool>& minimal_flags() const { return minimal_; }
    std::vector<const PrimaryComponent*> minimal_components() const;
    /// Intersection of all components (the decomposed ideal itself).
    MonomialIdeal full_intersection() const;
    int bight() const;

  private:
    int n_;
    std::vector<PrimaryComponent> comps_;
    std::vector<bool> minimal_;
};

/// All inclusion-minimal hitting sets of the given family of non-empty sets.
/// Exponential worst case; intended for desk-scale inputs.
std::vector<PrimeSupport> minimal_transversals(const std::vector<std::vector<int>>& sets, int n);

/// Certifies that Q is a primary monomial ideal and returns it with its support.
PrimaryComponent check_primary(const MonomialIdeal& q);

/// Minimal primes of a proper nonzero square-free monomial ideal.
RadicalIdeal square_free_decompose(const MonomialIdeal& j);

/// The associated radical sqrt(ideal : f) in canonical prime form; f must lie
/// outside the ideal.
RadicalIdeal assoc_radical(const MonomialIdeal& ideal, const Monomial& f);

/// Intersection of the s-th powers of the minimal-flagged components.
MonomialIdeal symbolic_power(const Decomposition& d, std::int64_t s);

/// Symbolic power of a square-free ideal given by its minimal primes.
MonomialIdeal symbolic_power(const RadicalIdeal& primes, std::int64_t s);

/// All prime supports F with (x_i : i in F) = I : f for some monomial f,
/// found by exhaustive scan of the generator-exponent box.
std::vector<PrimeSupport> ass_brute_force(const MonomialIdeal& ideal);

/// Max support size over ass (general) or over the minimal primes (square-free).
int bight(const MonomialIdeal& ideal);

}  // namespace asr
