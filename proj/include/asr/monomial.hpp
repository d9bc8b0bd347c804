#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "asr/errors.hpp"

namespace asr {

/// A monomial in n variables, stored as its exponent vector.
/// Exponents are machine integers; operations guard against overflow
/// (desk-scale inputs keep exponents far below the guard).
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::int64_t> exponents);
    static Monomial one(int n);
    static Monomial variable(int n, int index);  // x_{index}, 0-based

    int ambient() const { return static_cast<int>(exps_.size()); }
    std::int64_t exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& exponents() const { return exps_; }

    bool is_one() const;
    std::int64_t total_degree() const;
    std::vector<int> support() const;
    bool is_square_free() const;

    Monomial times(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    /// Componentwise max(this - f, 0); the generator map of the colon ideal.
    Monomial quotient_by(const Monomial& f) const;
    Monomial square_free_part() const;
    Monomial pow(std::int64_t k) const;
    /// Exponent of variable i set to zero (the localization image).
    Monomial delete_var(int i) const;

    auto operator<=>(const Monomial&) const = default;

  private:
    std::vector<std::int64_t> exps_;
};

bool divides(const Monomial& a, const Monomial& b);

/// A monomial ideal held by its unique minimal generating set, kept in
/// canonical (minimalized, lexicographically sorted) form. The zero ideal
/// is the empty generator list; the unit ideal is generated by 1.
class MonomialIdeal {
  public:
    MonomialIdeal() : n_(0) {}
    MonomialIdeal(int n, std::vector<Monomial> generators);
    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
    static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }

    int ambient() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_unit(); }
    bool is_square_free() const;
    std::vector<int> support() const;
    /// Per-variable maximum exponent over the generators.
    std::vector<std::int64_t> max_exponents() const;

    auto operator<=>(const MonomialIdeal&) const = default;

  private:
    friend MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

    int n_;
    std::vector<Monomial> gens_;  // canonical minimal generators
};

bool member(const Monomial& f, const MonomialIdeal& ideal);
MonomialIdeal minimalize(int n, std::vector<Monomial> gens);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t s);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);
MonomialIdeal radical(const MonomialIdeal& ideal);
MonomialIdeal delete_var(const MonomialIdeal& ideal, int i);
/// radical(colon(ideal, f)) for f not in the ideal; always a proper ideal.
MonomialIdeal assoc_radical_ideal(const MonomialIdeal& ideal, const Monomial& f);

}  // namespace asr
