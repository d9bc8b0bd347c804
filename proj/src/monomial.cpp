#include "asr/monomial.hpp"

#include <algorithm>
#include <limits>

namespace asr {

namespace {

// Exponents stay below this; sums of two guarded values cannot overflow.
constexpr std::int64_t kExponentGuard = std::int64_t{1} << 40;

void check_exponent_range(std::int64_t e) {
    require(e >= 0, "monomial exponents must be non-negative");
    require(e < kExponentGuard, "monomial exponent exceeds the overflow guard");
}

}  // namespace

Monomial::Monomial(std::vector<std::int64_t> exponents) : exps_(std::move(exponents)) {
    for (std::int64_t e : exps_) check_exponent_range(e);
}

Monomial Monomial::one(int n) {
    return Monomial(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::variable(int n, int index) {
    require(index >= 0 && index < n, "variable index out of range");
    std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return Monomial(std::move(e));
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

std::int64_t Monomial::total_degree() const {
    std::int64_t d = 0;
    for (std::int64_t e : exps_) d += e;
    return d;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < ambient(); ++i)
        if (exps_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
    return s;
}

bool Monomial::is_square_free() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e <= 1; });
}

Monomial Monomial::times(const Monomial& other) const {
    require(ambient() == other.ambient(), "mismatched ambient dimension");
    std::vector<std::int64_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += other.exps_[i];
        check_exponent_range(e[i]);
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
    require(ambient() == other.ambient(), "mismatched ambient dimension");
    std::vector<std::int64_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::quotient_by(const Monomial& f) const {
    require(ambient() == f.ambient(), "mismatched ambient dimension");
    std::vector<std::int64_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max<std::int64_t>(e[i] - f.exps_[i], 0);
    return Monomial(std::move(e));
}

Monomial Monomial::square_free_part() const {
    std::vector<std::int64_t> e(exps_);
    for (auto& v : e) v = v > 0 ? 1 : 0;
    return Monomial(std::move(e));
}

Monomial Monomial::pow(std::int64_t k) const {
    require(k >= 0, "negative power");
    std::vector<std::int64_t> e(exps_);
    for (auto& v : e) {
        v *= k;
        check_exponent_range(v);
    }
    return Monomial(std::move(e));
}

Monomial Monomial::delete_var(int i) const {
    require(i >= 0 && i < ambient(), "variable index out of range");
    std::vector<std::int64_t> e(exps_);
    e[static_cast<std::size_t>(i)] = 0;
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    require(a.ambient() == b.ambient(), "mismatched ambient dimension");
    for (int i = 0; i < a.ambient(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
    require(n >= 0, "ambient dimension must be non-negative");
    for (const auto& g : generators)
        require(g.ambient() == n, "generator ambient does not match ideal ambient");
    *this = minimalize(n, std::move(generators));
}

bool MonomialIdeal::is_square_free() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_square_free(); });
}

std::vector<int> MonomialIdeal::support() const {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (const auto& g : gens_)
        for (int i : g.support()) seen[static_cast<std::size_t>(i)] = true;
    std::vector<int> s;
    for (int i = 0; i < n_; ++i)
        if (seen[static_cast<std::size_t>(i)]) s.push_back(i);
    return s;
}

std::vector<std::int64_t> MonomialIdeal::max_exponents() const {
    std::vector<std::int64_t> d(static_cast<std::size_t>(n_), 0);
    for (const auto& g : gens_)
        for (int i = 0; i < n_; ++i)
            d[static_cast<std::size_t>(i)] =
                std::max(d[static_cast<std::size_t>(i)], g.exponent(i));
    return d;
}

bool member(const Monomial& f, const MonomialIdeal& ideal) {
    require(f.ambient() == ideal.ambient(), "mismatched ambient dimension");
    for (const auto& g : ideal.generators())
        if (divides(g, f)) return true;
    return false;
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Sorting by total degree lets each generator be tested against smaller ones only.
    std::stable_sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.total_degree() < b.total_degree();
    });
    std::vector<Monomial> kept;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : kept)
            if (divides(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end());
    MonomialIdeal result;
    result.n_ = n;
    result.gens_ = std::move(kept);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require(a.ambient() == b.ambient(), "mismatched ambient dimension");
    std::vector<Monomial> gens;
    gens.reserve(a.generator_count() * b.generator_count());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g.lcm(h));
    return minimalize(a.ambient(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    require(a.ambient() == b.ambient(), "mismatched ambient dimension");
    std::vector<Monomial> gens;
    gens.reserve(a.generator_count() * b.generator_count());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g.times(h));
    return minimalize(a.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t s) {
    require(s >= 0, "negative power");
    if (s == 0) return MonomialIdeal::unit(ideal.ambient());  // empty-product convention
    MonomialIdeal result = ideal;
    for (std::int64_t k = 1; k < s; ++k) result = multiply(result, ideal);
    return result;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
    require(f.ambient() == ideal.ambient(), "mismatched ambient dimension");
    std::vector<Monomial> gens;
    gens.reserve(ideal.generator_count());
    for (const auto& g : ideal.generators()) gens.push_back(g.quotient_by(f));
    return minimalize(ideal.ambient(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generator_count());
    for (const auto& g : ideal.generators()) gens.push_back(g.square_free_part());
    return minimalize(ideal.ambient(), std::move(gens));
}

MonomialIdeal delete_var(const MonomialIdeal& ideal, int i) {
    require(i >= 0 && i < ideal.ambient(), "variable index out of range");
    std::vector<Monomial> gens;
    gens.reserve(ideal.generator_count());
    for (const auto& g : ideal.generators()) gens.push_back(g.delete_var(i));
    return minimalize(ideal.ambient(), std::move(gens));
}

MonomialIdeal assoc_radical_ideal(const MonomialIdeal& ideal, const Monomial& f) {
    require(!member(f, ideal), "assoc_radical requires f not in the ideal");
    return radical(colon(ideal, f));
}

}  // namespace asr
