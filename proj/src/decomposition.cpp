#include "asr/decomposition.hpp"

#include <algorithm>
#include <set>

namespace asr {

PrimeSupport::PrimeSupport(std::vector<int> v) : vars(std::move(v)) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    require(!vars.empty(), "prime support must be non-empty");
    require(vars.front() >= 0, "variable index out of range");
}

bool PrimeSupport::contains(int i) const {
    return std::binary_search(vars.begin(), vars.end(), i);
}

bool PrimeSupport::subset_of(const PrimeSupport& other) const {
    return std::includes(other.vars.begin(), other.vars.end(), vars.begin(), vars.end());
}

MonomialIdeal PrimeSupport::to_ideal(int n) const {
    std::vector<Monomial> gens;
    gens.reserve(vars.size());
    for (int i : vars) gens.push_back(Monomial::variable(n, i));
    return MonomialIdeal(n, std::move(gens));
}

namespace {

std::vector<PrimeSupport> antichain_minimal(std::vector<PrimeSupport> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<PrimeSupport> kept;
    for (const auto& p : primes) {
        bool dominated = false;
        for (const auto& q : primes)
            if (q != p && q.subset_of(p)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(p);
    }
    return kept;
}

}  // namespace

RadicalIdeal::RadicalIdeal(int n, std::vector<PrimeSupport> primes) : n_(n) {
    for (const auto& p : primes)
        require(p.vars.empty() || p.vars.back() < n, "prime support exceeds ambient");
    primes_ = antichain_minimal(std::move(primes));
}

std::vector<int> RadicalIdeal::support() const {
    std::set<int> s;
    for (const auto& p : primes_) s.insert(p.vars.begin(), p.vars.end());
    return std::vector<int>(s.begin(), s.end());
}

MonomialIdeal RadicalIdeal::to_monomial_ideal() const {
    if (primes_.empty()) return MonomialIdeal::unit(n_);
    MonomialIdeal result = primes_.front().to_ideal(n_);
    for (std::size_t i = 1; i < primes_.size(); ++i)
        result = intersect(result, primes_[i].to_ideal(n_));
    return result;
}

Decomposition::Decomposition(int n, std::vector<PrimaryComponent> components)
    : n_(n), comps_(std::move(components)) {
    require(!comps_.empty(), "decomposition needs at least one component");
    for (const auto& c : comps_) {
        require(c.ideal.ambient() == n_, "component ambient mismatch");
        require(!c.prime_support.vars.empty() && c.prime_support.vars.back() < n_,
                "component support exceeds ambient");
    }
    for (std::size_t i = 0; i < comps_.size(); ++i)
        for (std::size_t j = i + 1; j < comps_.size(); ++j)
            require(comps_[i].prime_support != comps_[j].prime_support,
                    "decomposition has repeated prime supports");
    minimal_.assign(comps_.size(), true);
    for (std::size_t i = 0; i < comps_.size(); ++i)
        for (std::size_t j = 0; j < comps_.size(); ++j)
            if (i != j && comps_[j].prime_support.subset_of(comps_[i].prime_support) &&
                comps_[j].prime_support != comps_[i].prime_support)
                minimal_[i] = false;
}

std::vector<const PrimaryComponent*> Decomposition::minimal_components() const {
    std::vector<const PrimaryComponent*> out;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (minimal_[i]) out.push_back(&comps_[i]);
    return out;
}

MonomialIdeal Decomposition::full_intersection() const {
    MonomialIdeal result = comps_.front().ideal;
    for (std::size_t i = 1; i < comps_.size(); ++i) result = intersect(result, comps_[i].ideal);
    return result;
}

int Decomposition::bight() const {
    int b = 0;
    for (const auto& c : comps_) b = std::max(b, c.prime_support.size());
    return b;
}

namespace {

void transversal_search(const std::vector<std::vector<int>>& sets, std::vector<int>& chosen,
                        std::set<std::vector<int>>& found) {
    const std::vector<int>* uncovered = nullptr;
    for (const auto& s : sets) {
        bool hit = false;
        for (int v : s)
            if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) {
                hit = true;
                break;
            }
        if (!hit) {
            uncovered = &s;
            break;
        }
    }
    if (uncovered == nullptr) {
        std::vector<int> t(chosen);
        std::sort(t.begin(), t.end());
        found.insert(std::move(t));
        return;
    }
    for (int v : *uncovered) {
        chosen.push_back(v);
        transversal_search(sets, chosen, found);
        chosen.pop_back();
    }
}

bool is_transversal(const std::vector<int>& t, const std::vector<std::vector<int>>& sets) {
    for (const auto& s : sets) {
        bool hit = false;
        for (int v : s)
            if (std::binary_search(t.begin(), t.end(), v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

std::vector<PrimeSupport> minimal_transversals(const std::vector<std::vector<int>>& sets, int n) {
    for (const auto& s : sets) require(!s.empty(), "cannot hit an empty set");
    if (sets.empty()) return {};
    (void)n;
    std::vector<int> chosen;
    std::set<std::vector<int>> found;
    transversal_search(sets, chosen, found);
    // The branching can emit supersets of other hits; keep the minimal ones.
    std::vector<PrimeSupport> out;
    for (const auto& t : found) {
        bool minimal = true;
        for (std::size_t k = 0; k < t.size() && minimal; ++k) {
            std::vector<int> without(t);
            without.erase(without.begin() + static_cast<std::ptrdiff_t>(k));
            if (is_transversal(without, sets)) minimal = false;
        }
        if (minimal) out.emplace_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PrimaryComponent check_primary(const MonomialIdeal& q) {
    require(!q.is_zero() && q.is_proper(), "primary check requires a proper nonzero ideal");
    PrimeSupport support{q.support()};
    for (int i : support.vars) {
        bool has_pure_power = false;
        for (const auto& g : q.generators()) {
            if (g.exponent(i) > 0 && g.support().size() == 1) {
                has_pure_power = true;
                break;
            }
        }
        require(has_pure_power, "not primary: no pure power of a support variable");
    }
    return PrimaryComponent{q, support};
}

RadicalIdeal square_free_decompose(const MonomialIdeal& j) {
    require(j.is_square_free(), "square-free ideal required");
    require(!j.is_zero() && j.is_proper(), "proper nonzero ideal required");
    std::vector<std::vector<int>> supports;
    supports.reserve(j.generator_count());
    for (const auto& g : j.generators()) supports.push_back(g.support());
    return RadicalIdeal(j.ambient(), minimal_transversals(supports, j.ambient()));
}

RadicalIdeal assoc_radical(const MonomialIdeal& ideal, const Monomial& f) {
    return square_free_decompose(assoc_radical_ideal(ideal, f));
}

MonomialIdeal symbolic_power(const Decomposition& d, std::int64_t s) {
    require(s >= 1, "symbolic power requires s >= 1");
    MonomialIdeal result;
    bool first = true;
    for (const PrimaryComponent* c : d.minimal_components()) {
        MonomialIdeal piece = power(c->ideal, s);
        result = first ? piece : intersect(result, piece);
        first = false;
    }
    return result;
}

MonomialIdeal symbolic_power(const RadicalIdeal& primes, std::int64_t s) {
    require(s >= 1, "symbolic power requires s >= 1");
    require(primes.is_proper(), "proper radical ideal required");
    MonomialIdeal result;
    bool first = true;
    for (const auto& p : primes.primes()) {
        MonomialIdeal piece = power(p.to_ideal(primes.ambient()), s);
        result = first ? piece : intersect(result, piece);
        first = false;
    }
    return result;
}

namespace {

bool is_monomial_prime(const MonomialIdeal& ideal, std::vector<int>& vars_out) {
    vars_out.clear();
    for (const auto& g : ideal.generators()) {
        if (g.total_degree() != 1) return false;
        vars_out.push_back(g.support().front());
    }
    return !vars_out.empty();
}

}  // namespace

std::vector<PrimeSupport> ass_brute_force(const MonomialIdeal& ideal) {
    require(!ideal.is_zero() && ideal.is_proper(), "ass requires a proper nonzero ideal");
    const int n = ideal.ambient();
    const std::vector<std::int64_t> box = ideal.max_exponents();
    std::set<PrimeSupport> found;
    std::vector<std::int64_t> alpha(static_cast<std::size_t>(n), 0);
    std::vector<int> vars;
    while (true) {
        MonomialIdeal q = colon(ideal, Monomial(alpha));
        if (is_monomial_prime(q, vars)) found.insert(PrimeSupport(vars));
        int i = 0;
        for (; i < n; ++i) {
            if (alpha[static_cast<std::size_t>(i)] < box[static_cast<std::size_t>(i)]) {
                ++alpha[static_cast<std::size_t>(i)];
                break;
            }
            alpha[static_cast<std::size_t>(i)] = 0;
        }
        if (i == n) break;
    }
    return std::vector<PrimeSupport>(found.begin(), found.end());
}

int bight(const MonomialIdeal& ideal) {
    if (ideal.is_square_free()) {
        const RadicalIdeal primes = square_free_decompose(ideal);
        int b = 0;
        for (const auto& p : primes.primes()) b = std::max(b, p.size());
        return b;
    }
    int b = 0;
    for (const auto& p : ass_brute_force(ideal)) b = std::max(b, p.size());
    return b;
}

}  // namespace asr
