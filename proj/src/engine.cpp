#include "asr/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <unordered_map>

namespace asr {

namespace {

constexpr std::int64_t kScanBudget = 100'000'000;  // lattice points per scan
constexpr int kMaskBits = 63;

struct BoxShape {
    std::vector<std::int64_t> radix;  // per-variable cap + 1
    std::int64_t total;               // product of radices
};

BoxShape make_box(const std::vector<std::int64_t>& caps, const std::string& what) {
    BoxShape box;
    box.total = 1;
    for (std::int64_t c : caps) {
        const std::int64_t r = c + 1;  // box.total stays <= budget, so no overflow here
        box.radix.push_back(r);
        if (r > kScanBudget || box.total * r > kScanBudget)
            throw BudgetError(what + ": lattice scan exceeds the 1e8-point budget");
        box.total *= r;
    }
    return box;
}

// Decodes a linear index into the exponent vector; the last coordinate is the
// fastest, so ascending indices traverse the box in lexicographic order.
void decode(const BoxShape& box, std::int64_t index, std::vector<std::int64_t>& alpha) {
    for (std::size_t i = box.radix.size(); i-- > 0;) {
        alpha[i] = index % box.radix[i];
        index /= box.radix[i];
    }
}

void run_chunks(std::int64_t total, int jobs, const std::function<void(int, std::int64_t, std::int64_t)>& body) {
    if (jobs <= 1 || total < 4096) {
        body(0, 0, total);
        return;
    }
    const std::int64_t chunk = (total + jobs - 1) / jobs;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) {
        const std::int64_t begin = j * chunk;
        const std::int64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&body, &errors, j, begin, end] {
            try {
                body(j, begin, end);
            } catch (...) {
                errors[static_cast<std::size_t>(j)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Chunk results merged in ascending chunk order keep the lexicographically
// first witness per member.
AsrSet merge_chunks(int n, std::vector<std::map<RadicalIdeal, Monomial>>& chunks) {
    AsrSet out;
    out.n = n;
    for (auto& chunk : chunks)
        for (auto& [radical, witness] : chunk) out.members.try_emplace(radical, witness);
    return out;
}

std::vector<int> mask_to_vars(std::uint64_t mask) {
    std::vector<int> vars;
    for (int i = 0; i < kMaskBits; ++i)
        if (mask & (std::uint64_t{1} << i)) vars.push_back(i);
    return vars;
}

struct MaskVectorHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = v.size();
        for (std::uint64_t x : v) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Canonical antichain of masks -> decomposed radical, memoized per chunk.
struct RadicalCache {
    int n;
    std::unordered_map<std::vector<std::uint64_t>, RadicalIdeal, MaskVectorHash> memo;

    const RadicalIdeal& decompose(const std::vector<std::uint64_t>& antichain) {
        auto it = memo.find(antichain);
        if (it != memo.end()) return it->second;
        std::vector<std::vector<int>> supports;
        supports.reserve(antichain.size());
        for (std::uint64_t m : antichain) supports.push_back(mask_to_vars(m));
        RadicalIdeal r(n, minimal_transversals(supports, n));
        return memo.emplace(antichain, std::move(r)).first->second;
    }
};

std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint64_t> kept;
    for (std::uint64_t m : masks) {
        bool dominated = false;
        for (std::uint64_t k : masks)
            if (k != m && (k & m) == k) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(m);
    }
    return kept;
}

}  // namespace

std::vector<RadicalIdeal> AsrSet::radicals() const {
    std::vector<RadicalIdeal> out;
    out.reserve(members.size());
    for (const auto& [r, w] : members) out.push_back(r);
    return out;
}

std::vector<AsrWitness> AsrSet::witnesses() const {
    std::vector<AsrWitness> out;
    out.reserve(members.size());
    for (const auto& [r, w] : members) out.push_back(AsrWitness{r, w});
    return out;
}

bool AsrSet::same_members(const AsrSet& other) const {
    if (members.size() != other.members.size()) return false;
    auto it = other.members.begin();
    for (const auto& [r, w] : members) {
        if (it->first != r) return false;
        ++it;
    }
    return true;
}

bool AsrSet::subset_of(const AsrSet& other) const {
    for (const auto& [r, w] : members)
        if (!other.contains(r)) return false;
    return true;
}

std::string to_string(SetRelation r) {
    switch (r) {
        case SetRelation::equal: return "equal";
        case SetRelation::proper_subset: return "subset";
        case SetRelation::proper_superset: return "superset";
        case SetRelation::incomparable: return "incomparable";
    }
    return "?";
}

PowerKind parse_power_kind(const std::string& s) {
    if (s == "ordinary") return PowerKind::ordinary;
    if (s == "symbolic") return PowerKind::symbolic;
    throw ParseError("unknown power kind: " + s);
}

AsrMethod parse_asr_method(const std::string& s) {
    if (s == "bruteforce") return AsrMethod::bruteforce;
    if (s == "polyhedral") return AsrMethod::polyhedral;
    throw ParseError("unknown method: " + s);
}

std::string to_string(PowerKind k) {
    return k == PowerKind::ordinary ? "ordinary" : "symbolic";
}

std::string to_string(AsrMethod m) {
    return m == AsrMethod::bruteforce ? "bruteforce" : "polyhedral";
}

int resolve_jobs(int requested) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("ASRTOOL_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

AsrSet asr_brute_force(const MonomialIdeal& ideal, int jobs) {
    require(!ideal.is_zero(), "improper ideal: asr of the zero ideal is undefined");
    require(ideal.is_proper(), "improper ideal: asr of the unit ideal is undefined");
    const int n = ideal.ambient();
    require(n <= kMaskBits, "ambient dimension exceeds the scan limit");
    jobs = resolve_jobs(jobs);

    const BoxShape box = make_box(ideal.max_exponents(), "asr_brute_force");
    // Generator exponents flattened for the hot loop.
    const std::size_t g_count = ideal.generator_count();
    std::vector<std::int64_t> gen_exponents(g_count * static_cast<std::size_t>(n));
    for (std::size_t g = 0; g < g_count; ++g)
        for (int i = 0; i < n; ++i)
            gen_exponents[g * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
                ideal.generators()[g].exponent(i);

    std::vector<std::map<RadicalIdeal, Monomial>> chunks(static_cast<std::size_t>(jobs));
    run_chunks(box.total, jobs, [&](int chunk_id, std::int64_t begin, std::int64_t end) {
        RadicalCache cache{n, {}};
        std::vector<std::int64_t> alpha(static_cast<std::size_t>(n));
        std::vector<std::uint64_t> masks;
        auto& local = chunks[static_cast<std::size_t>(chunk_id)];
        for (std::int64_t index = begin; index < end; ++index) {
            decode(box, index, alpha);
            masks.clear();
            bool in_ideal = false;
            for (std::size_t g = 0; g < g_count && !in_ideal; ++g) {
                std::uint64_t mask = 0;
                const std::int64_t* ge = &gen_exponents[g * static_cast<std::size_t>(n)];
                for (int i = 0; i < n; ++i)
                    if (ge[i] > alpha[static_cast<std::size_t>(i)]) mask |= std::uint64_t{1} << i;
                if (mask == 0) in_ideal = true;  // some generator divides x^alpha
                else masks.push_back(mask);
            }
            if (in_ideal) continue;
            const RadicalIdeal& radical = cache.decompose(minimal_masks(masks));
            local.try_emplace(radical, Monomial(alpha));
        }
    });
    return merge_chunks(n, chunks);
}

AsrSet asr_symbolic_polyhedral(const RadicalIdeal& primes, std::int64_t s, int jobs) {
    require(primes.is_proper(), "a proper radical ideal is required");
    require(s >= 1, "power must be positive");
    const int n = primes.ambient();
    jobs = resolve_jobs(jobs);
    const std::size_t r = primes.primes().size();
    require(r <= 63, "too many minimal primes for the subset mask");

    const BoxShape box = make_box(std::vector<std::int64_t>(static_cast<std::size_t>(n), s),
                                  "asr_symbolic_polyhedral");
    std::vector<std::map<RadicalIdeal, Monomial>> chunks(static_cast<std::size_t>(jobs));
    run_chunks(box.total, jobs, [&](int chunk_id, std::int64_t begin, std::int64_t end) {
        std::unordered_map<std::uint64_t, RadicalIdeal> memo;
        std::vector<std::int64_t> alpha(static_cast<std::size_t>(n));
        auto& local = chunks[static_cast<std::size_t>(chunk_id)];
        for (std::int64_t index = begin; index < end; ++index) {
            decode(box, index, alpha);
            std::uint64_t selected = 0;
            for (std::size_t j = 0; j < r; ++j) {
                std::int64_t sum = 0;
                for (int i : primes.primes()[j].vars) sum += alpha[static_cast<std::size_t>(i)];
                if (sum <= s - 1) selected |= std::uint64_t{1} << j;
            }
            if (selected == 0) continue;  // x^alpha lies in the symbolic power
            auto it = memo.find(selected);
            if (it == memo.end()) {
                std::vector<PrimeSupport> chosen;
                for (std::size_t j = 0; j < r; ++j)
                    if (selected & (std::uint64_t{1} << j)) chosen.push_back(primes.primes()[j]);
                it = memo.emplace(selected, RadicalIdeal(n, std::move(chosen))).first;
            }
            local.try_emplace(it->second, Monomial(alpha));
        }
    });
    return merge_chunks(n, chunks);
}

AsrSet asr_symbolic_decomposition(const Decomposition& d, std::int64_t s, int jobs) {
    require(s >= 1, "power must be positive");
    const int n = d.ambient();
    jobs = resolve_jobs(jobs);
    const std::vector<const PrimaryComponent*> minimal = d.minimal_components();
    const std::size_t r = minimal.size();
    require(r <= 63, "too many components for the subset mask");

    std::vector<MonomialIdeal> powers;
    powers.reserve(r);
    std::vector<std::int64_t> caps(static_cast<std::size_t>(n), 0);
    for (const PrimaryComponent* c : minimal) {
        powers.push_back(power(c->ideal, s));
        const auto d_max = powers.back().max_exponents();
        for (int i = 0; i < n; ++i)
            caps[static_cast<std::size_t>(i)] =
                std::max(caps[static_cast<std::size_t>(i)], d_max[static_cast<std::size_t>(i)]);
    }

    const BoxShape box = make_box(caps, "asr_symbolic_decomposition");
    std::vector<std::map<RadicalIdeal, Monomial>> chunks(static_cast<std::size_t>(jobs));
    run_chunks(box.total, jobs, [&](int chunk_id, std::int64_t begin, std::int64_t end) {
        std::unordered_map<std::uint64_t, RadicalIdeal> memo;
        std::vector<std::int64_t> alpha(static_cast<std::size_t>(n));
        auto& local = chunks[static_cast<std::size_t>(chunk_id)];
        for (std::int64_t index = begin; index < end; ++index) {
            decode(box, index, alpha);
            std::uint64_t selected = 0;
            for (std::size_t j = 0; j < r; ++j) {
                bool inside = false;
                for (const Monomial& g : powers[j].generators()) {
                    bool div = true;
                    for (int i = 0; i < n && div; ++i)
                        if (g.exponent(i) > alpha[static_cast<std::size_t>(i)]) div = false;
                    if (div) {
                        inside = true;
                        break;
                    }
                }
                if (!inside) selected |= std::uint64_t{1} << j;
            }
            if (selected == 0) continue;
            auto it = memo.find(selected);
            if (it == memo.end()) {
                std::vector<PrimeSupport> chosen;
                for (std::size_t j = 0; j < r; ++j)
                    if (selected & (std::uint64_t{1} << j)) chosen.push_back(minimal[j]->prime_support);
                it = memo.emplace(selected, RadicalIdeal(n, std::move(chosen))).first;
            }
            local.try_emplace(it->second, Monomial(alpha));
        }
    });
    return merge_chunks(n, chunks);
}

AsrSet asr_of_power(const MonomialIdeal& ideal, std::int64_t s, PowerKind kind, AsrMethod method,
                    int jobs) {
    require(s >= 1, "power must be positive");
    if (kind == PowerKind::ordinary) {
        require(method == AsrMethod::bruteforce,
                "the polyhedral method applies to symbolic powers only");
        return asr_brute_force(power(ideal, s), jobs);
    }
    require(ideal.is_square_free(),
            "symbolic powers of a non-square-free ideal need a decomposition input");
    const RadicalIdeal primes = square_free_decompose(ideal);
    if (method == AsrMethod::polyhedral) return asr_symbolic_polyhedral(primes, s, jobs);
    return asr_brute_force(symbolic_power(primes, s), jobs);
}

AsrSet asr_of_power(const Decomposition& d, std::int64_t s, PowerKind kind, AsrMethod method,
                    int jobs) {
    require(s >= 1, "power must be positive");
    if (kind == PowerKind::ordinary) {
        require(method == AsrMethod::bruteforce,
                "the polyhedral method applies to symbolic powers only");
        return asr_brute_force(power(d.full_intersection(), s), jobs);
    }
    require(method == AsrMethod::bruteforce,
            "the polyhedral method requires a square-free ideal");
    return asr_symbolic_decomposition(d, s, jobs);
}

AsrComparison compare_asr(const AsrSet& a, const AsrSet& b) {
    require(a.n == b.n, "mismatched ambient dimension");
    AsrComparison cmp;
    for (const auto& [r, w] : a.members)
        if (!b.contains(r)) cmp.only_in_a.push_back(r);
    for (const auto& [r, w] : b.members)
        if (!a.contains(r)) cmp.only_in_b.push_back(r);
    if (cmp.only_in_a.empty() && cmp.only_in_b.empty()) cmp.relation = SetRelation::equal;
    else if (cmp.only_in_a.empty()) cmp.relation = SetRelation::proper_subset;
    else if (cmp.only_in_b.empty()) cmp.relation = SetRelation::proper_superset;
    else cmp.relation = SetRelation::incomparable;
    return cmp;
}

bool validate_witness_ideal(const MonomialIdeal& ideal, const RadicalIdeal& radical,
                            const Monomial& witness) {
    if (member(witness, ideal)) return false;
    return assoc_radical_ideal(ideal, witness) == radical.to_monomial_ideal();
}

bool validate_witness_row_sums(const RadicalIdeal& primes, std::int64_t s,
                               const RadicalIdeal& radical, const Monomial& witness) {
    std::vector<PrimeSupport> selected;
    for (const auto& p : primes.primes()) {
        std::int64_t sum = 0;
        for (int i : p.vars) sum += witness.exponent(i);
        if (sum <= s - 1) selected.push_back(p);
    }
    if (selected.empty()) return false;
    return RadicalIdeal(primes.ambient(), std::move(selected)) == radical;
}

LocalizationReport localization_check(const MonomialIdeal& ideal, int jobs) {
    LocalizationReport report;
    report.left = asr_brute_force(ideal, jobs);
    const int n = ideal.ambient();
    report.right.n = n;
    for (int i = 0; i < n; ++i) {
        const MonomialIdeal localized = delete_var(ideal, i);
        if (!localized.is_proper()) continue;  // asr of the unit ideal is empty
        for (auto& [r, w] : asr_brute_force(localized, jobs).members)
            report.right.members.try_emplace(r, w);
    }
    for (const auto& [r, w] : report.left.members)
        if (static_cast<int>(r.support().size()) == n) report.right.members.try_emplace(r, w);
    report.holds = report.left.same_members(report.right);
    return report;
}

std::vector<MonotonicityRow> scan_monotonicity(const MonomialIdeal& ideal, PowerKind kind,
                                               std::int64_t s_max, AsrMethod method, int jobs) {
    std::vector<MonotonicityRow> rows;
    for (std::int64_t s = 1; s <= s_max; ++s) {
        MonotonicityRow row{s, asr_of_power(ideal, s, kind, method, jobs), std::nullopt};
        if (!rows.empty()) row.versus_previous = compare_asr(rows.back().set, row.set).relation;
        rows.push_back(std::move(row));
    }
    return rows;
}

StabilityReport scan_stability(const RadicalIdeal& primes, std::int64_t s0, std::int64_t window,
                               const std::vector<std::int64_t>& t_samples, int jobs) {
    require(s0 >= 1 && window >= 0, "invalid stability window");
    StabilityReport report;
    const AsrSet base = asr_symbolic_polyhedral(primes, s0, jobs);
    report.stable = true;
    for (std::int64_t s = s0 + 1; s <= s0 + window; ++s) {
        const AsrSet current = asr_symbolic_polyhedral(primes, s, jobs);
        if (!current.same_members(base)) {
            report.stable = false;
            report.first_differing = s;
            break;
        }
    }
    report.early_inclusions_hold = true;
    for (std::int64_t t : t_samples) {
        if (t >= s0) continue;
        const AsrSet early = asr_symbolic_polyhedral(primes, t, jobs);
        const SetRelation rel = compare_asr(early, base).relation;
        report.early_checks.emplace_back(t, rel);
        if (rel != SetRelation::equal && rel != SetRelation::proper_subset)
            report.early_inclusions_hold = false;
    }
    return report;
}

}  // namespace asr
