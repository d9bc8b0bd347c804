#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asr/decomposition.hpp"
#include "asr/monomial.hpp"

namespace asr {

/// The set of associated radical ideals of some ideal, in canonical form,
/// with one witness exponent per member (the first found in lexicographic
/// scan order).
struct AsrSet {
    int n = 0;
    std::map<RadicalIdeal, Monomial> members;

    bool contains(const RadicalIdeal& r) const { return members.find(r) != members.end(); }
    std::size_t size() const { return members.size(); }
    std::vector<RadicalIdeal> radicals() const;
    std::vector<struct AsrWitness> witnesses() const;

    bool same_members(const AsrSet& other) const;
    bool subset_of(const AsrSet& other) const;
};

struct AsrWitness {
    RadicalIdeal radical;
    Monomial exponent;
};

enum class SetRelation { equal, proper_subset, proper_superset, incomparable };

std::string to_string(SetRelation r);

struct AsrComparison {
    SetRelation relation;
    std::vector<RadicalIdeal> only_in_a;
    std::vector<RadicalIdeal> only_in_b;
};

enum class PowerKind { ordinary, symbolic };
enum class AsrMethod { bruteforce, polyhedral };

PowerKind parse_power_kind(const std::string& s);
AsrMethod parse_asr_method(const std::string& s);
std::string to_string(PowerKind k);
std::string to_string(AsrMethod m);

/// Number of worker threads: explicit value, else the ASRTOOL_JOBS
/// environment variable, else 1.
int resolve_jobs(int requested);

/// asr(I) by exhaustive scan of the generator-exponent box; the colon ideal
/// depends only on min(alpha, max-exponents), so the box is exhaustive.
AsrSet asr_brute_force(const MonomialIdeal& ideal, int jobs = 1);

/// asr(I^{(s)}) for a square-free ideal given by its minimal primes, by the
/// row-sum rule over the box [0, s]^n (capping any coordinate at s preserves
/// both constraint directions).
AsrSet asr_symbolic_polyhedral(const RadicalIdeal& primes, std::int64_t s, int jobs = 1);

/// asr(I^{(s)}) for a user-supplied decomposition, scanning the box of the
/// component powers; colons of primary components are primary, so the
/// radical at alpha is the intersection of the minimal primes whose
/// component power misses x^alpha.
AsrSet asr_symbolic_decomposition(const Decomposition& d, std::int64_t s, int jobs = 1);

AsrSet asr_of_power(const MonomialIdeal& ideal, std::int64_t s, PowerKind kind, AsrMethod method,
                    int jobs = 1);
AsrSet asr_of_power(const Decomposition& d, std::int64_t s, PowerKind kind, AsrMethod method,
                    int jobs = 1);

AsrComparison compare_asr(const AsrSet& a, const AsrSet& b);

/// Witness checks: recomputing the associated radical at the witness must
/// reproduce the member.
bool validate_witness_ideal(const MonomialIdeal& ideal, const RadicalIdeal& radical,
                            const Monomial& witness);
bool validate_witness_row_sums(const RadicalIdeal& primes, std::int64_t s,
                               const RadicalIdeal& radical, const Monomial& witness);

struct LocalizationReport {
    bool holds = false;
    AsrSet left;   // asr(I)
    AsrSet right;  // union of the localized pieces and the full-support members
};

/// Verifies asr(I) = union_i asr(I[i]) u { J in asr(I) : supp(J) = [n] }.
LocalizationReport localization_check(const MonomialIdeal& ideal, int jobs = 1);

struct MonotonicityRow {
    std::int64_t s;
    AsrSet set;
    std::optional<SetRelation> versus_previous;
};

std::vector<MonotonicityRow> scan_monotonicity(const MonomialIdeal& ideal, PowerKind kind,
                                               std::int64_t s_max, AsrMethod method,
                                               int jobs = 1);

struct StabilityReport {
    bool stable = false;
    std::int64_t first_differing = -1;  // -1 when stable over the window
    bool early_inclusions_hold = false;
    std::vector<std::pair<std::int64_t, SetRelation>> early_checks;
};

/// Checks asr(I^{(s)}) = asr(I^{(s0)}) for s in [s0, s0+window] and
/// asr(I^{(t)}) subseteq asr(I^{(s0)}) for the sampled t < s0.
StabilityReport scan_stability(const RadicalIdeal& primes, std::int64_t s0, std::int64_t window,
                               const std::vector<std::int64_t>& t_samples, int jobs = 1);

}  // namespace asr
