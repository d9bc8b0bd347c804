#include "asr/polyhedra.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace asr {

namespace {

BigInt floor_div(const BigInt& num, const BigInt& den) {
    // den > 0; cpp_int division truncates toward zero.
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

}  // namespace

Rational ceil_rational(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    BigInt q = floor_div(num, den);
    if (q * den != num) ++q;
    return Rational(q);
}

std::int64_t ceil_to_int64(const Rational& r) {
    BigInt c = numerator(ceil_rational(r));
    require(c >= std::numeric_limits<std::int64_t>::min() &&
                c <= std::numeric_limits<std::int64_t>::max(),
            "value does not fit in 64 bits");
    return static_cast<std::int64_t>(c);
}

HalfspaceSystem build_system(int n, std::vector<PrimeSupport> le_supports,
                             std::vector<PrimeSupport> ge_supports, Rational t) {
    require(n >= 1, "ambient dimension must be positive");
    require(t > 0, "right-hand side must be positive");
    for (const auto& f : le_supports) require(f.vars.back() < n, "support exceeds ambient");
    for (const auto& f : ge_supports) require(f.vars.back() < n, "support exceeds ambient");
    return HalfspaceSystem{n, std::move(le_supports), std::move(ge_supports), std::move(t)};
}

bool PolyVertex::is_integral() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const Rational& c) { return denominator(c) == 1; });
}

bool covers_all_coordinates(const HalfspaceSystem& s) {
    std::vector<bool> covered(static_cast<std::size_t>(s.n), false);
    for (const auto& f : s.le)
        for (int i : f.vars) covered[static_cast<std::size_t>(i)] = true;
    return std::find(covered.begin(), covered.end(), false) == covered.end();
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

// Fraction-free (Bareiss) determinant with row pivoting.
BigInt determinant(Matrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

struct CandidateRow {
    std::vector<BigInt> coeffs;  // 0/1 incidence row of length n
    bool has_rhs;                // true for support rows (rhs t), false for x_i = 0
};

std::vector<CandidateRow> candidate_rows(const HalfspaceSystem& s) {
    std::vector<CandidateRow> rows;
    auto add_support = [&](const PrimeSupport& f) {
        CandidateRow r{std::vector<BigInt>(static_cast<std::size_t>(s.n), 0), true};
        for (int i : f.vars) r.coeffs[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(r));
    };
    for (const auto& f : s.le) add_support(f);
    for (const auto& f : s.ge) add_support(f);
    for (int i = 0; i < s.n; ++i) {
        CandidateRow r{std::vector<BigInt>(static_cast<std::size_t>(s.n), 0), false};
        r.coeffs[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(r));
    }
    return rows;
}

Rational support_sum(const PrimeSupport& f, const std::vector<Rational>& x) {
    Rational sum = 0;
    for (int i : f.vars) sum += x[static_cast<std::size_t>(i)];
    return sum;
}

bool feasible(const HalfspaceSystem& s, const std::vector<Rational>& x) {
    for (const auto& c : x)
        if (c < 0) return false;
    for (const auto& f : s.le)
        if (support_sum(f, x) > s.t) return false;
    for (const auto& f : s.ge)
        if (support_sum(f, x) < s.t) return false;
    return true;
}

}  // namespace

std::vector<PolyVertex> enumerate_vertices(const HalfspaceSystem& s) {
    const int n = s.n;
    const std::vector<CandidateRow> rows = candidate_rows(s);
    const int m = static_cast<int>(rows.size());

    // C(m, n) tight-set candidates; refuse absurd sizes up front.
    {
        double combos = 1.0;
        for (int i = 0; i < n; ++i) combos *= static_cast<double>(m - i) / (i + 1);
        if (combos > 5e6) throw BudgetError("vertex enumeration: too many tight-set candidates");
    }

    std::map<std::vector<Rational>, PolyVertex> found;
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;

    auto process = [&](const std::vector<int>& chosen) {
        Matrix a(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) a[static_cast<std::size_t>(r)] = rows[static_cast<std::size_t>(chosen[static_cast<std::size_t>(r)])].coeffs;
        const BigInt det = determinant(a);
        if (det == 0) return;
        std::vector<Rational> coords(static_cast<std::size_t>(n));
        std::vector<Rational> numerators(static_cast<std::size_t>(n));
        const BigInt abs_det = det < 0 ? BigInt(-det) : det;
        for (int i = 0; i < n; ++i) {
            Matrix ai(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) {
                ai[static_cast<std::size_t>(r)] = rows[static_cast<std::size_t>(chosen[static_cast<std::size_t>(r)])].coeffs;
                ai[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] =
                    rows[static_cast<std::size_t>(chosen[static_cast<std::size_t>(r)])].has_rhs ? 1 : 0;
            }
            const BigInt di = determinant(ai);
            coords[static_cast<std::size_t>(i)] =
                s.t * Rational(det < 0 ? BigInt(-di) : di, abs_det);
            numerators[static_cast<std::size_t>(i)] =
                coords[static_cast<std::size_t>(i)] * Rational(abs_det);
        }
        if (!feasible(s, coords)) return;
        if (found.find(coords) == found.end())
            found.emplace(coords, PolyVertex{coords, abs_det, numerators, chosen});
    };

    // Lexicographic combination walk keeps the kept tight set deterministic.
    while (true) {
        process(idx);
        int i = n - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - n + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }

    std::vector<PolyVertex> out;
    out.reserve(found.size());
    for (auto& [coords, v] : found) {
        check_invariant(feasible(s, v.coords), "enumerated vertex violates its system");
        out.push_back(std::move(v));
    }
    return out;
}

bool is_full_dimensional(const HalfspaceSystem& s) {
    if (!covers_all_coordinates(s)) throw PreconditionError("unbounded");
    const std::vector<PolyVertex> vertices = enumerate_vertices(s);
    if (vertices.empty()) return false;
    std::vector<Rational> bary(static_cast<std::size_t>(s.n), 0);
    for (const auto& v : vertices)
        for (int i = 0; i < s.n; ++i) bary[static_cast<std::size_t>(i)] += v.coords[static_cast<std::size_t>(i)];
    const Rational count = static_cast<int>(vertices.size());
    for (auto& c : bary) c /= count;
    for (const auto& c : bary)
        if (c <= 0) return false;
    for (const auto& f : s.le)
        if (support_sum(f, bary) >= s.t) return false;
    for (const auto& f : s.ge)
        if (support_sum(f, bary) <= s.t) return false;
    return true;
}

std::vector<Rational> lambda_round(const std::vector<Rational>& alpha) {
    std::vector<Rational> lambda;
    lambda.reserve(alpha.size());
    for (const auto& a : alpha) lambda.push_back(ceil_rational(a) - a);
    return lambda;
}

BigInt s0_bound(int n, int bight) {
    require(n >= 1 && bight >= 1, "s0 bound requires n >= 1 and bight >= 1");
    const BigInt b = bight;
    if ((n + 2) % 2 == 0) {
        BigInt result = n;
        for (int e = 0; e < (n + 2) / 2; ++e) result *= b;
        return result;
    }
    // ceil(n * b^{(n+2)/2}) = ceil(sqrt(n^2 * b^{n+2})), resolved exactly.
    BigInt inside = BigInt(n) * n;
    for (int e = 0; e < n + 2; ++e) inside *= b;
    BigInt k = boost::multiprecision::sqrt(inside);
    if (k * k != inside) ++k;
    return k;
}

namespace {

std::int64_t support_sum_int(const PrimeSupport& f, const std::vector<std::int64_t>& x) {
    std::int64_t sum = 0;
    for (int i : f.vars) sum += x[static_cast<std::size_t>(i)];
    return sum;
}

}  // namespace

std::vector<std::int64_t> witness_lift(const std::vector<std::int64_t>& alpha,
                                       const HalfspaceSystem& c1, std::int64_t s) {
    require(c1.t == 1, "witness lift expects the t = 1 system");
    require(static_cast<int>(alpha.size()) == c1.n, "mismatched ambient dimension");
    require(s >= 1, "s must be positive");
    for (const auto& f : c1.le)
        require(support_sum_int(f, alpha) <= s - 1, "alpha violates a le row of Lambda_s");
    for (const auto& f : c1.ge)
        require(support_sum_int(f, alpha) >= s, "alpha violates a ge row of Lambda_s");

    const std::vector<PolyVertex> vertices = enumerate_vertices(c1);
    const PolyVertex* gamma = nullptr;
    for (const auto& v : vertices)
        if (v.is_integral()) {
            gamma = &v;
            break;
        }
    if (gamma == nullptr) throw PreconditionError("no integral vertex");

    std::vector<std::int64_t> beta(alpha);
    for (int i = 0; i < c1.n; ++i)
        beta[static_cast<std::size_t>(i)] += ceil_to_int64(gamma->coords[static_cast<std::size_t>(i)]);
    for (const auto& f : c1.le)
        check_invariant(support_sum_int(f, beta) <= s, "lifted witness violates a le bound");
    for (const auto& f : c1.ge)
        check_invariant(support_sum_int(f, beta) >= s + 1, "lifted witness violates a ge bound");
    return beta;
}

int affine_rank(const std::vector<std::vector<Rational>>& points) {
    if (points.empty()) return 0;
    const std::size_t n = points.front().size();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = points[i][j] - points[0][j];
        rows.push_back(std::move(d));
    }
    // Rational Gaussian elimination.
    int rank = 0;
    std::size_t col = 0;
    while (col < n && rank < static_cast<int>(rows.size())) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) {
            ++col;
            continue;
        }
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || rows[i][col] == 0) continue;
            const Rational factor = rows[i][col] / rows[static_cast<std::size_t>(rank)][col];
            for (std::size_t j = col; j < n; ++j)
                rows[i][j] -= factor * rows[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
        ++col;
    }
    return rank + 1;
}

std::vector<std::int64_t> barycentric_witness(const HalfspaceSystem& c1, int ge_row_index,
                                              std::int64_t s) {
    require(c1.t == 1, "barycentric witness expects the t = 1 system");
    require(ge_row_index >= 0 && ge_row_index < static_cast<int>(c1.ge.size()),
            "ge row index out of range");
    int bht = 0;
    for (const auto& f : c1.le) bht = std::max(bht, f.size());
    for (const auto& f : c1.ge) bht = std::max(bht, f.size());
    require(BigInt(s) >= s0_bound(c1.n, bht), "s is below the stability bound");

    const PrimeSupport& facet_row = c1.ge[static_cast<std::size_t>(ge_row_index)];
    std::vector<PolyVertex> on_facet;
    for (const auto& v : enumerate_vertices(c1))
        if (support_sum(facet_row, v.coords) == c1.t) on_facet.push_back(v);

    // Greedy over the lexicographic vertex order yields the lexicographically
    // smallest affinely independent selection.
    std::vector<std::vector<Rational>> chosen;
    for (const auto& v : on_facet) {
        if (static_cast<int>(chosen.size()) == c1.n) break;
        std::vector<std::vector<Rational>> trial(chosen);
        trial.push_back(v.coords);
        if (affine_rank(trial) == static_cast<int>(trial.size())) chosen = std::move(trial);
    }
    if (static_cast<int>(chosen.size()) < c1.n) throw PreconditionError("no supporting facet");

    std::vector<Rational> u(static_cast<std::size_t>(c1.n), 0);
    for (const auto& p : chosen)
        for (int i = 0; i < c1.n; ++i) u[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)];
    for (auto& c : u) c /= c1.n;

    std::vector<std::int64_t> beta(static_cast<std::size_t>(c1.n));
    for (int i = 0; i < c1.n; ++i) {
        const Rational scaled = Rational(s) * u[static_cast<std::size_t>(i)];
        beta[static_cast<std::size_t>(i)] = ceil_to_int64(scaled);
    }
    for (const auto& f : c1.ge)
        check_invariant(support_sum_int(f, beta) >= s, "barycentric witness violates a ge bound");
    for (const auto& f : c1.le)
        check_invariant(support_sum_int(f, beta) <= s - 1, "barycentric witness violates a le bound");
    return beta;
}

}  // namespace asr
