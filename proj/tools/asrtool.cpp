// Command-line front end: asr sets, depth tables, monotonicity/stability
// scans, balancedness checks, polytope dumps, verification bundles.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "asr/depth.hpp"
#include "asr/engine.hpp"
#include "asr/errors.hpp"
#include "asr/io.hpp"
#include "asr/polyhedra.hpp"
#include "asr/verify.hpp"

namespace {

using namespace asr;

struct InputFlags {
    std::string ideal_path;
    std::string hypergraph_path;
    std::string decomposition_path;
    std::string format = "auto";
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
    auto* a = cmd->add_option("--ideal", flags.ideal_path, "ideal file (JSON with n, gens)");
    auto* b = cmd->add_option("--hypergraph", flags.hypergraph_path,
                              "hypergraph file (JSON with n, edges)");
    auto* c = cmd->add_option("--decomposition", flags.decomposition_path,
                              "decomposition file (JSON with n, components)");
    cmd->add_option("--format", flags.format, "override input auto-detection");
    a->excludes(b)->excludes(c);
    b->excludes(c);
}

InputObject load_flags(const InputFlags& flags) {
    const InputFormat fmt = parse_input_format(flags.format);
    if (!flags.ideal_path.empty())
        return load_input_file(flags.ideal_path,
                               fmt == InputFormat::automatic ? InputFormat::ideal : fmt);
    if (!flags.hypergraph_path.empty())
        return load_input_file(flags.hypergraph_path,
                               fmt == InputFormat::automatic ? InputFormat::hypergraph : fmt);
    if (!flags.decomposition_path.empty())
        return load_input_file(flags.decomposition_path,
                               fmt == InputFormat::automatic ? InputFormat::decomposition : fmt);
    throw PreconditionError("an input file is required (--ideal, --hypergraph or --decomposition)");
}

MonomialIdeal as_ideal(const InputObject& input) {
    if (const auto* ideal = std::get_if<MonomialIdeal>(&input)) return *ideal;
    if (const auto* h = std::get_if<Hypergraph>(&input)) return cover_ideal(*h);
    return std::get<Decomposition>(input).full_intersection();
}

struct PowerRange {
    std::int64_t lo = 1, hi = 1;
};

PowerRange parse_power_range(const std::string& text) {
    PowerRange range;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            range.lo = range.hi = std::stoll(text);
        } else {
            range.lo = std::stoll(text.substr(0, dots));
            range.hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw ParseError("malformed power range: " + text);
    }
    require(range.lo >= 1 && range.lo <= range.hi, "power range must be non-empty and positive");
    return range;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot open output file: " + path);
    out << content;
}

DepthReport depth_of_members(const AsrSet& set, const Field& field) {
    DepthReport report;
    bool first = true;
    for (const auto& [radical, witness] : set.members) {
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

AsrSet asr_at_power(const InputObject& input, std::int64_t s, PowerKind kind, AsrMethod method,
                    int jobs) {
    if (const auto* d = std::get_if<Decomposition>(&input))
        return asr_of_power(*d, s, kind, method, jobs);
    return asr_of_power(as_ideal(input), s, kind, method, jobs);
}

int cmd_asr(const InputFlags& flags, int jobs, const std::string& out_path) {
    const AsrSet set = asr_brute_force(as_ideal(load_flags(flags)), jobs);
    std::ostringstream os;
    os << "n=" << set.n << " members=" << set.size() << "\n";
    for (const auto& [radical, witness] : set.members)
        os << to_text(radical) << " witness=" << to_text(witness) << "\n";
    write_output(out_path, os.str());
    return 0;
}

int cmd_depth_table(const InputFlags& flags, const std::string& kind_text,
                    const std::string& method_text, const std::string& power_text,
                    const std::string& field_text, int jobs, const std::string& out_path) {
    const InputObject input = load_flags(flags);
    const PowerKind kind = parse_power_kind(kind_text);
    const AsrMethod method = parse_asr_method(method_text);
    const PowerRange range = parse_power_range(power_text);
    const Field field = Field::parse(field_text);

    std::ostringstream os;
    os << "s,kind,depth,argmin_radical\n";
    for (std::int64_t s = range.lo; s <= range.hi; ++s) {
        const AsrSet set = asr_at_power(input, s, kind, method, jobs);
        const DepthReport report = depth_of_members(set, field);
        os << s << "," << to_string(kind) << "," << report.depth << ","
           << csv_quote(to_text(report.argmin)) << "\n";
    }
    write_output(out_path, os.str());
    return 0;
}

int cmd_scan(const InputFlags& flags, const std::string& kind_text, const std::string& method_text,
             const std::string& power_text, bool stability, const std::string& s0_text,
             std::int64_t window, const std::string& field_text, int jobs,
             const std::string& out_path) {
    const InputObject input = load_flags(flags);
    if (stability) {
        const MonomialIdeal ideal = as_ideal(input);
        require(ideal.is_square_free(), "stability scans need a square-free ideal");
        const RadicalIdeal primes = square_free_decompose(ideal);
        std::int64_t s0 = 0;
        if (s0_text == "auto") {
            int bht = 0;
            for (const auto& p : primes.primes()) bht = std::max(bht, p.size());
            s0 = ceil_to_int64(Rational(s0_bound(ideal.ambient(), bht)));
        } else {
            try {
                s0 = std::stoll(s0_text);
            } catch (const std::exception&) {
                throw ParseError("malformed --s0 value: " + s0_text);
            }
            require(s0 >= 1, "--s0 must be positive");
        }
        const StabilityReport report = scan_stability(primes, s0, window, {1, 2, 3, 5, 8}, jobs);
        std::ostringstream os;
        os << "s0=" << s0 << " window=" << window << " stable="
           << (report.stable ? "yes" : "no");
        if (!report.stable) os << " first_differing=" << report.first_differing;
        os << "\n";
        for (const auto& [t, rel] : report.early_checks)
            os << "t=" << t << " vs s0: " << to_string(rel) << "\n";
        os << "early_inclusions=" << (report.early_inclusions_hold ? "yes" : "no") << "\n";
        if (report.stable) {
            const Field field = Field::parse(field_text);
            const DepthReport depth_report =
                depth_of_members(asr_symbolic_polyhedral(primes, s0, jobs), field);
            os << "depth_at_s0=" << depth_report.depth << "\n";
            os << "inferred_symbolic_analytic_spread=" << ideal.ambient() - depth_report.depth
               << " (dim R minus the stabilized depth; inferred, not computed from a Rees algebra)\n";
        }
        write_output(out_path, os.str());
        return 0;
    }

    const PowerKind kind = parse_power_kind(kind_text);
    const AsrMethod method = parse_asr_method(method_text);
    const PowerRange range = parse_power_range(power_text);
    const Field field = Field::parse(field_text);

    std::ostringstream csv, sidecar;
    csv << "s,kind,member_count,depth,comparison_to_previous\n";
    AsrSet previous;
    bool have_previous = false;
    for (std::int64_t s = range.lo; s <= range.hi; ++s) {
        const AsrSet set = asr_at_power(input, s, kind, method, jobs);
        const DepthReport report = depth_of_members(set, field);
        csv << s << "," << to_string(kind) << "," << set.size() << "," << report.depth << ",";
        if (have_previous) csv << to_string(compare_asr(previous, set).relation);
        csv << "\n";
        sidecar << "s=" << s << "\n";
        for (const auto& [radical, witness] : set.members)
            sidecar << "  " << to_text(radical) << " witness=" << to_text(witness) << "\n";
        previous = set;
        have_previous = true;
    }
    if (out_path.empty()) {
        std::cout << csv.str() << sidecar.str();
    } else {
        write_output(out_path, csv.str());
        write_output(out_path + ".radicals.txt", sidecar.str());
    }
    return 0;
}

int cmd_check_balanced(const std::string& path) {
    const InputObject input = load_input_file(path, InputFormat::hypergraph);
    const Hypergraph& h = std::get<Hypergraph>(input);
    const BalanceResult result = is_balanced(h);
    if (result.balanced) {
        std::cout << "BALANCED\n";
        return 0;
    }
    const BadCycle& cycle = *result.witness;
    std::cout << "NOT BALANCED\ncycle length " << cycle.vertices.size() << "\nvertices:";
    for (int v : cycle.vertices) std::cout << " " << (v + 1);
    std::cout << "\nedges:";
    for (int e : cycle.edge_indices) {
        std::cout << " {";
        const auto& edge = h.edges()[static_cast<std::size_t>(e)];
        for (std::size_t i = 0; i < edge.size(); ++i)
            std::cout << (i ? "," : "") << (edge[i] + 1);
        std::cout << "}";
    }
    std::cout << "\n";
    return 0;
}

int cmd_polytope(const InputFlags& flags, const std::string& member_text,
                 const std::string& t_text, const std::string& out_path) {
    const MonomialIdeal ideal = as_ideal(load_flags(flags));
    require(ideal.is_square_free(), "polytope dumps need a square-free ideal");
    const RadicalIdeal primes = square_free_decompose(ideal);
    const RadicalIdeal member = parse_radical_text(member_text, ideal.ambient());
    for (const auto& p : member.primes())
        require(std::find(primes.primes().begin(), primes.primes().end(), p) !=
                    primes.primes().end(),
                "member prime " + to_text(p) + " is not a minimal prime of the ideal");
    Rational t;
    try {
        t = Rational(std::stoll(t_text));
    } catch (const std::exception&) {
        throw ParseError("malformed --t value: " + t_text);
    }
    std::vector<PrimeSupport> ge;
    std::set_difference(primes.primes().begin(), primes.primes().end(), member.primes().begin(),
                        member.primes().end(), std::back_inserter(ge));
    const HalfspaceSystem system = build_system(ideal.ambient(), member.primes(), ge, t);

    std::ostringstream os;
    os << format_json_system_dump(system.le, system.ge, t_text, system.n) << "\n";
    for (const auto& v : enumerate_vertices(system)) {
        os << "vertex det=" << v.det << " coords=";
        for (std::size_t i = 0; i < v.coords.size(); ++i)
            os << (i ? "," : "") << v.coords[i];
        os << "\n";
    }
    write_output(out_path, os.str());
    return 0;
}

int cmd_verify(const std::string& bundle) {
    std::vector<CheckResult> results;
    if (bundle == "example1") results.push_back(verify_example1());
    else if (bundle == "t1") results.push_back(verify_t1_depth_pattern());
    else if (bundle == "t3-bipartite") results.push_back(verify_balanced_monotonicity());
    else if (bundle == "oracle") results.push_back(verify_oracle_equivalence());
    else if (bundle == "all") results = run_all_checks();
    else throw ParseError("unknown bundle: " + bundle +
                          " (expected example1, t1, t3-bipartite, oracle or all)");
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " — " << r.detail << "\n";
        all_pass = all_pass && r.passed;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with associated radicals of monomial ideal powers"};
    app.require_subcommand(1);

    InputFlags flags;
    std::string kind = "ordinary", method = "bruteforce", power = "1", field = "q";
    std::string out_path, s0_text = "auto", member_text, t_text = "1", bundle;
    std::int64_t window = 5;
    int jobs = -1;
    bool stability = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker thread count (default ASRTOOL_JOBS or 1)");
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };

    auto* asr_cmd = app.add_subcommand("asr", "associated radical ideals of the input ideal");
    add_input_flags(asr_cmd, flags);
    add_common(asr_cmd);

    auto* depth_cmd = app.add_subcommand("depth-table", "depth of R/I^s over a power range");
    add_input_flags(depth_cmd, flags);
    add_common(depth_cmd);
    depth_cmd->add_option("--kind", kind, "ordinary | symbolic");
    depth_cmd->add_option("--method", method, "bruteforce | polyhedral");
    depth_cmd->add_option("--power", power, "power range A..B");
    depth_cmd->add_option("--field", field, "q | p:<prime>");

    auto* scan_cmd = app.add_subcommand("scan", "monotonicity or stability scan");
    add_input_flags(scan_cmd, flags);
    add_common(scan_cmd);
    scan_cmd->add_option("--kind", kind, "ordinary | symbolic");
    scan_cmd->add_option("--method", method, "bruteforce | polyhedral");
    scan_cmd->add_option("--power", power, "power range A..B for monotonicity");
    scan_cmd->add_flag("--stability", stability, "run a stability scan instead");
    scan_cmd->add_option("--s0", s0_text, "stability base power, or auto");
    scan_cmd->add_option("--window", window, "stability window length");
    scan_cmd->add_option("--field", field, "q | p:<prime>");

    std::string balanced_path;
    auto* bal_cmd = app.add_subcommand("check-balanced", "balancedness verdict with certificate");
    bal_cmd->add_option("--hypergraph", balanced_path, "hypergraph file")->required();

    auto* poly_cmd = app.add_subcommand("polytope", "dump a member's constraint system and vertices");
    add_input_flags(poly_cmd, flags);
    add_common(poly_cmd);
    poly_cmd->add_option("--member", member_text, "radical ideal text, e.g. (x1,x2)∩(x2,x3)")
        ->required();
    poly_cmd->add_option("--t", t_text, "right-hand side (default 1)");

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification bundle");
    verify_cmd->add_option("bundle", bundle, "example1 | t1 | t3-bipartite | oracle | all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (asr_cmd->parsed()) return cmd_asr(flags, jobs, out_path);
        if (depth_cmd->parsed())
            return cmd_depth_table(flags, kind, method, power, field, jobs, out_path);
        if (scan_cmd->parsed())
            return cmd_scan(flags, kind, method, power, stability, s0_text, window, field, jobs,
                            out_path);
        if (bal_cmd->parsed()) return cmd_check_balanced(balanced_path);
        if (poly_cmd->parsed()) return cmd_polytope(flags, member_text, t_text, out_path);
        if (verify_cmd->parsed()) return cmd_verify(bundle);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
