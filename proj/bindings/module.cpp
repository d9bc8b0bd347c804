// Python bindings for the core operations: monomial-ideal arithmetic,
// decompositions, hypergraphs, asr scans, polyhedral witnesses and depth.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "asr/depth.hpp"
#include "asr/engine.hpp"
#include "asr/hypergraph.hpp"
#include "asr/io.hpp"
#include "asr/polyhedra.hpp"
#include "asr/verify.hpp"

namespace py = pybind11;
using namespace asr;

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

PYBIND11_MODULE(asrtool, m) {
    m.doc() = "exact computations with associated radicals of monomial ideal powers";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<PreconditionError>(m, "PreconditionError");
    py::register_exception<BudgetError>(m, "BudgetError");
    py::register_exception<InvariantError>(m, "InvariantError");

    py::class_<Monomial>(m, "Monomial")
        .def(py::init<std::vector<std::int64_t>>(), py::arg("exponents"))
        .def_static("parse", &parse_monomial, py::arg("text"), py::arg("n"))
        .def_property_readonly("exponents", &Monomial::exponents)
        .def("total_degree", &Monomial::total_degree)
        .def("support", &Monomial::support)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const Monomial& x) { return to_text(x); });

    py::class_<MonomialIdeal>(m, "MonomialIdeal")
        .def(py::init<int, std::vector<Monomial>>(), py::arg("n"), py::arg("generators"))
        .def_static("parse", &parse_ideal_text, py::arg("text"), py::arg("n"))
        .def_static("zero", &MonomialIdeal::zero, py::arg("n"))
        .def_static("unit", &MonomialIdeal::unit, py::arg("n"))
        .def_property_readonly("n", &MonomialIdeal::ambient)
        .def_property_readonly("generators", &MonomialIdeal::generators)
        .def("is_square_free", &MonomialIdeal::is_square_free)
        .def("is_zero", &MonomialIdeal::is_zero)
        .def("is_unit", &MonomialIdeal::is_unit)
        .def(py::self == py::self)
        .def("__repr__", [](const MonomialIdeal& x) { return to_text(x); });

    py::class_<PrimeSupport>(m, "PrimeSupport")
        .def(py::init<std::vector<int>>(), py::arg("vars"))
        .def_readonly("vars", &PrimeSupport::vars)
        .def(py::self == py::self)
        .def("__repr__", [](const PrimeSupport& p) { return to_text(p); });

    py::class_<RadicalIdeal>(m, "RadicalIdeal")
        .def(py::init<int, std::vector<PrimeSupport>>(), py::arg("n"), py::arg("primes"))
        .def_static("parse", &parse_radical_text, py::arg("text"), py::arg("n"))
        .def_property_readonly("n", &RadicalIdeal::ambient)
        .def_property_readonly("primes", &RadicalIdeal::primes)
        .def("to_monomial_ideal", &RadicalIdeal::to_monomial_ideal)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const RadicalIdeal& r) { return to_text(r); });

    py::class_<PrimaryComponent>(m, "PrimaryComponent")
        .def_readonly("ideal", &PrimaryComponent::ideal)
        .def_readonly("prime_support", &PrimaryComponent::prime_support);

    py::class_<Decomposition>(m, "Decomposition")
        .def(py::init<int, std::vector<PrimaryComponent>>(), py::arg("n"), py::arg("components"))
        .def_property_readonly("n", &Decomposition::ambient)
        .def_property_readonly("components", &Decomposition::components)
        .def_property_readonly("minimal_flags", &Decomposition::minimal_flags)
        .def("full_intersection", &Decomposition::full_intersection)
        .def("bight", &Decomposition::bight);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Hypergraph::vertex_count)
        .def_property_readonly("edges", &Hypergraph::edges)
        .def(py::self == py::self);

    py::class_<BadCycle>(m, "BadCycle")
        .def_readonly("vertices", &BadCycle::vertices)
        .def_readonly("edge_indices", &BadCycle::edge_indices);

    py::class_<AsrWitness>(m, "AsrWitness")
        .def_readonly("radical", &AsrWitness::radical)
        .def_readonly("exponent", &AsrWitness::exponent);

    py::class_<AsrSet>(m, "AsrSet")
        .def("__len__", [](const AsrSet& s) { return s.size(); })
        .def("radicals", &AsrSet::radicals)
        .def("witnesses", &AsrSet::witnesses)
        .def("contains", &AsrSet::contains)
        .def("witness", [](const AsrSet& s, const RadicalIdeal& r) { return s.members.at(r); })
        .def("same_members", &AsrSet::same_members)
        .def("subset_of", &AsrSet::subset_of);

    py::class_<DepthReport>(m, "DepthReport")
        .def_readonly("depth", &DepthReport::depth)
        .def_readonly("argmin", &DepthReport::argmin);

    py::class_<HalfspaceSystem>(m, "HalfspaceSystem");

    py::class_<PolyVertex>(m, "PolyVertex")
        .def_property_readonly("coords",
                               [](const PolyVertex& v) {
                                   std::vector<std::string> out;
                                   for (const auto& c : v.coords) out.push_back(rational_str(c));
                                   return out;
                               })
        .def_property_readonly("det", [](const PolyVertex& v) { return v.det.str(); })
        .def("is_integral", &PolyVertex::is_integral);

    // monomial-ideal arithmetic
    m.def("divides", &divides);
    m.def("member", &member);
    m.def("intersect", &intersect);
    m.def("multiply", &multiply);
    m.def("power", &power);
    m.def("colon", &colon);
    m.def("radical", &radical);
    m.def("delete_var", &delete_var);
    m.def("assoc_radical_ideal", &assoc_radical_ideal, py::arg("ideal"), py::arg("f"),
          "radical of the colon ideal by a monomial outside the ideal");

    // decompositions
    m.def("check_primary", &check_primary);
    m.def("square_free_decompose", &square_free_decompose);
    m.def("symbolic_power", py::overload_cast<const Decomposition&, std::int64_t>(&symbolic_power));
    m.def("symbolic_power", py::overload_cast<const RadicalIdeal&, std::int64_t>(&symbolic_power));
    m.def("ass_brute_force", &ass_brute_force);
    m.def("bight", &bight);

    // hypergraphs
    m.def("cover_ideal", &cover_ideal);
    m.def("minimal_vertex_covers", &minimal_vertex_covers);
    m.def("is_balanced", [](const Hypergraph& h) {
        const BalanceResult r = is_balanced(h);
        return py::make_tuple(r.balanced, r.witness);
    });
    m.def("delete_vertex", &delete_vertex);
    m.def("is_bipartite_graph", &is_bipartite_graph);

    // asr engine
    m.def("asr_brute_force", &asr_brute_force, py::arg("ideal"), py::arg("jobs") = 1);
    m.def("asr_symbolic_polyhedral", &asr_symbolic_polyhedral, py::arg("primes"), py::arg("s"),
          py::arg("jobs") = 1);
    m.def("asr_symbolic_decomposition", &asr_symbolic_decomposition, py::arg("decomposition"),
          py::arg("s"), py::arg("jobs") = 1);
    m.def("compare_asr", [](const AsrSet& a, const AsrSet& b) {
        const AsrComparison cmp = compare_asr(a, b);
        return py::make_tuple(to_string(cmp.relation), cmp.only_in_a, cmp.only_in_b);
    });
    m.def("localization_check",
          [](const MonomialIdeal& ideal) { return localization_check(ideal).holds; });
    m.def(
        "scan_stability",
        [](const RadicalIdeal& primes, std::int64_t s0, std::int64_t window,
           const std::vector<std::int64_t>& t_samples) {
            const StabilityReport r = scan_stability(primes, s0, window, t_samples);
            return py::make_tuple(r.stable, r.first_differing, r.early_inclusions_hold);
        },
        py::arg("primes"), py::arg("s0"), py::arg("window"),
        py::arg("t_samples") = std::vector<std::int64_t>{1, 2, 3, 5, 8});

    // polyhedra
    m.def(
        "build_system",
        [](int n, const std::vector<PrimeSupport>& le, const std::vector<PrimeSupport>& ge,
           std::int64_t t) { return build_system(n, le, ge, Rational(t)); },
        py::arg("n"), py::arg("le"), py::arg("ge"), py::arg("t") = 1);
    m.def("enumerate_vertices", &enumerate_vertices);
    m.def("covers_all_coordinates", &covers_all_coordinates);
    m.def("is_full_dimensional", &is_full_dimensional);
    m.def("s0_bound", [](int n, int b) { return py::int_(py::str(s0_bound(n, b).str())); });
    m.def("witness_lift", &witness_lift, py::arg("alpha"), py::arg("c1"), py::arg("s"));
    m.def("barycentric_witness", &barycentric_witness, py::arg("c1"), py::arg("ge_row_index"),
          py::arg("s"));

    // depth
    m.def(
        "depth_square_free",
        [](const MonomialIdeal& j, const std::string& field) {
            return depth_square_free(j, Field::parse(field));
        },
        py::arg("ideal"), py::arg("field") = "q");
    m.def(
        "depth_square_free",
        [](const RadicalIdeal& r, const std::string& field) {
            return depth_square_free(r, Field::parse(field));
        },
        py::arg("radical"), py::arg("field") = "q");
    m.def(
        "depth_via_hochster",
        [](const MonomialIdeal& ideal, const std::string& field) {
            return depth_via_hochster(ideal, Field::parse(field));
        },
        py::arg("ideal"), py::arg("field") = "q");
    m.def(
        "depth_via_hochster",
        [](const Decomposition& d, std::int64_t s, const std::string& field) {
            return depth_via_hochster(d, s, Field::parse(field));
        },
        py::arg("decomposition"), py::arg("s"), py::arg("field") = "q");

    // verification bundles
    m.def("verify", [](const std::string& bundle) {
        CheckResult r;
        if (bundle == "example1") r = verify_example1();
        else if (bundle == "t1") r = verify_t1_depth_pattern();
        else if (bundle == "t3-bipartite") r = verify_balanced_monotonicity();
        else if (bundle == "oracle") r = verify_oracle_equivalence();
        else throw ParseError("unknown bundle: " + bundle);
        return py::make_tuple(r.passed, r.detail);
    });

    // text forms
    m.def("to_text", py::overload_cast<const Monomial&>(&to_text));
    m.def("to_text", py::overload_cast<const MonomialIdeal&>(&to_text));
    m.def("to_text", py::overload_cast<const RadicalIdeal&>(&to_text));
}
