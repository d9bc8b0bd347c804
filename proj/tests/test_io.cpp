#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <fstream>

#include "asr/io.hpp"
#include "asr/random_instances.hpp"

using namespace asr;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        char name[] = "/tmp/asrtool_test_XXXXXX";
        const int fd = mkstemp(name);
        REQUIRE(fd >= 0);
        close(fd);
        path = name;
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("monomial text round-trip") {
    CHECK(to_text(parse_monomial("x1^2*x3", 3)) == "x1^2*x3");
    CHECK(to_text(parse_monomial("1", 3)) == "1");
    CHECK(parse_monomial("x2 * x2", 2) == parse_monomial("x2^2", 2));
    CHECK_THROWS_AS(parse_monomial("x4", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x1^", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("y1", 3), ParseError);
    CHECK_THROWS_WITH_AS(parse_monomial("x1 x2", 3), doctest::Contains("column"), ParseError);

    Rng rng(127);
    for (int trial = 0; trial < 50; ++trial) {
        const Monomial m = random_monomial(rng, 4, 5);
        CHECK(parse_monomial(to_text(m), 4) == m);
    }
}

TEST_CASE("ideal text round-trip") {
    CHECK(to_text(parse_ideal_text("(x1^2*x2, x3)", 3)) == "(x1^2*x2, x3)");
    CHECK(parse_ideal_text("(0)", 2).is_zero());
    CHECK(to_text(MonomialIdeal::zero(2)) == "(0)");
    CHECK(to_text(MonomialIdeal::unit(2)) == "(1)");
    CHECK(parse_ideal_text("(1)", 2).is_unit());
    CHECK_THROWS_AS(parse_ideal_text("x1, x2", 2), ParseError);

    Rng rng(131);
    for (int trial = 0; trial < 50; ++trial) {
        const MonomialIdeal ideal = random_monomial_ideal(rng, 4, 4);
        CHECK(parse_ideal_text(to_text(ideal), ideal.ambient()) == ideal);
    }
}

TEST_CASE("radical text round-trip") {
    const RadicalIdeal r(3, {PrimeSupport({0, 1}), PrimeSupport({1, 2})});
    CHECK(to_text(r) == "(x1,x2)∩(x2,x3)");
    CHECK(parse_radical_text("(x1,x2)∩(x2,x3)", 3) == r);
    CHECK(parse_radical_text(to_text(r), 3) == r);
    CHECK_THROWS_AS(parse_radical_text("(x1,x2)(x2,x3)", 3), ParseError);

    Rng rng(137);
    for (int trial = 0; trial < 50; ++trial) {
        const SquareFreeInstance instance = random_square_free_ideal(rng, 5, 4);
        CHECK(parse_radical_text(to_text(instance.primes), instance.primes.ambient()) ==
              instance.primes);
    }
}

TEST_CASE("input files") {
    const TempFile ideal_file(R"({"n": 3, "gens": ["x1*x2", "x3"]})");
    const InputObject ideal = load_input_file(ideal_file.path);
    CHECK(std::get<MonomialIdeal>(ideal) == parse_ideal_text("(x1*x2, x3)", 3));

    const TempFile decomposition_file(
        R"({"n": 2, "components": [{"gens": ["x1"]}, {"gens": ["x1^2", "x2"]}]})");
    const InputObject decomposition = load_input_file(decomposition_file.path);
    CHECK(std::get<Decomposition>(decomposition).components().size() == 2);
    CHECK(std::get<Decomposition>(decomposition).minimal_components().size() == 1);

    const TempFile hypergraph_file(R"({"n": 3, "edges": [[1, 2], [2, 3]]})");
    const InputObject hypergraph = load_input_file(hypergraph_file.path);
    CHECK(std::get<Hypergraph>(hypergraph) == Hypergraph(3, {{0, 1}, {1, 2}}));

    // format override forces the reader
    CHECK_THROWS_AS(load_input_file(hypergraph_file.path, InputFormat::ideal), ParseError);

    const TempFile broken(R"({"n": 3, "gens": ["x1*x2")");
    CHECK_THROWS_AS(load_input_file(broken.path), ParseError);
    const TempFile bad_component(R"({"n": 2, "components": [{"gens": ["x1*x2"]}]})");
    CHECK_THROWS_AS(load_input_file(bad_component.path), PreconditionError);  // not primary
    CHECK_THROWS_AS(load_input_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("csv quoting") {
    CHECK(csv_quote("plain") == "plain");
    CHECK(csv_quote("(x1,x2)") == "\"(x1,x2)\"");
    CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("system dump") {
    const std::string dump =
        format_json_system_dump({PrimeSupport({0, 1})}, {PrimeSupport({1, 2})}, "1", 3);
    CHECK(dump.find("\"le\":[[1,2]]") != std::string::npos);
    CHECK(dump.find("\"ge\":[[2,3]]") != std::string::npos);
    CHECK(dump.find("\"rhs\":\"1\"") != std::string::npos);
}
