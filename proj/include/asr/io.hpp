#pragma once

#include <string>
#include <variant>
#include <vector>

#include "asr/decomposition.hpp"
#include "asr/engine.hpp"
#include "asr/hypergraph.hpp"
#include "asr/monomial.hpp"

namespace asr {

// Text syntax: monomials are `x1^2*x3` (variables 1-based, `1` for the empty
// monomial); ideals are `(x1^2*x2, x3)`; radical ideals are intersections of
// variable primes, `(x1,x2)∩(x2,x3)`.

std::string to_text(const Monomial& m);
std::string to_text(const MonomialIdeal& ideal);
std::string to_text(const PrimeSupport& p);
std::string to_text(const RadicalIdeal& r);

Monomial parse_monomial(const std::string& text, int n);
MonomialIdeal parse_ideal_text(const std::string& text, int n);
RadicalIdeal parse_radical_text(const std::string& text, int n);

/// Parsed content of an input file (JSON): an ideal given by generators, a
/// primary decomposition, or a hypergraph.
using InputObject = std::variant<MonomialIdeal, Decomposition, Hypergraph>;

enum class InputFormat { automatic, ideal, decomposition, hypergraph };

InputFormat parse_input_format(const std::string& s);

/// Loads `{"n":…, "gens":[…]}`, `{"n":…, "components":[{"gens":[…]},…]}` or
/// `{"n":…, "edges":[[…],…]}`, dispatching on the top-level key when the
/// format is automatic.
InputObject load_input_file(const std::string& path, InputFormat format = InputFormat::automatic);

std::string format_json_system_dump(const std::vector<PrimeSupport>& le,
                                    const std::vector<PrimeSupport>& ge, const std::string& rhs,
                                    int n);

/// RFC-4180-style quoting for fields containing commas or quotes.
std::string csv_quote(const std::string& field);

}  // namespace asr
