#include "asr/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace asr {

namespace {

using nlohmann::json;

}  // namespace

std::string to_text(const Monomial& m) {
    std::string out;
    for (int i = 0; i < m.ambient(); ++i) {
        const std::int64_t e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string to_text(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "(0)";
    // descending-lex generator order reads naturally: (x1^2*x2, x3)
    std::string out = "(";
    const auto& gens = ideal.generators();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
        if (it != gens.rbegin()) out += ", ";
        out += to_text(*it);
    }
    return out + ")";
}

std::string to_text(const PrimeSupport& p) {
    std::string out = "(";
    bool first = true;
    for (int v : p.vars) {
        if (!first) out += ",";
        out += "x" + std::to_string(v + 1);
        first = false;
    }
    return out + ")";
}

std::string to_text(const RadicalIdeal& r) {
    std::string out;
    bool first = true;
    for (const auto& p : r.primes()) {
        if (!first) out += "∩";
        out += to_text(p);
        first = false;
    }
    return first ? "(1)" : out;
}

namespace {

struct TextCursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError(context("unexpected end of input"));
        return text[pos];
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(context(std::string("expected '") + c + "'"));
        ++pos;
    }
    bool accept(char c) {
        if (done() || text[pos] != c) return false;
        ++pos;
        return true;
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError(context("expected an integer"));
        return std::stoll(text.substr(start, pos - start));
    }
    std::string context(const std::string& what) const {
        return what + " at column " + std::to_string(pos + 1) + " in \"" + text + "\"";
    }
};

Monomial parse_monomial_at(TextCursor& cur, int n) {
    std::vector<std::int64_t> exps(static_cast<std::size_t>(n), 0);
    if (cur.peek() == '1') {
        ++cur.pos;
        return Monomial(std::move(exps));
    }
    while (true) {
        if (cur.peek() != 'x') throw ParseError(cur.context("expected a variable"));
        ++cur.pos;
        const std::int64_t index = cur.integer();
        if (index < 1 || index > n)
            throw ParseError(cur.context("variable index out of range 1.." + std::to_string(n)));
        std::int64_t e = 1;
        if (cur.accept('^')) e = cur.integer();
        exps[static_cast<std::size_t>(index - 1)] += e;
        if (!cur.accept('*')) break;
    }
    return Monomial(std::move(exps));
}

}  // namespace

Monomial parse_monomial(const std::string& text, int n) {
    TextCursor cur{text};
    Monomial m = parse_monomial_at(cur, n);
    if (!cur.done()) throw ParseError(cur.context("trailing input after monomial"));
    return m;
}

MonomialIdeal parse_ideal_text(const std::string& text, int n) {
    TextCursor cur{text};
    cur.expect('(');
    if (cur.peek() == '0') {
        ++cur.pos;
        cur.expect(')');
        if (!cur.done()) throw ParseError(cur.context("trailing input after ideal"));
        return MonomialIdeal::zero(n);
    }
    std::vector<Monomial> gens;
    gens.push_back(parse_monomial_at(cur, n));
    while (cur.accept(',')) gens.push_back(parse_monomial_at(cur, n));
    cur.expect(')');
    if (!cur.done()) throw ParseError(cur.context("trailing input after ideal"));
    return MonomialIdeal(n, std::move(gens));
}

RadicalIdeal parse_radical_text(const std::string& text, int n) {
    TextCursor cur{text};
    std::vector<PrimeSupport> primes;
    while (true) {
        cur.expect('(');
        std::vector<int> vars;
        while (true) {
            if (cur.peek() != 'x') throw ParseError(cur.context("expected a variable"));
            ++cur.pos;
            const std::int64_t index = cur.integer();
            if (index < 1 || index > n)
                throw ParseError(cur.context("variable index out of range 1.." + std::to_string(n)));
            vars.push_back(static_cast<int>(index - 1));
            if (!cur.accept(',')) break;
        }
        cur.expect(')');
        primes.emplace_back(std::move(vars));
        cur.skip_ws();
        // the UTF-8 intersection sign joins the primes
        if (cur.pos + 2 < cur.text.size() && cur.text.compare(cur.pos, 3, "∩") == 0) {
            cur.pos += 3;
            continue;
        }
        break;
    }
    if (!cur.done()) throw ParseError(cur.context("trailing input after radical ideal"));
    return RadicalIdeal(n, std::move(primes));
}

InputFormat parse_input_format(const std::string& s) {
    if (s == "auto") return InputFormat::automatic;
    if (s == "ideal") return InputFormat::ideal;
    if (s == "decomposition") return InputFormat::decomposition;
    if (s == "hypergraph") return InputFormat::hypergraph;
    throw ParseError("unknown input format: " + s);
}

namespace {

int read_ambient(const json& doc, const std::string& path) {
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError(path + ": missing integer field \"n\"");
    const std::int64_t n = doc["n"].get<std::int64_t>();
    if (n < 1 || n > 63) throw ParseError(path + ": \"n\" out of range 1..63");
    return static_cast<int>(n);
}

MonomialIdeal read_ideal(const json& doc, const std::string& path) {
    const int n = read_ambient(doc, path);
    if (!doc.contains("gens") || !doc["gens"].is_array())
        throw ParseError(path + ": missing array field \"gens\"");
    std::vector<Monomial> gens;
    for (const auto& g : doc["gens"]) {
        if (!g.is_string()) throw ParseError(path + ": generators must be strings");
        gens.push_back(parse_monomial(g.get<std::string>(), n));
    }
    return MonomialIdeal(n, std::move(gens));
}

Decomposition read_decomposition(const json& doc, const std::string& path) {
    const int n = read_ambient(doc, path);
    if (!doc.contains("components") || !doc["components"].is_array())
        throw ParseError(path + ": missing array field \"components\"");
    std::vector<PrimaryComponent> comps;
    for (const auto& c : doc["components"]) {
        if (!c.is_object() || !c.contains("gens") || !c["gens"].is_array())
            throw ParseError(path + ": each component needs a \"gens\" array");
        std::vector<Monomial> gens;
        for (const auto& g : c["gens"]) {
            if (!g.is_string()) throw ParseError(path + ": generators must be strings");
            gens.push_back(parse_monomial(g.get<std::string>(), n));
        }
        comps.push_back(check_primary(MonomialIdeal(n, std::move(gens))));
    }
    return Decomposition(n, std::move(comps));
}

Hypergraph read_hypergraph(const json& doc, const std::string& path) {
    const int n = read_ambient(doc, path);
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError(path + ": missing array field \"edges\"");
    std::vector<std::vector<int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array()) throw ParseError(path + ": edges must be arrays of vertex indices");
        std::vector<int> edge;
        for (const auto& v : e) {
            if (!v.is_number_integer()) throw ParseError(path + ": vertices must be integers");
            const std::int64_t idx = v.get<std::int64_t>();
            if (idx < 1 || idx > n)
                throw ParseError(path + ": vertex index out of range 1.." + std::to_string(n));
            edge.push_back(static_cast<int>(idx - 1));
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace

InputObject load_input_file(const std::string& path, InputFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError(path + ": top-level JSON object expected");
    if (format == InputFormat::automatic) {
        if (doc.contains("gens")) format = InputFormat::ideal;
        else if (doc.contains("components")) format = InputFormat::decomposition;
        else if (doc.contains("edges")) format = InputFormat::hypergraph;
        else throw ParseError(path + ": expected one of the keys \"gens\", \"components\", \"edges\"");
    }
    switch (format) {
        case InputFormat::ideal: return read_ideal(doc, path);
        case InputFormat::decomposition: return read_decomposition(doc, path);
        case InputFormat::hypergraph: return read_hypergraph(doc, path);
        case InputFormat::automatic: break;
    }
    throw ParseError(path + ": unresolved input format");
}

std::string format_json_system_dump(const std::vector<PrimeSupport>& le,
                                    const std::vector<PrimeSupport>& ge, const std::string& rhs,
                                    int n) {
    json doc;
    doc["n"] = n;
    doc["rhs"] = rhs;
    auto rows = [](const std::vector<PrimeSupport>& supports) {
        json arr = json::array();
        for (const auto& f : supports) {
            json row = json::array();
            for (int v : f.vars) row.push_back(v + 1);
            arr.push_back(row);
        }
        return arr;
    };
    doc["le"] = rows(le);
    doc["ge"] = rows(ge);
    return doc.dump();
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    return quoted + "\"";
}

}  // namespace asr
