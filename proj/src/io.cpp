#include "iesat/io.hpp"

#include "iesat/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

namespace iesat {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Kind parse_kind(const json& j) {
    const auto s = j.get<std::string>();
    if (s == "dnf") return Kind::dnf;
    if (s == "cnf") return Kind::cnf;
    throw MalformedError("kind must be \"dnf\" or \"cnf\", got \"" + s + "\"");
}

} // namespace

Formula parse_native(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + e.what(),
                         line, col);
    }

    try {
        if (!doc.is_object()) throw MalformedError("top-level value must be an object");
        for (const auto& [key, _] : doc.items()) {
            if (key != "kind" && key != "vars" && key != "clauses") {
                throw MalformedError("unknown key \"" + key + "\"");
            }
        }
        const Kind kind = parse_kind(doc.at("kind"));
        const int vars = doc.at("vars").get<int>();
        std::vector<Clause> clauses;
        for (const json& arr : doc.at("clauses")) {
            if (!arr.is_array()) throw MalformedError("clause must be an array");
            clauses.emplace_back(arr.get<std::vector<Lit>>());
        }
        return Formula(kind, vars, std::move(clauses));
    } catch (const json::exception& e) {
        throw MalformedError(std::string("bad formula document: ") + e.what());
    }
}

std::string serialize_native(const Formula& f) {
    ordered_json doc;
    doc["kind"] = kind_name(f.kind());
    doc["vars"] = f.num_vars();
    ordered_json clauses = ordered_json::array();
    for (const Clause& c : f.clauses()) {
        clauses.push_back(std::vector<Lit>(c.lits().begin(), c.lits().end()));
    }
    doc["clauses"] = std::move(clauses);
    return doc.dump();
}

Formula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int vars = 0;
    std::size_t declared_clauses = 0;

    std::vector<Clause> clauses;
    std::vector<Lit> current;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue; // blank line
        if (tok[0] == 'c') continue; // comment
        if (tok == "p") {
            if (have_header) {
                throw ParseError("line " + std::to_string(line_no) +
                                     ": duplicate header",
                                 line_no, 1);
            }
            std::string fmt;
            long long nv = -1, nc = -1;
            if (!(tokens >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0) {
                throw ParseError("line " + std::to_string(line_no) +
                                     ": expected \"p cnf <vars> <clauses>\"",
                                 line_no, 1);
            }
            vars = static_cast<int>(nv);
            declared_clauses = static_cast<std::size_t>(nc);
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw ParseError("line " + std::to_string(line_no) +
                                 ": clause before \"p cnf\" header",
                             line_no, 1);
        }
        // Literal tokens; a clause ends at 0 and may span lines.
        do {
            Lit lit = 0;
            const auto [ptr, ec] =
                std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw ParseError("line " + std::to_string(line_no) +
                                     ": bad literal \"" + tok + "\"",
                                 line_no, 1);
            }
            if (lit == 0) {
                clauses.emplace_back(std::move(current));
                current.clear();
            } else {
                if (var_of(lit) > vars) {
                    throw MalformedError("line " + std::to_string(line_no) +
                                         ": literal " + tok +
                                         " out of range for " +
                                         std::to_string(vars) + " variables");
                }
                current.push_back(lit);
            }
        } while (tokens >> tok);
    }

    if (!have_header) throw ParseError("missing \"p cnf\" header");
    if (!current.empty()) throw ParseError("unterminated clause (missing trailing 0)");
    if (clauses.size() != declared_clauses) {
        throw MalformedError("header declares " + std::to_string(declared_clauses) +
                             " clauses but found " + std::to_string(clauses.size()));
    }
    return Formula(Kind::cnf, vars, std::move(clauses));
}

std::string write_dimacs(const Formula& f) {
    if (f.kind() != Kind::cnf) throw KindError("DIMACS output is CNF only");
    std::string out = "p cnf " + std::to_string(f.num_vars()) + ' ' +
                      std::to_string(f.size()) + '\n';
    for (const Clause& c : f.clauses()) {
        for (Lit lit : c.lits()) {
            out += std::to_string(lit);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

namespace {

double wall_ms(const SolverStats& stats) {
    return static_cast<double>(stats.wall.count()) / 1000.0;
}

ordered_json outcome_common(bool decided, const char* verdict_key, bool verdict,
                            int level, const Dyadic& partial,
                            const SolverStats& stats) {
    ordered_json j;
    j["decided"] = decided;
    if (decided) j[verdict_key] = verdict;
    j["level"] = level;
    if (!decided) j["partial_numerator"] = partial.numerator().str();
    j["exponent"] = partial.exponent();
    j["terms_evaluated"] = stats.terms_evaluated;
    j["table_peak"] = stats.table_peak;
    j["wall_ms"] = wall_ms(stats);
    return j;
}

} // namespace

std::string outcome_to_json(const SolverOutcome& o) {
    return outcome_common(o.decided, "is_tautology", o.is_tautology, o.level,
                          o.partial, o.stats)
        .dump();
}

std::string outcome_to_json(const SatOutcome& o) {
    return outcome_common(o.decided, "is_satisfiable", o.is_satisfiable, o.level,
                          o.partial, o.stats)
        .dump();
}

} // namespace iesat
