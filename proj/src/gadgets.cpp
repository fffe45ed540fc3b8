#include "afbd/gadgets.hpp"

#include "afbd/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <random>
#include <sstream>

namespace afbd {

void validate(const CnfFormula& phi) {
    if (phi.variables < 0) throw DomainError("negative variable count");
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
        const auto& clause = phi.clauses[j];
        if (clause.empty()) throw DomainError("clause " + std::to_string(j + 1) + " is empty");
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > phi.variables)
                throw DomainError("literal " + std::to_string(lit) + " out of range in clause " +
                                  std::to_string(j + 1));
    }
}

bool is_3cnf(const CnfFormula& phi) {
    return std::all_of(phi.clauses.begin(), phi.clauses.end(),
                       [](const auto& c) { return c.size() == 3; });
}

bool is_monotone(const CnfFormula& phi) {
    return std::all_of(phi.clauses.begin(), phi.clauses.end(), [](const auto& c) {
        return std::all_of(c.begin(), c.end(), [](int l) { return l > 0; }) ||
               std::all_of(c.begin(), c.end(), [](int l) { return l < 0; });
    });
}

bool is_satisfiable(const CnfFormula& phi) {
    validate(phi);
    if (phi.variables > 24) throw Unsupported("brute-force satisfiability is limited to 24 variables");
    const std::uint32_t total = std::uint32_t{1} << phi.variables;
    for (std::uint32_t assignment = 0; assignment < total; ++assignment) {
        auto value = [&](int lit) {
            bool v = (assignment >> (std::abs(lit) - 1)) & 1U;
            return lit > 0 ? v : !v;
        };
        bool all = std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const auto& c) {
            return std::any_of(c.begin(), c.end(), value);
        });
        if (all) return true;
    }
    return false;
}

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula phi;
    bool header = false;
    std::size_t declared_clauses = 0;
    std::vector<int> current;
    std::size_t lineno = 0;
    std::size_t last_line = 0;

    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        start = end + 1;
        ++lineno;

        std::istringstream in(line);
        std::string first;
        if (!(in >> first) || first[0] == 'c') continue;
        if (first == "%") break; // SATLIB end marker
        if (first == "p") {
            std::string fmt;
            long long vars = -1, clauses = -1;
            std::string extra;
            if (header || !(in >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0 ||
                (in >> extra))
                throw ParseError(lineno, "malformed `p cnf <vars> <clauses>` header");
            header = true;
            phi.variables = static_cast<int>(vars);
            declared_clauses = static_cast<std::size_t>(clauses);
            continue;
        }
        if (!header) throw ParseError(lineno, "clause before `p cnf` header");

        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            int lit = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError(lineno, "invalid literal `" + tok + "`");
            if (lit == 0) {
                if (current.empty()) throw ParseError(lineno, "empty clause");
                phi.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::abs(lit) > phi.variables)
                throw ParseError(lineno, "literal " + tok + " exceeds declared variable count");
            current.push_back(lit);
            last_line = lineno;
        }
    }
    if (!header) throw ParseError(0, "missing `p cnf` header");
    if (!current.empty()) throw ParseError(last_line, "clause is missing its terminating 0");
    if (phi.clauses.size() != declared_clauses)
        throw ParseError(0, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                std::to_string(phi.clauses.size()));
    return phi;
}

std::string serialize_dimacs(const CnfFormula& phi) {
    std::string out = "p cnf " + std::to_string(phi.variables) + " " + std::to_string(phi.clauses.size()) + "\n";
    for (const auto& c : phi.clauses) {
        for (int l : c) out += std::to_string(l) + " ";
        out += "0\n";
    }
    return out;
}

namespace {

std::string literal_name(int lit) {
    return (lit > 0 ? "x" : "nx") + std::to_string(std::abs(lit));
}

enum class ClauseLink { OneWay, Mutual };

Reduction build(const CnfFormula& phi, ClauseLink link, bool skeptical) {
    FrameworkBuilder b;
    for (int i = 1; i <= phi.variables; ++i) {
        b.add_argument(literal_name(i));
        b.add_argument(literal_name(-i));
    }
    for (std::size_t j = 1; j <= phi.clauses.size(); ++j) b.add_argument("c" + std::to_string(j));
    b.add_argument("phi");
    if (skeptical) b.add_argument("phiP");

    for (int i = 1; i <= phi.variables; ++i) {
        b.add_attack(literal_name(i), literal_name(-i));
        b.add_attack(literal_name(-i), literal_name(i));
    }
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
        const auto clause = "c" + std::to_string(j + 1);
        for (int lit : phi.clauses[j]) {
            b.add_attack(literal_name(lit), clause);
            if (link == ClauseLink::Mutual) b.add_attack(clause, literal_name(lit));
        }
        b.add_attack(clause, "phi");
    }
    if (skeptical) {
        b.add_attack("phi", "phiP");
        b.add_attack("phiP", "phi");
    }
    return {std::move(b).build(), skeptical ? "phiP" : "phi"};
}

void require_bip_input(const CnfFormula& phi) {
    validate(phi);
    if (!is_3cnf(phi)) throw DomainError("bip reductions need exactly three literals per clause");
    if (!is_monotone(phi)) throw DomainError("bip reductions need monotone clauses");
}

void require_sym_input(const CnfFormula& phi) {
    validate(phi);
    if (!is_3cnf(phi)) throw DomainError("sym reductions need exactly three literals per clause");
}

} // namespace

Reduction reduce_ca_bip(const CnfFormula& phi) {
    require_bip_input(phi);
    return build(phi, ClauseLink::OneWay, false);
}

Reduction reduce_sa_bip(const CnfFormula& phi) {
    require_bip_input(phi);
    return build(phi, ClauseLink::OneWay, true);
}

Reduction reduce_ca_sym(const CnfFormula& phi) {
    require_sym_input(phi);
    return build(phi, ClauseLink::Mutual, false);
}

Reduction reduce_sa_sym(const CnfFormula& phi) {
    require_sym_input(phi);
    return build(phi, ClauseLink::Mutual, true);
}

Framework generate_random(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("attack probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    FrameworkBuilder b;
    for (std::size_t i = 1; i <= n; ++i) b.add_argument(std::to_string(i));
    for (ArgId x = 0; x < n; ++x)
        for (ArgId y = 0; y < n; ++y) {
            if (x == y) continue;
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) b.add_attack(x, y);
        }
    return std::move(b).build();
}

} // namespace afbd
