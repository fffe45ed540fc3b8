#pragma once

#include "afbd/framework.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace afbd {

/// A CNF formula over variables 1..variables. Literals are signed variable
/// indices (DIMACS convention).
struct CnfFormula {
    int variables = 0;
    std::vector<std::vector<int>> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Throws DomainError on an empty clause or an out-of-range literal.
void validate(const CnfFormula& phi);
/// Exactly three literals per clause (repeats allowed).
bool is_3cnf(const CnfFormula& phi);
/// Every clause all-positive or all-negative.
bool is_monotone(const CnfFormula& phi);
/// Brute-force assignment enumeration; throws Unsupported above 24 variables.
bool is_satisfiable(const CnfFormula& phi);

/// Standard DIMACS CNF (`c` comments, one `p cnf V C` header, 0-terminated
/// clauses that may span lines). Throws ParseError.
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& phi);

/// A generated framework together with the argument to query.
struct Reduction {
    Framework framework;
    std::string query;
};

// Argument names: x<i>, nx<i> for the literals of variable i, c<j> for the
// j-th clause (1-based), phi and phiP. Every reduction attacks x<i> <-> nx<i>
// and c<j> -> phi, and {phi} is a backdoor into the target class.

/// Monotone 3-CNF; literals attack their clauses one way. The `phi`
/// argument is credulously accepted (any semantics) iff the formula is
/// satisfiable. {phi} is a Bip backdoor. Throws DomainError for non-monotone or non-3 clauses.
Reduction reduce_ca_bip(const CnfFormula& phi);
/// reduce_ca_bip plus phiP <-> phi; queries phiP, which is skeptically
/// accepted (prf/sem/stb) iff phi is unsatisfiable.
Reduction reduce_sa_bip(const CnfFormula& phi);
/// 3-CNF; literals and their clauses attack each other. {phi} is a Sym
/// backdoor. Throws DomainError for non-3 clauses.
Reduction reduce_ca_sym(const CnfFormula& phi);
Reduction reduce_sa_sym(const CnfFormula& phi);

/// Random framework with arguments "1".."n". Each ordered pair (x,y), x != y,
/// visited row-major, is an attack with probability p. Draws come from
/// std::mt19937_64 (fully specified by the standard) seeded with `seed`; one
/// 64-bit draw per pair, accepted when (draw >> 11) * 2^-53 < p. Throws
/// DomainError for p outside [0,1].
Framework generate_random(std::size_t n, double p, std::uint64_t seed);

} // namespace afbd
