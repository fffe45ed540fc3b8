#pragma once

#include "afbd/framework.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace afbd {

enum class Semantics { Adm, Prf, Com, Sem, Stb };

inline constexpr std::array<Semantics, 5> all_semantics{
    Semantics::Adm, Semantics::Prf, Semantics::Com, Semantics::Sem, Semantics::Stb};

/// "adm", "prf", "com", "sem" or "stb".
std::string_view to_string(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view text);

/// S together with every argument attacked by a member of S.
ArgumentSet range(const Framework& f, const ArgumentSet& s);
bool is_conflict_free(const Framework& f, const ArgumentSet& s);
/// Every attacker of `x` is attacked by some member of `s`.
bool defends(const Framework& f, const ArgumentSet& s, std::string_view x);

/// Membership test S in sigma(F), straight from the definitions.
///
/// ADM, COM and STB are polynomial. PRF and SEM enumerate candidate
/// supersets / admissible sets and are exponential; they throw GuardExceeded
/// when more than `max_free_arguments` arguments would have to be enumerated.
bool satisfies(const Framework& f, const ArgumentSet& s, Semantics sigma,
               std::size_t max_free_arguments = 30);

namespace detail {

// Flag-level versions shared by the solvers. Inputs are assumed valid.
Membership attacked_by(const Framework& f, const Membership& s);
bool conflict_free(const Framework& f, const Membership& s);
bool admissible(const Framework& f, const Membership& s);
bool complete(const Framework& f, const Membership& s);
Membership range_of(const Framework& f, const Membership& s);

} // namespace detail

} // namespace afbd
