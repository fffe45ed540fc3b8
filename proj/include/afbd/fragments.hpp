#pragma once

#include "afbd/framework.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace afbd {

/// The tractable fragments a framework may be recognized in or be close to.
enum class FragmentClass { Acyc, Noeven, Sym, Bip };

inline constexpr std::array<FragmentClass, 4> all_fragment_classes{
    FragmentClass::Acyc, FragmentClass::Noeven, FragmentClass::Sym, FragmentClass::Bip};

/// "acyc", "noeven", "sym" or "bip".
std::string_view to_string(FragmentClass c);
std::optional<FragmentClass> parse_fragment_class(std::string_view text);

/// Work budget for the even-cycle search, counted in path extensions.
inline constexpr std::uint64_t default_even_cycle_budget = 50'000'000;

/// Fragment membership.
///
/// - Acyc: no directed cycle (self-attacks count).
/// - Noeven: no directed cycle of even length. A 2-cycle is even, a
///   self-attack is odd. Decided by exhaustive simple-cycle search; throws
///   Inconclusive if `even_cycle_budget` path extensions do not suffice.
/// - Sym: the attack relation is symmetric.
/// - Bip: the undirected attack graph is 2-colorable; a self-attack makes a
///   framework non-bipartite.
bool recognize(const Framework& f, FragmentClass c,
               std::uint64_t even_cycle_budget = default_even_cycle_budget);

bool is_acyclic(const Framework& f);
bool is_symmetric(const Framework& f);
bool is_bipartite(const Framework& f);
bool has_even_cycle(const Framework& f, std::uint64_t budget = default_even_cycle_budget);

/// Unordered pairs {x,y}, x != y, with exactly one of (x,y), (y,x) attacking.
/// Each pair is (smaller name, larger name); pairs sorted.
std::vector<std::pair<std::string, std::string>> asymmetric_pairs(const Framework& f);

} // namespace afbd
