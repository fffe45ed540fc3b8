#pragma once

#include "afbd/fragments.hpp"
#include "afbd/framework.hpp"

#include <cstddef>
#include <optional>

namespace afbd {

/// A set of arguments whose removal puts the framework into `fragment`.
struct Backdoor {
    ArgumentSet members;
    FragmentClass fragment = FragmentClass::Acyc;
    /// No smaller backdoor into `fragment` exists.
    bool certified_minimum = false;

    friend bool operator==(const Backdoor&, const Backdoor&) = default;
};

// All detectors return the smallest backdoor of size <= max_size, choosing
// the lexicographically least member list among equally small ones, or
// nullopt when every backdoor is larger than max_size.

/// Tries every subset in order of size; works for any class.
std::optional<Backdoor> detect_bruteforce(const Framework& f, FragmentClass c, std::size_t max_size);

/// Minimum vertex cover of the asymmetric-pair graph, by bounded branching.
std::optional<Backdoor> detect_sym(const Framework& f, std::size_t max_size);

/// Minimum odd cycle transversal of the undirected attack graph.
/// Self-attackers are taken first.
std::optional<Backdoor> detect_bip(const Framework& f, std::size_t max_size);

/// Minimum directed feedback vertex set; branches on the vertices of a
/// shortest directed cycle.
std::optional<Backdoor> detect_acyc(const Framework& f, std::size_t max_size);

/// Dispatches to the class-specific detector; Noeven uses brute force.
std::optional<Backdoor> detect(const Framework& f, FragmentClass c, std::size_t max_size);

/// Size of a smallest backdoor into `c`.
std::size_t distance(const Framework& f, FragmentClass c);

} // namespace afbd
