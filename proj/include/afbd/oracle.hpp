#pragma once

#include "afbd/framework.hpp"
#include "afbd/semantics.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace afbd {

/// Duplicate-free family of argument sets in canonical order (by size, then
/// lexicographically).
class ExtensionSet {
public:
    ExtensionSet() = default;
    ExtensionSet(std::initializer_list<ArgumentSet> sets);
    explicit ExtensionSet(std::vector<ArgumentSet> sets);

    std::size_t size() const noexcept { return sets_.size(); }
    bool empty() const noexcept { return sets_.empty(); }
    auto begin() const noexcept { return sets_.begin(); }
    auto end() const noexcept { return sets_.end(); }
    const ArgumentSet& operator[](std::size_t i) const { return sets_[i]; }
    const std::vector<ArgumentSet>& sets() const noexcept { return sets_; }

    bool contains(const ArgumentSet& s) const;
    bool is_subset_of(const ExtensionSet& other) const;

    /// Some member contains `arg`.
    bool any_contains(std::string_view arg) const;
    /// Every member contains `arg`; vacuously true for an empty family.
    bool all_contain(std::string_view arg) const;

    friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;

private:
    std::vector<ArgumentSet> sets_;
};

/// One extension per line (empty extension = empty line).
std::string to_string(const ExtensionSet& e);

inline constexpr std::size_t default_oracle_guard = 20;
/// Hard ceiling on the guard, imposed by 64-bit subset masks.
inline constexpr std::size_t max_oracle_guard = 62;

/// Exhaustive sigma(F) over all 2^|X| subsets. Throws GuardExceeded if
/// |X| > guard (guard is clamped to max_oracle_guard).
ExtensionSet enumerate_oracle(const Framework& f, Semantics sigma,
                              std::size_t guard = default_oracle_guard);

bool credulous_oracle(const Framework& f, Semantics sigma, std::string_view arg,
                      std::size_t guard = default_oracle_guard);
/// Vacuously true when sigma(F) is empty.
bool skeptical_oracle(const Framework& f, Semantics sigma, std::string_view arg,
                      std::size_t guard = default_oracle_guard);

} // namespace afbd
