#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace afbd {

/// Dense index of an argument inside one Framework. Only meaningful for the
/// framework that produced it; names are the stable identity.
using ArgId = std::uint32_t;

/// Per-argument membership flags indexed by ArgId.
using Membership = std::vector<char>;

/// True when `name` is usable as an argument identifier: nonempty, no
/// whitespace, no parentheses, no commas.
bool is_valid_argument_name(std::string_view name);

/// A set of argument names kept sorted lexicographically and duplicate-free.
///
/// Ordering (`<=>`) is the canonical extension order: by cardinality first,
/// then lexicographically by the sorted member list.
class ArgumentSet {
public:
    ArgumentSet() = default;
    ArgumentSet(std::initializer_list<std::string> names);
    explicit ArgumentSet(std::vector<std::string> names);

    bool contains(std::string_view name) const;
    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    auto begin() const noexcept { return names_.begin(); }
    auto end() const noexcept { return names_.end(); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    bool is_subset_of(const ArgumentSet& other) const;

    friend bool operator==(const ArgumentSet&, const ArgumentSet&) = default;
    friend std::strong_ordering operator<=>(const ArgumentSet& a, const ArgumentSet& b);

private:
    std::vector<std::string> names_;
};

ArgumentSet set_union(const ArgumentSet& a, const ArgumentSet& b);
ArgumentSet set_difference(const ArgumentSet& a, const ArgumentSet& b);

/// Comma-separated member names in canonical order; "" for the empty set.
std::string to_string(const ArgumentSet& s);

/// An argumentation framework: a finite list of named arguments (in order of
/// first declaration) and a duplicate-free attack relation.
///
/// Immutable once built; see FrameworkBuilder.
class Framework {
public:
    Framework() = default;

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    std::size_t attack_count() const noexcept { return attacks_.size(); }

    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(ArgId id) const { return names_.at(id); }
    std::optional<ArgId> find(std::string_view name) const;
    /// Throws DomainError for unknown names.
    ArgId id(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    std::span<const ArgId> attackers(ArgId id) const { return attackers_.at(id); }
    std::span<const ArgId> targets(ArgId id) const { return targets_.at(id); }
    bool attacks(ArgId from, ArgId to) const;
    bool attacks(std::string_view from, std::string_view to) const;

    /// Attacks in insertion order.
    const std::vector<std::pair<ArgId, ArgId>>& attack_list() const noexcept { return attacks_; }

    ArgumentSet all() const;

    /// Membership flags for `s`; throws DomainError if `s` names an argument
    /// not in this framework.
    Membership membership(const ArgumentSet& s) const;
    ArgumentSet to_set(const Membership& m) const;

    /// Same argument order and the same attack set.
    friend bool operator==(const Framework& a, const Framework& b);

private:
    friend class FrameworkBuilder;

    static std::uint64_t key(ArgId from, ArgId to) {
        return (static_cast<std::uint64_t>(from) << 32) | to;
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, ArgId> index_;
    std::vector<std::vector<ArgId>> attackers_;
    std::vector<std::vector<ArgId>> targets_;
    std::vector<std::pair<ArgId, ArgId>> attacks_;
    std::unordered_set<std::uint64_t> attack_keys_;
};

class FrameworkBuilder {
public:
    /// Throws DomainError on an invalid or duplicate name.
    ArgId add_argument(std::string name);
    bool has_argument(std::string_view name) const { return f_.contains(name); }
    /// Returns false if the attack was already present. Throws DomainError
    /// if either endpoint is undeclared.
    bool add_attack(std::string_view from, std::string_view to);
    bool add_attack(ArgId from, ArgId to);

    Framework build() && { return std::move(f_); }

private:
    Framework f_;
};

/// Convenience constructor; arguments are declared first, then attacks.
Framework make_framework(const std::vector<std::string>& arguments,
                         const std::vector<std::pair<std::string, std::string>>& attacks);

/// F - Y: drops the arguments of `removed` and every attack touching them.
/// Remaining arguments keep their relative order.
Framework remove(const Framework& f, const ArgumentSet& removed);

/// The sub-framework induced by the flagged arguments.
Framework induced(const Framework& f, const Membership& keep);

} // namespace afbd
