#include "afbd/semantics.hpp"

#include "afbd/error.hpp"

#include <algorithm>
#include <cstdint>

namespace afbd {

std::string_view to_string(Semantics s) {
    switch (s) {
    case Semantics::Adm: return "adm";
    case Semantics::Prf: return "prf";
    case Semantics::Com: return "com";
    case Semantics::Sem: return "sem";
    case Semantics::Stb: return "stb";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
    for (auto s : all_semantics)
        if (to_string(s) == text) return s;
    return std::nullopt;
}

namespace detail {

Membership attacked_by(const Framework& f, const Membership& s) {
    Membership out(f.size(), 0);
    for (ArgId x = 0; x < f.size(); ++x)
        if (s[x])
            for (ArgId t : f.targets(x)) out[t] = 1;
    return out;
}

bool conflict_free(const Framework& f, const Membership& s) {
    for (const auto& [x, y] : f.attack_list())
        if (s[x] && s[y]) return false;
    return true;
}

namespace {

bool defended_by(const Framework& f, const Membership& attacked, ArgId x) {
    auto att = f.attackers(x);
    return std::all_of(att.begin(), att.end(), [&](ArgId a) { return attacked[a] != 0; });
}

} // namespace

bool admissible(const Framework& f, const Membership& s) {
    if (!conflict_free(f, s)) return false;
    auto attacked = attacked_by(f, s);
    for (ArgId x = 0; x < f.size(); ++x)
        if (s[x] && !defended_by(f, attacked, x)) return false;
    return true;
}

bool complete(const Framework& f, const Membership& s) {
    if (!conflict_free(f, s)) return false;
    auto attacked = attacked_by(f, s);
    for (ArgId x = 0; x < f.size(); ++x)
        if ((s[x] != 0) != defended_by(f, attacked, x)) return false;
    return true;
}

Membership range_of(const Framework& f, const Membership& s) {
    auto r = attacked_by(f, s);
    for (ArgId x = 0; x < f.size(); ++x)
        if (s[x]) r[x] = 1;
    return r;
}

} // namespace detail

ArgumentSet range(const Framework& f, const ArgumentSet& s) {
    return f.to_set(detail::range_of(f, f.membership(s)));
}

bool is_conflict_free(const Framework& f, const ArgumentSet& s) {
    return detail::conflict_free(f, f.membership(s));
}

bool defends(const Framework& f, const ArgumentSet& s, std::string_view x) {
    ArgId target = f.id(x);
    auto attacked = detail::attacked_by(f, f.membership(s));
    auto att = f.attackers(target);
    return std::all_of(att.begin(), att.end(), [&](ArgId a) { return attacked[a] != 0; });
}

namespace {

// Calls visit(candidate) for every superset of `base` within `free` positions.
// Returns true as soon as visit does.
template <class Visit>
bool any_extension_of(const Membership& base, const std::vector<ArgId>& free, Visit&& visit) {
    Membership cand = base;
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (std::size_t i = 0; i < free.size(); ++i) cand[free[i]] = (bits >> i) & 1U;
        if (visit(cand)) return true;
    }
    return false;
}

void check_free(std::size_t count, std::size_t limit) {
    if (count > limit)
        throw GuardExceeded("satisfies: " + std::to_string(count) +
                            " free arguments exceed the enumeration limit " + std::to_string(limit));
}

bool strict_subset(const Membership& a, const Membership& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) return false;
        if (!a[i] && b[i]) strict = true;
    }
    return strict;
}

} // namespace

bool satisfies(const Framework& f, const ArgumentSet& s, Semantics sigma,
               std::size_t max_free_arguments) {
    const Membership m = f.membership(s);
    if (!detail::conflict_free(f, m)) return false;

    switch (sigma) {
    case Semantics::Adm: return detail::admissible(f, m);
    case Semantics::Com: return detail::complete(f, m);
    case Semantics::Stb: {
        auto r = detail::range_of(f, m);
        return std::all_of(r.begin(), r.end(), [](char c) { return c != 0; });
    }
    case Semantics::Prf: {
        if (!detail::admissible(f, m)) return false;
        std::vector<ArgId> free;
        for (ArgId x = 0; x < f.size(); ++x)
            if (!m[x]) free.push_back(x);
        check_free(free.size(), max_free_arguments);
        return !any_extension_of(m, free, [&](const Membership& t) {
            return t != m && detail::admissible(f, t);
        });
    }
    case Semantics::Sem: {
        if (!detail::admissible(f, m)) return false;
        check_free(f.size(), max_free_arguments);
        std::vector<ArgId> every(f.size());
        for (ArgId x = 0; x < f.size(); ++x) every[x] = x;
        const auto r = detail::range_of(f, m);
        return !any_extension_of(Membership(f.size(), 0), every, [&](const Membership& t) {
            return detail::admissible(f, t) && strict_subset(r, detail::range_of(f, t));
        });
    }
    }
    return false;
}

} // namespace afbd
