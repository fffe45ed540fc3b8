#include "afbd/oracle.hpp"

#include "afbd/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace afbd {

ExtensionSet::ExtensionSet(std::initializer_list<ArgumentSet> sets)
    : ExtensionSet(std::vector<ArgumentSet>(sets)) {}

ExtensionSet::ExtensionSet(std::vector<ArgumentSet> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool ExtensionSet::contains(const ArgumentSet& s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s);
}

bool ExtensionSet::is_subset_of(const ExtensionSet& other) const {
    return std::all_of(sets_.begin(), sets_.end(), [&](const auto& s) { return other.contains(s); });
}

bool ExtensionSet::any_contains(std::string_view arg) const {
    return std::any_of(sets_.begin(), sets_.end(), [&](const auto& s) { return s.contains(arg); });
}

bool ExtensionSet::all_contain(std::string_view arg) const {
    return std::all_of(sets_.begin(), sets_.end(), [&](const auto& s) { return s.contains(arg); });
}

std::string to_string(const ExtensionSet& e) {
    std::string out;
    for (const auto& s : e) out += to_string(s) + "\n";
    return out;
}

namespace {

using Mask = std::uint64_t;

struct MaskGraph {
    std::size_t n = 0;
    std::vector<Mask> attackers;
    std::vector<Mask> targets;
};

MaskGraph to_masks(const Framework& f) {
    MaskGraph g{f.size(), std::vector<Mask>(f.size(), 0), std::vector<Mask>(f.size(), 0)};
    for (const auto& [x, y] : f.attack_list()) {
        g.targets[x] |= Mask{1} << y;
        g.attackers[y] |= Mask{1} << x;
    }
    return g;
}

struct Candidate {
    Mask set;
    Mask range;
    bool complete;
};

// All admissible sets, each tagged with its range and completeness.
std::vector<Candidate> admissible_sets(const MaskGraph& g) {
    std::vector<Candidate> out;
    const Mask total = Mask{1} << g.n;
    for (Mask s = 0; s < total; ++s) {
        Mask attacked = 0;
        for (Mask rest = s; rest; rest &= rest - 1) attacked |= g.targets[std::countr_zero(rest)];
        if (attacked & s) continue;
        Mask defended = 0;
        for (std::size_t x = 0; x < g.n; ++x)
            if ((g.attackers[x] & ~attacked) == 0) defended |= Mask{1} << x;
        if ((s & ~defended) != 0) continue;
        out.push_back({s, s | attacked, s == defended});
    }
    return out;
}

bool strict_subset(Mask a, Mask b) { return (a & ~b) == 0 && a != b; }

// The inclusion-maximal members of `masks`. Scanning by decreasing size means a
// mask is maximal iff no already-kept mask contains it.
std::vector<Mask> maximal_elements(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> kept;
    for (Mask m : masks)
        if (std::none_of(kept.begin(), kept.end(), [&](Mask k) { return strict_subset(m, k); }))
            kept.push_back(m);
    return kept;
}

ArgumentSet to_argument_set(const Framework& f, Mask m) {
    std::vector<std::string> names;
    for (Mask rest = m; rest; rest &= rest - 1) names.push_back(f.name(static_cast<ArgId>(std::countr_zero(rest))));
    return ArgumentSet(std::move(names));
}

} // namespace

ExtensionSet enumerate_oracle(const Framework& f, Semantics sigma, std::size_t guard) {
    guard = std::min(guard, max_oracle_guard);
    if (f.size() > guard)
        throw GuardExceeded("oracle refuses " + std::to_string(f.size()) +
                            " arguments (guard " + std::to_string(guard) + ")");

    const MaskGraph g = to_masks(f);
    const Mask everything = g.n == 0 ? 0 : (~Mask{0} >> (64 - g.n));
    const auto adm = admissible_sets(g);

    std::vector<Mask> chosen;
    switch (sigma) {
    case Semantics::Adm:
        for (const auto& c : adm) chosen.push_back(c.set);
        break;
    case Semantics::Com:
        for (const auto& c : adm)
            if (c.complete) chosen.push_back(c.set);
        break;
    case Semantics::Stb:
        for (const auto& c : adm)
            if (c.range == everything) chosen.push_back(c.set);
        break;
    case Semantics::Prf: {
        std::vector<Mask> sets;
        for (const auto& c : adm) sets.push_back(c.set);
        chosen = maximal_elements(std::move(sets));
        break;
    }
    case Semantics::Sem: {
        std::vector<Mask> ranges;
        for (const auto& c : adm) ranges.push_back(c.range);
        const auto maximal = maximal_elements(std::move(ranges));
        for (const auto& c : adm)
            if (std::find(maximal.begin(), maximal.end(), c.range) != maximal.end()) chosen.push_back(c.set);
        break;
    }
    }

    std::vector<ArgumentSet> sets;
    sets.reserve(chosen.size());
    for (Mask m : chosen) sets.push_back(to_argument_set(f, m));
    return ExtensionSet(std::move(sets));
}

bool credulous_oracle(const Framework& f, Semantics sigma, std::string_view arg, std::size_t guard) {
    f.id(arg);
    return enumerate_oracle(f, sigma, guard).any_contains(arg);
}

bool skeptical_oracle(const Framework& f, Semantics sigma, std::string_view arg, std::size_t guard) {
    f.id(arg);
    return enumerate_oracle(f, sigma, guard).all_contain(arg);
}

} // namespace afbd
