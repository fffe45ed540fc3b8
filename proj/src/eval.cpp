#include "afbd/eval.hpp"

#include "afbd/error.hpp"

#include <algorithm>

namespace afbd {

EvenCycleFreeSubSolver::EvenCycleFreeSubSolver(FragmentClass c) : class_(c) {
    if (c != FragmentClass::Acyc && c != FragmentClass::Noeven)
        throw Unsupported("backdoor evaluation supports only acyc and noeven, not " +
                          std::string(to_string(c)));
}

ExtensionSet EvenCycleFreeSubSolver::admissible(const Framework& g) const {
    if (!recognize(g, class_))
        throw Unsupported("framework with " + std::to_string(g.size()) + " arguments is not in " +
                          std::string(to_string(class_)));
    return ExtensionSet{ArgumentSet{}};
}

std::vector<PartialLabeling> backdoor_labelings(const ArgumentSet& backdoor) {
    constexpr Label digits[] = {Label::In, Label::Out, Label::Und};
    const auto& members = backdoor.names();
    std::size_t count = 1;
    for (std::size_t i = 0; i < members.size(); ++i) count *= 3;

    std::vector<PartialLabeling> out;
    out.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        PartialLabeling l;
        std::size_t rest = code;
        for (std::size_t i = members.size(); i-- > 0;) {
            l.set(members[i], digits[rest % 3]);
            rest /= 3;
        }
        out.push_back(std::move(l));
    }
    return out;
}

ExtensionSet com_star(const Framework& f, const PartialLabeling& l, const AdmissibleSubSolver& sub) {
    const auto propagated = propagate(f, l);
    const auto base = propagated.in();
    const auto admissible = sub.admissible(remove(f, propagated.domain()));
    std::vector<ArgumentSet> out;
    out.reserve(admissible.size());
    for (const auto& s : admissible) out.push_back(set_union(base, s));
    return ExtensionSet(std::move(out));
}

ExtensionSet com_star_all(const Framework& f, const ArgumentSet& backdoor, const AdmissibleSubSolver& sub) {
    std::vector<ArgumentSet> out;
    for (const auto& l : backdoor_labelings(backdoor)) {
        auto part = com_star(f, l, sub);
        out.insert(out.end(), part.begin(), part.end());
    }
    return ExtensionSet(std::move(out));
}

ExtensionSet complete_via_backdoor(const Framework& f, const ArgumentSet& backdoor,
                                   const AdmissibleSubSolver& sub) {
    std::vector<ArgumentSet> out;
    for (const auto& s : com_star_all(f, backdoor, sub))
        if (satisfies(f, s, Semantics::Com)) out.push_back(s);
    return ExtensionSet(std::move(out));
}

ExtensionSet select_from_complete(const Framework& f, const ExtensionSet& complete, Semantics sigma) {
    const auto& sets = complete.sets();
    std::vector<ArgumentSet> out;
    switch (sigma) {
    case Semantics::Com: return complete;
    case Semantics::Adm: throw Unsupported("admissible sets are not derived from complete extensions");
    case Semantics::Prf:
        for (const auto& s : sets) {
            bool maximal = std::none_of(sets.begin(), sets.end(), [&](const ArgumentSet& t) {
                return t.size() > s.size() && s.is_subset_of(t);
            });
            if (maximal) out.push_back(s);
        }
        break;
    case Semantics::Sem: {
        std::vector<ArgumentSet> ranges;
        for (const auto& s : sets) ranges.push_back(range(f, s));
        for (std::size_t i = 0; i < sets.size(); ++i) {
            bool maximal = std::none_of(ranges.begin(), ranges.end(), [&](const ArgumentSet& r) {
                return r.size() > ranges[i].size() && ranges[i].is_subset_of(r);
            });
            if (maximal) out.push_back(sets[i]);
        }
        break;
    }
    case Semantics::Stb:
        for (const auto& s : sets)
            if (range(f, s).size() == f.size()) out.push_back(s);
        break;
    }
    return ExtensionSet(std::move(out));
}

ExtensionSet extensions_via_backdoor(const Framework& f, const ArgumentSet& backdoor,
                                     const AdmissibleSubSolver& sub, Semantics sigma) {
    if (sigma == Semantics::Adm)
        throw Unsupported("admissible extensions cannot be enumerated through a backdoor");
    return select_from_complete(f, complete_via_backdoor(f, backdoor, sub), sigma);
}

namespace {

Backdoor detect_or_throw(const Framework& f, FragmentClass c, std::size_t max_size) {
    auto found = detect(f, c, max_size);
    if (!found)
        throw BudgetExceeded("no " + std::string(to_string(c)) + " backdoor of size <= " +
                             std::to_string(max_size) + "; the distance exceeds the budget");
    return std::move(*found);
}

} // namespace

ExtensionSet extensions_with_detection(const Framework& f, Semantics sigma, FragmentClass c,
                                       std::size_t max_size) {
    EvenCycleFreeSubSolver sub(c);
    if (sigma == Semantics::Adm)
        throw Unsupported("admissible extensions cannot be enumerated through a backdoor");
    auto backdoor = detect_or_throw(f, c, max_size);
    return extensions_via_backdoor(f, backdoor.members, sub, sigma);
}

AcceptanceResult decide_via_backdoor(const Framework& f, AcceptanceMode mode, Semantics sigma,
                                     std::string_view arg, FragmentClass c, std::size_t max_size) {
    EvenCycleFreeSubSolver sub(c);
    f.id(arg);
    AcceptanceResult result;
    result.backdoor = detect_or_throw(f, c, max_size);

    if (sigma == Semantics::Adm) {
        if (mode == AcceptanceMode::Skeptical) {
            result.witness = ArgumentSet{};
            return result;
        }
        // Every admissible set lies inside a complete one and vice versa.
        sigma = Semantics::Com;
    }

    const auto extensions = extensions_via_backdoor(f, result.backdoor.members, sub, sigma);
    if (mode == AcceptanceMode::Credulous) {
        auto it = std::find_if(extensions.begin(), extensions.end(),
                               [&](const ArgumentSet& s) { return s.contains(arg); });
        result.accepted = it != extensions.end();
        if (result.accepted) result.witness = *it;
    } else {
        auto it = std::find_if(extensions.begin(), extensions.end(),
                               [&](const ArgumentSet& s) { return !s.contains(arg); });
        result.accepted = it == extensions.end();
        if (!result.accepted) result.witness = *it;
    }
    return result;
}

bool credulous(const Framework& f, Semantics sigma, std::string_view arg, FragmentClass c,
               std::size_t max_size) {
    return decide_via_backdoor(f, AcceptanceMode::Credulous, sigma, arg, c, max_size).accepted;
}

bool skeptical(const Framework& f, Semantics sigma, std::string_view arg, FragmentClass c,
               std::size_t max_size) {
    return decide_via_backdoor(f, AcceptanceMode::Skeptical, sigma, arg, c, max_size).accepted;
}

} // namespace afbd
