#pragma once

#include "afbd/backdoor.hpp"
#include "afbd/fragments.hpp"
#include "afbd/framework.hpp"
#include "afbd/labeling.hpp"
#include "afbd/oracle.hpp"
#include "afbd/semantics.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace afbd {

/// Computes the admissible sets of frameworks drawn from one fully tractable
/// class. Evaluation only ever hands it frameworks in which every argument
/// has an attacker, so adm(residual(G)) = adm(G).
class AdmissibleSubSolver {
public:
    virtual ~AdmissibleSubSolver() = default;
    /// Throws Unsupported if `g` is outside the solver's class.
    virtual ExtensionSet admissible(const Framework& g) const = 0;
};

/// Strategy for Acyc and Noeven. In the residual of a framework without even
/// cycles every argument lies on a directed cycle, and such a framework has
/// the empty set as its only admissible set, so the answer is always {∅}.
class EvenCycleFreeSubSolver final : public AdmissibleSubSolver {
public:
    /// Only Acyc and Noeven; anything else throws Unsupported.
    explicit EvenCycleFreeSubSolver(FragmentClass c);
    FragmentClass fragment() const noexcept { return class_; }
    ExtensionSet admissible(const Framework& g) const override;

private:
    FragmentClass class_;
};

/// The 3^|B| labelings of `backdoor`, as a base-3 counter over the members
/// in canonical order (first member most significant) with in < out < und.
std::vector<PartialLabeling> backdoor_labelings(const ArgumentSet& backdoor);

/// { in(propagated) ∪ S : S admissible in F minus the propagated domain }.
ExtensionSet com_star(const Framework& f, const PartialLabeling& l, const AdmissibleSubSolver& sub);

/// Union of com_star over every labeling of `backdoor`. A superset of the
/// complete extensions whenever `backdoor` leads into the sub-solver's class.
ExtensionSet com_star_all(const Framework& f, const ArgumentSet& backdoor, const AdmissibleSubSolver& sub);

/// com(F): com_star_all filtered by a from-scratch completeness test.
ExtensionSet complete_via_backdoor(const Framework& f, const ArgumentSet& backdoor,
                                   const AdmissibleSubSolver& sub);

/// com, prf, sem or stb derived from complete_via_backdoor; ADM throws
/// Unsupported.
ExtensionSet extensions_via_backdoor(const Framework& f, const ArgumentSet& backdoor,
                                     const AdmissibleSubSolver& sub, Semantics sigma);

/// Derives prf/sem/stb (or returns com unchanged) from the complete extensions.
ExtensionSet select_from_complete(const Framework& f, const ExtensionSet& complete, Semantics sigma);

enum class AcceptanceMode { Credulous, Skeptical };

struct AcceptanceResult {
    bool accepted = false;
    /// An extension containing the argument (credulous, accepted) or one
    /// missing it (skeptical, rejected).
    std::optional<ArgumentSet> witness;
    Backdoor backdoor;
};

/// Detect a backdoor into `c` (Acyc or Noeven) of size <= max_size, evaluate
/// it, and decide acceptance. ADM credulous is answered through COM; ADM
/// skeptical is always rejected with the empty extension as witness.
/// Throws BudgetExceeded when no backdoor fits in max_size, DomainError on an
/// unknown argument and Unsupported for Sym/Bip.
AcceptanceResult decide_via_backdoor(const Framework& f, AcceptanceMode mode, Semantics sigma,
                                     std::string_view arg, FragmentClass c, std::size_t max_size);

bool credulous(const Framework& f, Semantics sigma, std::string_view arg, FragmentClass c,
               std::size_t max_size);
bool skeptical(const Framework& f, Semantics sigma, std::string_view arg, FragmentClass c,
               std::size_t max_size);

/// Detect-then-evaluate extension enumeration (sigma != ADM). Throws like
/// decide_via_backdoor.
ExtensionSet extensions_with_detection(const Framework& f, Semantics sigma, FragmentClass c,
                                       std::size_t max_size);

} // namespace afbd
