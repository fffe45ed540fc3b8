#pragma once

#include "afbd/framework.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace afbd {

enum class Label { In, Out, Und };

/// "in", "out" or "und".
std::string_view to_string(Label l);

/// A labeling defined on a subset of a framework's arguments, keyed by name.
class PartialLabeling {
public:
    PartialLabeling() = default;
    PartialLabeling(std::initializer_list<std::pair<const std::string, Label>> entries)
        : labels_(entries) {}

    /// nullopt means "unlabeled", which is distinct from every Label.
    std::optional<Label> get(std::string_view arg) const;
    void set(std::string arg, Label l) { labels_[std::move(arg)] = l; }
    bool defined(std::string_view arg) const { return get(arg).has_value(); }

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    auto begin() const noexcept { return labels_.begin(); }
    auto end() const noexcept { return labels_.end(); }

    ArgumentSet in() const { return with(Label::In); }
    ArgumentSet out() const { return with(Label::Out); }
    ArgumentSet und() const { return with(Label::Und); }
    ArgumentSet domain() const;

    friend bool operator==(const PartialLabeling&, const PartialLabeling&) = default;

private:
    ArgumentSet with(Label l) const;

    std::map<std::string, Label, std::less<>> labels_;
};

/// Debug dump: one `<arg>=<in|out|und>` line per labeled argument, sorted by
/// name.
std::string dump(const PartialLabeling& l);

/// The total labeling induced by S: S is in, the arguments S attacks (outside
/// S) are out, everything else is und.
PartialLabeling labeling_from_set(const Framework& f, const ArgumentSet& s);

/// S agrees with `l` on every argument `l` labels.
bool compatible(const Framework& f, const PartialLabeling& l, const ArgumentSet& s);

/// Extends `l` to the fixpoint of:
///   an unlabeled argument with an in attacker becomes out;
///   one whose attackers are all out becomes in;
///   one whose attackers are all out or und, with at least one und, becomes und.
/// Existing labels are never revised or validated. Throws DomainError if `l`
/// labels an argument outside `f`.
PartialLabeling propagate(const Framework& f, const PartialLabeling& l);

/// F minus every argument labeled by propagating the empty labeling.
Framework residual(const Framework& f);

} // namespace afbd
