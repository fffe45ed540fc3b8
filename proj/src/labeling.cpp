#include "afbd/labeling.hpp"

#include "afbd/error.hpp"
#include "afbd/semantics.hpp"

#include <vector>

namespace afbd {

std::string_view to_string(Label l) {
    switch (l) {
    case Label::In: return "in";
    case Label::Out: return "out";
    case Label::Und: return "und";
    }
    return "?";
}

std::optional<Label> PartialLabeling::get(std::string_view arg) const {
    auto it = labels_.find(arg);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

ArgumentSet PartialLabeling::with(Label l) const {
    std::vector<std::string> out;
    for (const auto& [name, label] : labels_)
        if (label == l) out.push_back(name);
    return ArgumentSet(std::move(out));
}

ArgumentSet PartialLabeling::domain() const {
    std::vector<std::string> out;
    for (const auto& entry : labels_) out.push_back(entry.first);
    return ArgumentSet(std::move(out));
}

std::string dump(const PartialLabeling& l) {
    std::string out;
    for (const auto& [name, label] : l) {
        out += name;
        out += '=';
        out += to_string(label);
        out += '\n';
    }
    return out;
}

PartialLabeling labeling_from_set(const Framework& f, const ArgumentSet& s) {
    const auto members = f.membership(s);
    const auto r = detail::range_of(f, members);
    PartialLabeling l;
    for (ArgId x = 0; x < f.size(); ++x)
        l.set(f.name(x), members[x] ? Label::In : r[x] ? Label::Out : Label::Und);
    return l;
}

bool compatible(const Framework& f, const PartialLabeling& l, const ArgumentSet& s) {
    const auto reference = labeling_from_set(f, s);
    for (const auto& [name, label] : l) {
        f.id(name);
        if (reference.get(name) != label) return false;
    }
    return true;
}

namespace {

// Work-queue fixpoint. Labels only ever get added, and each rule's premise
// stays true once it holds, so the result does not depend on queue order.
class Propagation {
public:
    explicit Propagation(const Framework& f)
        : f_(f), label_(f.size()), in_(f.size(), 0), out_(f.size(), 0), und_(f.size(), 0) {}

    void seed(ArgId x, Label l) {
        label_[x] = l;
        notify(x, l);
    }

    void run() {
        for (ArgId x = 0; x < f_.size(); ++x)
            if (!label_[x]) queue_.push_back(x);
        while (!queue_.empty()) {
            ArgId x = queue_.back();
            queue_.pop_back();
            if (label_[x]) continue;
            if (auto l = rule(x)) {
                label_[x] = *l;
                notify(x, *l);
            }
        }
    }

    const std::vector<std::optional<Label>>& labels() const { return label_; }

private:
    std::optional<Label> rule(ArgId x) const {
        const std::size_t attackers = f_.attackers(x).size();
        if (in_[x] > 0) return Label::Out;
        if (out_[x] == attackers) return Label::In;
        if (und_[x] > 0 && out_[x] + und_[x] == attackers) return Label::Und;
        return std::nullopt;
    }

    void notify(ArgId x, Label l) {
        for (ArgId t : f_.targets(x)) {
            auto& counter = l == Label::In ? in_ : l == Label::Out ? out_ : und_;
            ++counter[t];
            if (!label_[t]) queue_.push_back(t);
        }
    }

    const Framework& f_;
    std::vector<std::optional<Label>> label_;
    std::vector<std::size_t> in_, out_, und_;
    std::vector<ArgId> queue_;
};

} // namespace

PartialLabeling propagate(const Framework& f, const PartialLabeling& l) {
    Propagation p(f);
    for (const auto& [name, label] : l) p.seed(f.id(name), label);
    p.run();
    PartialLabeling out;
    const auto& labels = p.labels();
    for (ArgId x = 0; x < f.size(); ++x)
        if (labels[x]) out.set(f.name(x), *labels[x]);
    return out;
}

Framework residual(const Framework& f) {
    return remove(f, propagate(f, PartialLabeling{}).domain());
}

} // namespace afbd
