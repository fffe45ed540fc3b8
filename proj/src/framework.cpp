#include "afbd/framework.hpp"

#include "afbd/error.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace afbd {

bool is_valid_argument_name(std::string_view name) {
    if (name.empty()) return false;
    return std::none_of(name.begin(), name.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',';
    });
}

// ---------------------------------------------------------------------------
// ArgumentSet
// ---------------------------------------------------------------------------

ArgumentSet::ArgumentSet(std::initializer_list<std::string> names)
    : ArgumentSet(std::vector<std::string>(names)) {}

ArgumentSet::ArgumentSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

bool ArgumentSet::contains(std::string_view name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
}

bool ArgumentSet::is_subset_of(const ArgumentSet& other) const {
    return std::includes(other.names_.begin(), other.names_.end(), names_.begin(), names_.end());
}

std::strong_ordering operator<=>(const ArgumentSet& a, const ArgumentSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.names_ <=> b.names_;
}

ArgumentSet set_union(const ArgumentSet& a, const ArgumentSet& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return ArgumentSet(std::move(out));
}

ArgumentSet set_difference(const ArgumentSet& a, const ArgumentSet& b) {
    std::vector<std::string> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return ArgumentSet(std::move(out));
}

std::string to_string(const ArgumentSet& s) {
    std::string out;
    for (const auto& n : s) {
        if (!out.empty()) out += ',';
        out += n;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Framework
// ---------------------------------------------------------------------------

std::optional<ArgId> Framework::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ArgId Framework::id(std::string_view name) const {
    if (auto found = find(name)) return *found;
    throw DomainError("unknown argument `" + std::string(name) + "`");
}

bool Framework::attacks(ArgId from, ArgId to) const {
    return attack_keys_.contains(key(from, to));
}

bool Framework::attacks(std::string_view from, std::string_view to) const {
    auto a = find(from);
    auto b = find(to);
    return a && b && attacks(*a, *b);
}

ArgumentSet Framework::all() const { return ArgumentSet(names_); }

Membership Framework::membership(const ArgumentSet& s) const {
    Membership m(size(), 0);
    for (const auto& n : s) m[id(n)] = 1;
    return m;
}

ArgumentSet Framework::to_set(const Membership& m) const {
    std::vector<std::string> out;
    for (ArgId i = 0; i < size(); ++i)
        if (m[i]) out.push_back(names_[i]);
    return ArgumentSet(std::move(out));
}

bool operator==(const Framework& a, const Framework& b) {
    if (a.names_ != b.names_ || a.attacks_.size() != b.attacks_.size()) return false;
    // Same names in the same order give the same ids.
    return std::all_of(a.attacks_.begin(), a.attacks_.end(),
                       [&](const auto& e) { return b.attacks(e.first, e.second); });
}

ArgId FrameworkBuilder::add_argument(std::string name) {
    if (!is_valid_argument_name(name))
        throw DomainError("invalid argument name `" + name + "`");
    if (f_.contains(name)) throw DomainError("duplicate argument `" + name + "`");
    auto id = static_cast<ArgId>(f_.names_.size());
    f_.index_.emplace(name, id);
    f_.names_.push_back(std::move(name));
    f_.attackers_.emplace_back();
    f_.targets_.emplace_back();
    return id;
}

bool FrameworkBuilder::add_attack(std::string_view from, std::string_view to) {
    return add_attack(f_.id(from), f_.id(to));
}

bool FrameworkBuilder::add_attack(ArgId from, ArgId to) {
    if (from >= f_.size() || to >= f_.size()) throw DomainError("attack endpoint out of range");
    if (!f_.attack_keys_.insert(Framework::key(from, to)).second) return false;
    f_.attacks_.emplace_back(from, to);
    f_.targets_[from].push_back(to);
    f_.attackers_[to].push_back(from);
    return true;
}

Framework make_framework(const std::vector<std::string>& arguments,
                         const std::vector<std::pair<std::string, std::string>>& attacks) {
    FrameworkBuilder b;
    for (const auto& a : arguments) b.add_argument(a);
    for (const auto& [x, y] : attacks) b.add_attack(x, y);
    return std::move(b).build();
}

Framework induced(const Framework& f, const Membership& keep) {
    FrameworkBuilder b;
    std::vector<ArgId> remap(f.size(), 0);
    for (ArgId i = 0; i < f.size(); ++i)
        if (keep[i]) remap[i] = b.add_argument(f.name(i));
    for (const auto& [x, y] : f.attack_list())
        if (keep[x] && keep[y]) b.add_attack(remap[x], remap[y]);
    return std::move(b).build();
}

Framework remove(const Framework& f, const ArgumentSet& removed) {
    Membership keep = f.membership(removed);
    for (auto& k : keep) k = !k;
    return induced(f, keep);
}

} // namespace afbd
