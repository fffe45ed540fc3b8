#include "afbd/fragments.hpp"

#include "afbd/error.hpp"

#include <algorithm>
#include <deque>

namespace afbd {

std::string_view to_string(FragmentClass c) {
    switch (c) {
    case FragmentClass::Acyc: return "acyc";
    case FragmentClass::Noeven: return "noeven";
    case FragmentClass::Sym: return "sym";
    case FragmentClass::Bip: return "bip";
    }
    return "?";
}

std::optional<FragmentClass> parse_fragment_class(std::string_view text) {
    for (auto c : all_fragment_classes)
        if (to_string(c) == text) return c;
    return std::nullopt;
}

bool is_acyclic(const Framework& f) {
    // Kahn: a cycle leaves vertices with positive in-degree behind.
    std::vector<std::size_t> indegree(f.size());
    for (ArgId x = 0; x < f.size(); ++x) indegree[x] = f.attackers(x).size();
    std::vector<ArgId> ready;
    for (ArgId x = 0; x < f.size(); ++x)
        if (indegree[x] == 0) ready.push_back(x);
    std::size_t seen = 0;
    while (!ready.empty()) {
        ArgId x = ready.back();
        ready.pop_back();
        ++seen;
        for (ArgId t : f.targets(x))
            if (--indegree[t] == 0) ready.push_back(t);
    }
    return seen == f.size();
}

bool is_symmetric(const Framework& f) {
    const auto& attacks = f.attack_list();
    return std::all_of(attacks.begin(), attacks.end(),
                       [&](const auto& e) { return f.attacks(e.second, e.first); });
}

bool is_bipartite(const Framework& f) {
    std::vector<int> color(f.size(), -1);
    std::deque<ArgId> queue;
    for (ArgId root = 0; root < f.size(); ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            ArgId x = queue.front();
            queue.pop_front();
            for (auto neighbours : {f.attackers(x), f.targets(x)}) {
                for (ArgId y : neighbours) {
                    if (color[y] == -1) {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if (color[y] == color[x]) {
                        return false; // includes self-attacks
                    }
                }
            }
        }
    }
    return true;
}

namespace {

// Tarjan's algorithm, iterative. Returns a component index per argument.
std::vector<std::size_t> strong_components(const Framework& f) {
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    const std::size_t n = f.size();
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<char> on_stack(n, 0);
    std::vector<ArgId> stack;
    std::vector<std::pair<ArgId, std::size_t>> call; // vertex, next edge
    std::size_t counter = 0, components = 0;

    for (ArgId root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge == 0 && index[v] == unvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            auto succ = f.targets(v);
            if (edge < succ.size()) {
                ArgId w = succ[edge++];
                if (index[w] == unvisited) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                ArgId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = components;
                } while (w != v);
                ++components;
            }
            ArgId done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    return comp;
}

class EvenCycleSearch {
public:
    EvenCycleSearch(const Framework& f, std::uint64_t budget)
        : f_(f), budget_(budget), comp_(strong_components(f)), on_path_(f.size(), 0),
          mark_(f.size(), 0) {}

    bool run() {
        // A 2-cycle is the shortest even cycle and very common.
        for (const auto& [x, y] : f_.attack_list())
            if (x != y && f_.attacks(y, x)) return true;
        for (ArgId s = 0; s < f_.size(); ++s)
            if (from(s)) return true;
        return false;
    }

private:
    bool allowed(ArgId start, ArgId v) const { return v > start && comp_[v] == comp_[start]; }

    // Can `start` be reached from `v` through allowed vertices off the path?
    bool can_close(ArgId start, ArgId v) {
        ++epoch_;
        std::vector<ArgId> frontier{v};
        mark_[v] = epoch_;
        while (!frontier.empty()) {
            ArgId x = frontier.back();
            frontier.pop_back();
            for (ArgId y : f_.targets(x)) {
                if (y == start) return true;
                if (mark_[y] == epoch_ || on_path_[y] || !allowed(start, y)) continue;
                mark_[y] = epoch_;
                frontier.push_back(y);
            }
        }
        return false;
    }

    // Simple cycles through `start` whose other vertices all exceed `start`;
    // each simple cycle is thereby visited from its smallest vertex only.
    bool from(ArgId start) {
        std::vector<std::pair<ArgId, std::size_t>> path{{start, 0}};
        on_path_[start] = 1;
        bool found = false;
        while (!path.empty() && !found) {
            auto& [v, edge] = path.back();
            auto succ = f_.targets(v);
            if (edge == succ.size()) {
                on_path_[v] = 0;
                path.pop_back();
                continue;
            }
            ArgId w = succ[edge++];
            const std::size_t length = path.size(); // edges once w is appended
            if (w == start) {
                if (length % 2 == 0) found = true;
                continue;
            }
            if (on_path_[w] || !allowed(start, w)) continue;
            if (++work_ > budget_)
                throw Inconclusive("even-cycle search exceeded its budget of " +
                                   std::to_string(budget_) + " steps");
            if (!can_close(start, w)) continue;
            on_path_[w] = 1;
            path.emplace_back(w, 0);
        }
        for (const auto& entry : path) on_path_[entry.first] = 0;
        return found;
    }

    const Framework& f_;
    std::uint64_t budget_;
    std::uint64_t work_ = 0;
    std::vector<std::size_t> comp_;
    std::vector<char> on_path_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t epoch_ = 0;
};

} // namespace

bool has_even_cycle(const Framework& f, std::uint64_t budget) {
    return EvenCycleSearch(f, budget).run();
}

bool recognize(const Framework& f, FragmentClass c, std::uint64_t even_cycle_budget) {
    switch (c) {
    case FragmentClass::Acyc: return is_acyclic(f);
    case FragmentClass::Noeven: return !has_even_cycle(f, even_cycle_budget);
    case FragmentClass::Sym: return is_symmetric(f);
    case FragmentClass::Bip: return is_bipartite(f);
    }
    return false;
}

std::vector<std::pair<std::string, std::string>> asymmetric_pairs(const Framework& f) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [x, y] : f.attack_list()) {
        if (x == y || f.attacks(y, x)) continue;
        auto a = f.name(x), b = f.name(y);
        if (b < a) std::swap(a, b);
        out.emplace_back(std::move(a), std::move(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace afbd
