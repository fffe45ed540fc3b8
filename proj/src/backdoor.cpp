#include "afbd/backdoor.hpp"

#include "afbd/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace afbd {

namespace {

// An obstruction is a set of arguments at least one of which every backdoor
// must contain (given what is already removed). Empty means "in the class".
using ObstructionFinder = std::function<std::vector<ArgId>(const Membership& removed)>;

// Exact bounded-depth branching over obstructions with iterative deepening.
//
// Branch i of an obstruction (v1..vr) removes vi and forbids v1..v(i-1);
// every backdoor is reached in exactly the branch of its first obstruction
// vertex, so at the first depth that succeeds the leaves are all minimum
// backdoors and the lexicographically least one can be picked.
class BranchingSearch {
public:
    BranchingSearch(const Framework& f, ObstructionFinder find)
        : f_(f), find_(std::move(find)), forbidden_(f.size(), 0) {}

    std::optional<ArgumentSet> run(Membership removed, std::size_t max_extra) {
        for (std::size_t depth = 0; depth <= max_extra; ++depth) {
            best_.reset();
            branch(removed, depth);
            if (best_) return best_;
        }
        return std::nullopt;
    }

private:
    void branch(Membership& removed, std::size_t remaining) {
        auto obstruction = find_(removed);
        if (obstruction.empty()) {
            auto candidate = f_.to_set(removed);
            if (!best_ || candidate < *best_) best_ = std::move(candidate);
            return;
        }
        if (remaining == 0) return;
        std::vector<ArgId> newly_forbidden;
        for (ArgId v : obstruction) {
            if (forbidden_[v]) continue;
            removed[v] = 1;
            branch(removed, remaining - 1);
            removed[v] = 0;
            forbidden_[v] = 1;
            newly_forbidden.push_back(v);
        }
        for (ArgId v : newly_forbidden) forbidden_[v] = 0;
    }

    const Framework& f_;
    ObstructionFinder find_;
    Membership forbidden_;
    std::optional<ArgumentSet> best_;
};

std::optional<Backdoor> finish(std::optional<ArgumentSet> members, FragmentClass c) {
    if (!members) return std::nullopt;
    return Backdoor{std::move(*members), c, true};
}

// Shortest directed cycle among non-removed arguments, as a vertex list.
std::vector<ArgId> shortest_cycle(const Framework& f, const Membership& removed) {
    const std::size_t n = f.size();
    for (ArgId v = 0; v < n; ++v)
        if (!removed[v] && f.attacks(v, v)) return {v};

    std::vector<ArgId> best;
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(n);
    std::vector<ArgId> parent(n);
    std::deque<ArgId> queue;
    for (ArgId root = 0; root < n; ++root) {
        if (removed[root]) continue;
        std::fill(dist.begin(), dist.end(), unseen);
        dist[root] = 0;
        queue.assign(1, root);
        while (!queue.empty()) {
            ArgId x = queue.front();
            queue.pop_front();
            if (!best.empty() && dist[x] + 1 >= best.size()) break;
            for (ArgId y : f.targets(x)) {
                if (removed[y]) continue;
                if (y == root) {
                    std::vector<ArgId> cycle;
                    for (ArgId u = x; u != root; u = parent[u]) cycle.push_back(u);
                    cycle.push_back(root);
                    std::reverse(cycle.begin(), cycle.end());
                    best = std::move(cycle);
                    if (best.size() == 2) return best;
                    queue.clear();
                    break;
                }
                if (dist[y] != unseen) continue;
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    return best;
}

// An odd cycle of the undirected attack graph among non-removed arguments,
// found as a BFS-tree conflict edge closed through the lowest common ancestor.
std::vector<ArgId> odd_cycle(const Framework& f, const Membership& removed) {
    const std::size_t n = f.size();
    std::vector<int> color(n, -1);
    std::vector<ArgId> parent(n);
    std::vector<std::size_t> depth(n, 0);
    std::deque<ArgId> queue;
    for (ArgId root = 0; root < n; ++root) {
        if (removed[root] || color[root] != -1) continue;
        color[root] = 0;
        parent[root] = root;
        queue.assign(1, root);
        while (!queue.empty()) {
            ArgId x = queue.front();
            queue.pop_front();
            for (auto neighbours : {f.attackers(x), f.targets(x)}) {
                for (ArgId y : neighbours) {
                    if (removed[y]) continue;
                    if (color[y] == -1) {
                        color[y] = 1 - color[x];
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                        continue;
                    }
                    if (color[y] != color[x]) continue;
                    if (x == y) return {x};
                    std::vector<ArgId> left{x}, right{y};
                    ArgId a = x, b = y;
                    while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                    while (a != b) {
                        left.push_back(a = parent[a]);
                        right.push_back(b = parent[b]);
                    }
                    right.pop_back(); // common ancestor already in `left`
                    left.insert(left.end(), right.rbegin(), right.rend());
                    return left;
                }
            }
        }
    }
    return {};
}

} // namespace

std::optional<Backdoor> detect_bruteforce(const Framework& f, FragmentClass c, std::size_t max_size) {
    const std::size_t n = f.size();
    std::vector<ArgId> order(n);
    std::iota(order.begin(), order.end(), ArgId{0});
    std::sort(order.begin(), order.end(), [&](ArgId a, ArgId b) { return f.name(a) < f.name(b); });

    // Combinations of positions in `order`, generated lexicographically, give
    // member lists in lexicographic order too.
    for (std::size_t size = 0; size <= std::min(max_size, n); ++size) {
        std::vector<std::size_t> pick(size);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        while (true) {
            Membership keep(n, 1);
            for (auto p : pick) keep[order[p]] = 0;
            if (recognize(induced(f, keep), c)) {
                Membership removed(n, 0);
                for (auto p : pick) removed[order[p]] = 1;
                return Backdoor{f.to_set(removed), c, true};
            }
            // Advance to the next combination.
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<Backdoor> detect_sym(const Framework& f, std::size_t max_size) {
    BranchingSearch search(f, [&](const Membership& removed) -> std::vector<ArgId> {
        for (const auto& [x, y] : f.attack_list())
            if (x != y && !removed[x] && !removed[y] && !f.attacks(y, x)) return {x, y};
        return {};
    });
    return finish(search.run(Membership(f.size(), 0), max_size), FragmentClass::Sym);
}

std::optional<Backdoor> detect_bip(const Framework& f, std::size_t max_size) {
    Membership forced(f.size(), 0);
    std::size_t self_attackers = 0;
    for (ArgId x = 0; x < f.size(); ++x)
        if (f.attacks(x, x)) {
            forced[x] = 1;
            ++self_attackers;
        }
    if (self_attackers > max_size) return std::nullopt;
    BranchingSearch search(f, [&](const Membership& removed) { return odd_cycle(f, removed); });
    return finish(search.run(std::move(forced), max_size - self_attackers), FragmentClass::Bip);
}

std::optional<Backdoor> detect_acyc(const Framework& f, std::size_t max_size) {
    BranchingSearch search(f, [&](const Membership& removed) { return shortest_cycle(f, removed); });
    return finish(search.run(Membership(f.size(), 0), max_size), FragmentClass::Acyc);
}

std::optional<Backdoor> detect(const Framework& f, FragmentClass c, std::size_t max_size) {
    switch (c) {
    case FragmentClass::Acyc: return detect_acyc(f, max_size);
    case FragmentClass::Sym: return detect_sym(f, max_size);
    case FragmentClass::Bip: return detect_bip(f, max_size);
    case FragmentClass::Noeven: return detect_bruteforce(f, c, max_size);
    }
    return std::nullopt;
}

std::size_t distance(const Framework& f, FragmentClass c) {
    // Every detector deepens from size 0, so the first hit is the distance;
    // the empty framework belongs to every class, so |X| always suffices.
    auto found = detect(f, c, f.size());
    if (!found) throw Error("distance: no backdoor of size |X| found");
    return found->members.size();
}

} // namespace afbd
