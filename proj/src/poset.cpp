#include "pert/poset.hpp"

#include "pert/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace pert {

bool is_subset(const Term& a, const Term& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SupportFamily canonical_family(SupportFamily family) {
    for (auto& t : family) {
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

std::string format_term(const Term& t) {
    std::string out = "{";
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(t[k]);
    }
    return out + "}";
}

namespace {

using Matrix = std::vector<std::vector<char>>;

std::vector<std::vector<int>> adjacency(int n, const std::vector<Arc>& arcs) {
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (const auto& a : arcs) succ[static_cast<std::size_t>(a.from - 1)].push_back(a.to);
    for (auto& s : succ) std::sort(s.begin(), s.end());
    return succ;
}

std::string format_path(const std::vector<int>& path, const char* sep = " -> ") {
    std::ostringstream os;
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (k) os << sep;
        os << path[k];
    }
    return os.str();
}

// Returns a directed cycle (first vertex repeated at the end) or empty.
std::vector<int> find_cycle(int n, const std::vector<std::vector<int>>& succ) {
    std::vector<int> colour(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> stack;
    std::vector<int> cycle;
    std::function<bool(int)> dfs = [&](int v) {
        colour[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
        for (int w : succ[static_cast<std::size_t>(v - 1)]) {
            if (colour[static_cast<std::size_t>(w)] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                cycle.push_back(w);
                return true;
            }
            if (colour[static_cast<std::size_t>(w)] == 0 && dfs(w)) return true;
        }
        stack.pop_back();
        colour[static_cast<std::size_t>(v)] = 2;
        return false;
    };
    for (int v = 1; v <= n; ++v)
        if (colour[static_cast<std::size_t>(v)] == 0 && dfs(v)) return cycle;
    return {};
}

// reach[i][j] for i,j in 0..n-1: j reachable from i by a path of length >= 1.
Matrix strict_reachability(int n, const std::vector<std::vector<int>>& succ) {
    Matrix reach(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::function<void(int)> visit = [&](int v) {
        auto& row = reach[static_cast<std::size_t>(v - 1)];
        for (int w : succ[static_cast<std::size_t>(v - 1)]) {
            if (!done[static_cast<std::size_t>(w - 1)]) visit(w);
            row[static_cast<std::size_t>(w - 1)] = 1;
            const auto& wrow = reach[static_cast<std::size_t>(w - 1)];
            for (std::size_t k = 0; k < row.size(); ++k) row[k] |= wrow[k];
        }
        done[static_cast<std::size_t>(v - 1)] = 1;
    };
    for (int v = 1; v <= n; ++v)
        if (!done[static_cast<std::size_t>(v - 1)]) visit(v);
    return reach;
}

// A path from `from` to `to` that does not use the direct arc.
std::vector<int> detour(int n, const std::vector<std::vector<int>>& succ, int from, int to) {
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    std::deque<int> queue;
    for (int w : succ[static_cast<std::size_t>(from - 1)]) {
        if (w == to) continue;
        parent[static_cast<std::size_t>(w)] = from;
        queue.push_back(w);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (int w : succ[static_cast<std::size_t>(v - 1)]) {
            if (parent[static_cast<std::size_t>(w)] == 0 && w != from) {
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

void check_arcs(int n, const std::vector<Arc>& arcs) {
    std::vector<Arc> seen;
    for (const auto& a : arcs) {
        if (a.from < 1 || a.from > n || a.to < 1 || a.to > n)
            throw Error(ErrorKind::Input, "IndexOutOfRange",
                        "arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ") outside 1.." +
                            std::to_string(n));
        if (a.from == a.to) throw Error(ErrorKind::Input, "SelfLoop", "self-loop at activity " + std::to_string(a.from));
    }
    seen = arcs;
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    if (dup != seen.end())
        throw Error(ErrorKind::Input, "DuplicateArc",
                    "duplicate arc (" + std::to_string(dup->from) + "," + std::to_string(dup->to) + ")");
}

void check_acyclic(int n, const std::vector<std::vector<int>>& succ) {
    auto cycle = find_cycle(n, succ);
    if (!cycle.empty()) throw Error(ErrorKind::Input, "CycleDetected", "cycle " + format_path(cycle));
}

} // namespace

ProjectNetwork make_network_unchecked(int n, std::vector<Arc> covers, std::vector<Rational> costs,
                                      std::vector<std::string> names) {
    ProjectNetwork net;
    net.n_ = n;
    std::sort(covers.begin(), covers.end());
    net.covers_ = std::move(covers);
    net.costs_ = std::move(costs);
    if (names.empty()) names.assign(static_cast<std::size_t>(n), std::string{});
    net.names_ = std::move(names);
    net.succ_.assign(static_cast<std::size_t>(n), {});
    net.pred_.assign(static_cast<std::size_t>(n), {});
    for (const auto& a : net.covers_) {
        net.succ_[static_cast<std::size_t>(a.from - 1)].push_back(a.to);
        net.pred_[static_cast<std::size_t>(a.to - 1)].push_back(a.from);
    }
    for (auto& s : net.succ_) std::sort(s.begin(), s.end());
    for (auto& p : net.pred_) std::sort(p.begin(), p.end());
    return net;
}

std::vector<Arc> normalize_shortcuts(int n, std::vector<Arc> arcs) {
    check_arcs(n, arcs);
    auto succ = adjacency(n, arcs);
    check_acyclic(n, succ);
    auto reach = strict_reachability(n, succ);
    std::vector<Arc> reduced;
    for (const auto& a : arcs) {
        bool redundant = false;
        for (int k : succ[static_cast<std::size_t>(a.from - 1)]) {
            if (k != a.to && reach[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(a.to - 1)]) {
                redundant = true;
                break;
            }
        }
        if (!redundant) reduced.push_back(a);
    }
    std::sort(reduced.begin(), reduced.end());
    return reduced;
}

ProjectNetwork validate_network(int n, std::vector<Arc> arcs, std::vector<Rational> costs,
                                std::vector<std::string> names, ValidateOptions options) {
    if (n < 1) throw Error(ErrorKind::Input, "BadParameters", "a network needs at least one activity");
    if (costs.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::Dimension, "DimensionMismatch",
                    "expected " + std::to_string(n) + " costs, got " + std::to_string(costs.size()));
    if (!names.empty() && names.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::Dimension, "DimensionMismatch", "names must be empty or one per activity");
    check_arcs(n, arcs);
    for (int i = 1; i <= n; ++i)
        if (sgn(costs[static_cast<std::size_t>(i - 1)]) < 0)
            throw Error(ErrorKind::Input, "NegativeCost", "activity " + std::to_string(i) + " has a negative cost");

    auto succ = adjacency(n, arcs);
    check_acyclic(n, succ);

    if (options.normalize_shortcuts) {
        arcs = normalize_shortcuts(n, std::move(arcs));
    } else {
        auto reach = strict_reachability(n, succ);
        std::sort(arcs.begin(), arcs.end());
        for (const auto& a : arcs) {
            for (int k : succ[static_cast<std::size_t>(a.from - 1)]) {
                if (k != a.to && reach[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(a.to - 1)]) {
                    auto path = detour(n, succ, a.from, a.to);
                    throw Error(ErrorKind::Input, "ShortCut",
                                "arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                                    ") is implied by path " + format_path(path));
                }
            }
        }
    }
    return make_network_unchecked(n, std::move(arcs), std::move(costs), std::move(names));
}

Poset Poset::from_relation(int n, std::vector<char> leq) {
    auto bad = [](const std::string& why) { return Error(ErrorKind::Input, "InvalidPoset", why); };
    if (n < 0 || leq.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw bad("relation matrix has the wrong size");
    Poset p(n, std::move(leq));
    for (int i = 1; i <= n; ++i) {
        if (!p.leq(i, i)) throw bad("not reflexive at " + std::to_string(i));
        for (int j = 1; j <= n; ++j) {
            if (i != j && p.leq(i, j) && p.leq(j, i))
                throw bad("not antisymmetric on " + std::to_string(i) + "," + std::to_string(j));
            if (!p.leq(i, j)) continue;
            for (int k = 1; k <= n; ++k)
                if (p.leq(j, k) && !p.leq(i, k)) throw bad("not transitive");
        }
    }
    return p;
}

Poset to_poset(const ProjectNetwork& network) {
    const int n = network.size();
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) succ[static_cast<std::size_t>(i - 1)] = network.successors(i);
    auto reach = strict_reachability(n, succ);
    std::vector<char> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            leq[static_cast<std::size_t>(i * n + j)] =
                (i == j || reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ? 1 : 0;
    return Poset(n, std::move(leq));
}

std::vector<Arc> to_hasse(const Poset& poset) {
    const int n = poset.size();
    std::vector<Arc> covers;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (!poset.less(i, j)) continue;
            bool between = false;
            for (int k = 1; k <= n && !between; ++k) between = poset.less(i, k) && poset.less(k, j);
            if (!between) covers.push_back({i, j});
        }
    }
    return covers;
}

LinearExtension linear_extension(const Poset& poset) {
    const int n = poset.size();
    // height[i] = number of elements on a longest chain ending at i; the
    // virtual minimum sits at height 0.
    std::vector<int> height(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> by_size(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) by_size[static_cast<std::size_t>(i - 1)] = i;
    // Elements with fewer predecessors come first in some linear extension, so
    // processing by down-set size visits every predecessor before its successors.
    auto downset = [&](int i) {
        int c = 0;
        for (int k = 1; k <= n; ++k) c += poset.less(k, i) ? 1 : 0;
        return c;
    };
    std::vector<int> down(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) down[static_cast<std::size_t>(i)] = downset(i);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [&](int a, int b) { return down[static_cast<std::size_t>(a)] < down[static_cast<std::size_t>(b)]; });
    for (int i : by_size) {
        int h = 0;
        for (int k = 1; k <= n; ++k)
            if (poset.less(k, i)) h = std::max(h, height[static_cast<std::size_t>(k)]);
        height[static_cast<std::size_t>(i)] = h + 1;
    }

    LinearExtension ext;
    ext.order.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) ext.order[static_cast<std::size_t>(i - 1)] = i;
    std::stable_sort(ext.order.begin(), ext.order.end(), [&](int a, int b) {
        return height[static_cast<std::size_t>(a)] < height[static_cast<std::size_t>(b)];
    });
    ext.position.assign(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) ext.position[static_cast<std::size_t>(ext.order[static_cast<std::size_t>(r)] - 1)] = r + 1;
    return ext;
}

SupportFamily maximal_chains(const ProjectNetwork& network, std::size_t max_chains) {
    SupportFamily chains;
    std::vector<int> path;
    std::function<void(int)> walk = [&](int v) {
        path.push_back(v);
        const auto& next = network.successors(v);
        if (next.empty()) {
            if (chains.size() >= max_chains)
                throw Error(ErrorKind::Limit, "ChainCapExceeded",
                            "more than " + std::to_string(max_chains) + " maximal chains");
            Term t = path;
            std::sort(t.begin(), t.end());
            chains.push_back(std::move(t));
        } else {
            for (int w : next) walk(w);
        }
        path.pop_back();
    };
    for (int i = 1; i <= network.size(); ++i)
        if (network.predecessors(i).empty()) walk(i);
    std::sort(chains.begin(), chains.end());
    return chains;
}

} // namespace pert
