#pragma once

#include "pert/rational.hpp"
#include "pert/term.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace pert {

/// `from` is an immediate predecessor of `to` (1-based indices).
struct Arc {
    int from = 0;
    int to = 0;
    auto operator<=>(const Arc&) const = default;
};

/// A validated activity-on-node project network: the Hasse diagram of a
/// partial order on activities 1..n, with a nonnegative time cost per
/// activity. The virtual start/end activities are not stored; sources and
/// sinks play their role.
///
/// Instances are only produced by validate_network() and are immutable.
class ProjectNetwork {
public:
    int size() const noexcept { return n_; }
    const std::vector<Arc>& covers() const noexcept { return covers_; }
    const std::vector<Rational>& costs() const noexcept { return costs_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Immediate successors of activity i, ascending.
    const std::vector<int>& successors(int i) const { return succ_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& predecessors(int i) const { return pred_[static_cast<std::size_t>(i - 1)]; }

private:
    friend ProjectNetwork make_network_unchecked(int n, std::vector<Arc> covers, std::vector<Rational> costs,
                                                 std::vector<std::string> names);

    int n_ = 0;
    std::vector<Arc> covers_;
    std::vector<Rational> costs_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<int>> pred_;
};

struct ValidateOptions {
    /// Replace redundant (short-cut) arcs by the transitive reduction instead
    /// of rejecting them.
    bool normalize_shortcuts = false;
};

/// Checks arcs over 1..n and costs, returning the network or throwing
/// pert::Error with one of the codes IndexOutOfRange, SelfLoop, DuplicateArc,
/// NegativeCost, DimensionMismatch, CycleDetected, ShortCut. Error messages
/// carry the witness (cycle or alternative path).
ProjectNetwork validate_network(int n, std::vector<Arc> arcs, std::vector<Rational> costs,
                                std::vector<std::string> names = {}, ValidateOptions options = {});

/// Transitive reduction of an acyclic simple arc set. Throws CycleDetected.
std::vector<Arc> normalize_shortcuts(int n, std::vector<Arc> arcs);

/// Finite partial order on 1..n stored as a dense reachability matrix.
class Poset {
public:
    /// Builds a poset from a full relation matrix (row-major, leq[(i-1)*n + (j-1)]
    /// means i <= j). Throws InvalidPoset when the relation is not a partial order.
    static Poset from_relation(int n, std::vector<char> leq);

    int size() const noexcept { return n_; }
    bool leq(int i, int j) const { return leq_[index(i, j)] != 0; }
    bool less(int i, int j) const { return i != j && leq(i, j); }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

    bool operator==(const Poset&) const = default;

private:
    Poset(int n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {}
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
    }
    friend Poset to_poset(const ProjectNetwork& network);

    int n_ = 0;
    std::vector<char> leq_;
};

/// Reflexive-transitive closure of the covers.
Poset to_poset(const ProjectNetwork& network);

/// Covering pairs (i < j with nothing strictly between), sorted.
std::vector<Arc> to_hasse(const Poset& poset);

/// Relabelling that embeds the poset into the integers monotonically.
struct LinearExtension {
    std::vector<int> order;     // activities, smallest first
    std::vector<int> position;  // position[i-1] = 1-based rank of activity i
};

/// Layers elements by their longest-chain distance from a virtual minimum;
/// ties are broken by ascending index.
LinearExtension linear_extension(const Poset& poset);

inline constexpr std::size_t kDefaultMaxChains = 100000;

/// All source-to-sink paths along covers (the maximal chains), each as a
/// sorted index set, in lexicographic order. Throws ChainCapExceeded (Limit)
/// when more than `max_chains` paths exist.
SupportFamily maximal_chains(const ProjectNetwork& network, std::size_t max_chains = kDefaultMaxChains);

} // namespace pert
