#include "pert/realise.hpp"

#include "pert/error.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace pert {

TropicalPolynomial eft_polynomial(const ProjectNetwork& network, std::size_t max_chains) {
    return make_poly(network.size(), maximal_chains(network, max_chains));
}

std::optional<CoveringPairObstruction> covering_pair_obstruction(const TropicalPolynomial& f) {
    const int n = f.variables();
    for (const auto& t : f.terms())
        if (t.size() == static_cast<std::size_t>(n)) return std::nullopt;
    std::vector<char> covered(static_cast<std::size_t>(n * n), 0);
    for (const auto& t : f.terms())
        for (int i : t)
            for (int j : t) covered[static_cast<std::size_t>((i - 1) * n + (j - 1))] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!covered[static_cast<std::size_t>(i * n + j)]) return std::nullopt;
    return CoveringPairObstruction{n};
}

std::string to_string(NotRealisableReason reason) {
    switch (reason) {
    case NotRealisableReason::None: return "realisable";
    case NotRealisableReason::CoveringPairObstruction: return "covering-pair obstruction";
    case NotRealisableReason::UncoveredActivity: return "activity outside every term";
    case NotRealisableReason::NotTransitivelyOrientable: return "co-occurrence pairs admit no partial order";
    case NotRealisableReason::ChainMismatch: return "maximal chains differ from the terms";
    }
    return "unknown";
}

namespace {

// Partial orientation of the co-occurrence graph. `below[j]` has bit i set
// when i < j has been decided (transitively closed at all times).
class OrientationSearch {
public:
    explicit OrientationSearch(const TropicalPolynomial& f) : n_(f.variables()) {
        allowed_.assign(static_cast<std::size_t>(n_), 0);
        for (const auto& t : f.terms())
            for (int i : t)
                for (int j : t)
                    if (i != j) allowed_[static_cast<std::size_t>(i - 1)] |= bit(j - 1);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (allowed_[static_cast<std::size_t>(i)] & bit(j)) pairs_.emplace_back(i, j);
    }

    // Returns the strict order as below-sets, or nullopt when no transitive
    // orientation exists. `first` is oriented first < second up front; the
    // reversed order of any witness is also a witness, so this loses nothing.
    std::optional<std::vector<std::uint32_t>> run(std::optional<std::pair<int, int>> first) {
        State s;
        s.below.assign(static_cast<std::size_t>(n_), 0);
        if (first && !assign(s, first->first, first->second)) return std::nullopt;
        if (!search(s)) return std::nullopt;
        return found_;
    }

private:
    struct State {
        std::vector<std::uint32_t> below;
    };

    static std::uint32_t bit(int i) { return std::uint32_t{1} << i; }

    bool less(const State& s, int i, int j) const { return (s.below[static_cast<std::size_t>(j)] & bit(i)) != 0; }
    bool may_compare(int i, int j) const { return (allowed_[static_cast<std::size_t>(i)] & bit(j)) != 0; }

    // Adds i < j and closes transitively; then applies the forcing rule until
    // a fixed point: for a < b with {b,c} a pair and {a,c} not a pair, c < b;
    // for a < b with {a,c} a pair and {b,c} not a pair, a < c.
    bool assign(State& s, int i, int j) {
        std::vector<std::pair<int, int>> work{{i, j}};
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            if (less(s, a, b)) continue;
            if (less(s, b, a)) return false;
            // everything <= a goes below everything >= b
            std::uint32_t lower = s.below[static_cast<std::size_t>(a)] | bit(a);
            for (int c = 0; c < n_; ++c) {
                if (c != b && !less(s, b, c)) continue;
                std::uint32_t fresh = lower & ~s.below[static_cast<std::size_t>(c)];
                for (int d = 0; d < n_; ++d) {
                    if (!(fresh & bit(d))) continue;
                    if (d == c || !may_compare(d, c)) return false;
                    if (less(s, c, d)) return false;
                    s.below[static_cast<std::size_t>(c)] |= bit(d);
                    for (int e = 0; e < n_; ++e) {
                        if (e == d || e == c) continue;
                        if (may_compare(c, e) && !may_compare(d, e)) work.emplace_back(e, c);
                        if (may_compare(d, e) && !may_compare(c, e)) work.emplace_back(d, e);
                    }
                }
            }
        }
        return true;
    }

    bool search(State& s) {
        for (const auto& [i, j] : pairs_) {
            if (less(s, i, j) || less(s, j, i)) continue;
            for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
                State next = s;
                if (assign(next, a, b) && search(next)) return true;
            }
            return false;
        }
        found_ = s.below;
        return true;
    }

    int n_;
    std::vector<std::uint32_t> allowed_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::uint32_t> found_;
};

} // namespace

Realisation realise(const TropicalPolynomial& f, int max_variables) {
    const int n = f.variables();
    if (n > max_variables || n > 31)
        throw Error(ErrorKind::Limit, "SearchLimitExceeded",
                    "realisation search is limited to " + std::to_string(std::min(max_variables, 31)) +
                        " activities, got " + std::to_string(n));
    Realisation out;
    if (covering_pair_obstruction(f)) {
        out.reason = NotRealisableReason::CoveringPairObstruction;
        return out;
    }
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto& t : f.terms())
        for (int i : t) used[static_cast<std::size_t>(i - 1)] = 1;
    if (std::find(used.begin(), used.end(), 0) != used.end()) {
        out.reason = NotRealisableReason::UncoveredActivity;
        return out;
    }

    std::optional<std::pair<int, int>> first;
    const Term& lead = f.term(0);
    if (lead.size() >= 2) first = std::pair{lead[0] - 1, lead[1] - 1};

    auto order = OrientationSearch(f).run(first);
    if (!order) {
        out.reason = NotRealisableReason::NotTransitivelyOrientable;
        return out;
    }

    std::vector<char> leq(static_cast<std::size_t>(n * n), 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (i == j || ((*order)[static_cast<std::size_t>(j)] >> i) & 1u) leq[static_cast<std::size_t>(i * n + j)] = 1;
    Poset poset = Poset::from_relation(n, std::move(leq));
    ProjectNetwork witness = validate_network(n, to_hasse(poset), std::vector<Rational>(static_cast<std::size_t>(n), 1));

    // Every transitive orientation has the same comparability graph and so
    // the same maximal chains; one mismatch settles the question.
    if (!verify_realisation(f, witness)) {
        out.reason = NotRealisableReason::ChainMismatch;
        return out;
    }
    out.witness = std::move(witness);
    return out;
}

bool verify_realisation(const TropicalPolynomial& f, const ProjectNetwork& network) {
    if (network.size() != f.variables())
        throw Error(ErrorKind::Dimension, "DimensionMismatch",
                    "network has " + std::to_string(network.size()) + " activities, polynomial has " +
                        std::to_string(f.variables()) + " variables");
    return maximal_chains(network) == f.terms();
}

} // namespace pert
