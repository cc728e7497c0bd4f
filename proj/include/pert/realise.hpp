#pragma once

#include "pert/poset.hpp"
#include "pert/tropical.hpp"

#include <optional>
#include <string>

namespace pert {

/// Earliest-finishing-time polynomial: one term per maximal chain.
TropicalPolynomial eft_polynomial(const ProjectNetwork& network, std::size_t max_chains = kDefaultMaxChains);

/// Present when every pair {i, j} of activities lies in a common term and
/// [n] itself is not a term; a polynomial with this property has no PERT
/// chart, since all activities would have to be mutually comparable.
struct CoveringPairObstruction {
    int n = 0;
};

std::optional<CoveringPairObstruction> covering_pair_obstruction(const TropicalPolynomial& f);

enum class NotRealisableReason {
    None,
    CoveringPairObstruction,  // see covering_pair_obstruction()
    UncoveredActivity,        // some activity lies in no term, but every activity lies on a path
    NotTransitivelyOrientable,  // no partial order has exactly the co-occurring pairs comparable
    ChainMismatch,            // the forced comparability graph has other maximal chains
};

std::string to_string(NotRealisableReason reason);

struct Realisation {
    std::optional<ProjectNetwork> witness;  // unit costs
    NotRealisableReason reason = NotRealisableReason::None;
};

inline constexpr int kDefaultRealiseLimit = 12;

/// Searches for a poset on [n] whose maximal chains are exactly the terms
/// of f, by backtracking over orientations of the pairs that share a term.
/// Throws SearchLimitExceeded (Limit) when n exceeds `max_variables`; that
/// outcome says nothing about realisability.
Realisation realise(const TropicalPolynomial& f, int max_variables = kDefaultRealiseLimit);

/// maximal_chains(network) == terms(f). Throws DimensionMismatch.
bool verify_realisation(const TropicalPolynomial& f, const ProjectNetwork& network);

} // namespace pert
