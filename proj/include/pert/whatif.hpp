#pragma once

#include "pert/graphs.hpp"
#include "pert/poset.hpp"
#include "pert/tropical.hpp"

#include <span>
#include <vector>

namespace pert {

struct CriticalPaths {
    Rational value;
    SupportFamily paths;
};

/// Earliest finishing time at t and every path attaining it.
CriticalPaths critical_paths(const ProjectNetwork& network, std::span<const Rational> t,
                             std::size_t max_chains = kDefaultMaxChains);

/// A breakpoint of the sweep t + s * sign * e_i.
struct Crossing {
    Rational step;       // s > 0, strictly increasing along a trace
    SupportFamily tie;   // terms attaining the maximum at s
    SupportFamily next;  // terms strictly maximal just beyond s
};

struct Horizon {
    enum class Kind {
        Stable,  // no further change as s grows without bound
        Floor,   // the moving cost reached zero (decreases only)
    };
    Kind kind = Kind::Stable;
    Rational step;          // Floor: the s at which t_i = 0
    SupportFamily argmax;   // critical terms at the horizon
};

struct WhatIfResult {
    int activity = 0;
    int sign = 1;
    SupportFamily start;  // the unique critical term at s = 0
    std::vector<Crossing> crossings;
    Horizon horizon;
};

/// Exact parametric sweep of F along t + s * sign * e_i, s >= 0. Every term
/// is linear in s with slope sign * [i in I]; the trace lists each point
/// where the set of maximal terms changes. Throws OnWall (Domain) when t has
/// tied critical terms, DimensionMismatch, or BadParameters.
WhatIfResult ray_trace(const TropicalPolynomial& f, std::span<const Rational> t, int activity, int sign);

enum class PredictionCode {
    Exits,       // candidates are the neighbours the chamber can be left towards
    StaysInside  // moving this cost only takes t deeper into C_I
};

struct Prediction {
    SupportFamily candidates;
    PredictionCode code = PredictionCode::Exits;
};

/// Neighbours of I in G(F) that a move of cost i in direction `sign` can make
/// critical next: on a decrease of an activity in I, neighbours without it;
/// on an increase of an activity outside I, neighbours containing it.
/// Throws UnknownTerm.
Prediction predict_transitions(const TropicalPolynomial& f, const LabeledGraph& adjacency, const Term& current,
                               int activity, int sign);
Prediction predict_transitions(const TropicalPolynomial& f, const Term& current, int activity, int sign);

} // namespace pert
