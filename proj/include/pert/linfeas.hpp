#pragma once

#include "pert/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pert {

using RowVector = std::vector<Rational>;

/// A homogeneous (conic) linear system over n rational variables:
///   <a,t> = 0 for a in equalities, <a,t> >= 0 for a in weak,
///   <a,t> > 0 for a in strict.
/// Variables are sign-unrestricted unless a row says otherwise.
struct ConstraintSystem {
    int n = 0;
    std::vector<RowVector> equalities;
    std::vector<RowVector> weak;
    std::vector<RowVector> strict;
};

/// Substitution check of a candidate point.
bool satisfies(const ConstraintSystem& system, std::span<const Rational> t);

/// Decides feasibility exactly. Strict rows are tightened to <a,t> >= 1,
/// which preserves feasibility because the system is a cone. Returns a
/// witness scaled to coprime integers, or nullopt iff the system is
/// infeasible. Throws DimensionMismatch on malformed rows.
std::optional<std::vector<Rational>> feasible(const ConstraintSystem& system);

/// Dimension of {t : <a,t> = 0 (equalities), <b,t> >= 0 (weak)}: n minus
/// the rank of the explicit plus implicit equalities.
int cone_dimension(int n, const std::vector<RowVector>& equalities, const std::vector<RowVector>& weak);

/// Rank of a set of rows of length n (exact Gaussian elimination).
int rank(std::vector<RowVector> rows, int n);

/// Plain-text dump, one constraint per line: "<(1,-1,0),t> >= 0".
std::string dump_system(const ConstraintSystem& system);

} // namespace pert
