#pragma once

#include <string>
#include <vector>

namespace pert {

/// A sorted set of 1-based activity indices: a path, or the index set of a
/// monomial (sum of the listed costs under max-plus semantics).
using Term = std::vector<int>;

/// A family of terms in canonical (lexicographic) order.
using SupportFamily = std::vector<Term>;

/// True iff a ⊆ b. Both arguments must be sorted.
bool is_subset(const Term& a, const Term& b);

/// Sorts and deduplicates each term, then sorts and deduplicates the family.
SupportFamily canonical_family(SupportFamily family);

/// "{1,3,6}"
std::string format_term(const Term& t);

} // namespace pert
