#pragma once

#include "pert/rational.hpp"
#include "pert/term.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pert {

/// A prerealisable max-plus polynomial: a nonempty antichain of nonempty
/// index sets over variables 1..n. Each term I stands for the monomial
/// sum_{i in I} t_i; the polynomial is their maximum. Coefficients are all
/// the tropical unit and are not stored.
class TropicalPolynomial {
public:
    int variables() const noexcept { return n_; }
    const SupportFamily& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const Term& term(std::size_t k) const { return terms_[k]; }

    /// Position of `t` in terms(), if present.
    std::optional<std::size_t> find(const Term& t) const;

    bool operator==(const TropicalPolynomial&) const = default;

private:
    friend TropicalPolynomial make_poly(int n, SupportFamily support);
    int n_ = 0;
    SupportFamily terms_;
};

/// Validates and canonicalises a support family. Duplicate terms merge.
/// Errors: BadParameters (n < 1), EmptySupport, EmptyTerm, IndexOutOfRange,
/// DivisibleTerms.
TropicalPolynomial make_poly(int n, SupportFamily support);

using CostVector = std::vector<Rational>;

/// Whether negative coordinates are accepted by eval().
enum class CostDomain { Orthant, Signed };

struct Evaluation {
    Rational value;
    SupportFamily argmax;  // every term attaining the value, canonical order
};

/// Value of term I at t.
Rational term_value(const Term& term, std::span<const Rational> t);

/// Max-plus evaluation. Throws DimensionMismatch, or NegativeCost when the
/// domain is Orthant and some coordinate is negative.
Evaluation eval(const TropicalPolynomial& f, std::span<const Rational> t, CostDomain domain = CostDomain::Orthant);

/// Min-plus evaluation, computed as -eval(f, -t) over signed costs; argmax
/// holds the minimising terms.
Evaluation eval_min_plus(const TropicalPolynomial& f, std::span<const Rational> t);

/// Complement of every term. Throws FullTerm when [n] is a term.
TropicalPolynomial dual(const TropicalPolynomial& f);

/// Tropical product of polynomials in disjoint variables: the second
/// factor's variables are renumbered n1+1..n1+n2.
TropicalPolynomial product(const TropicalPolynomial& a, const TropicalPolynomial& b);

/// All k-subsets of [n]. Throws BadParameters unless 1 <= k <= n.
TropicalPolynomial gen_fnk(int n, int k);

/// sum_{i=1}^{n-1} t_i t_{i+1} (for n = 1, the single term {1}).
TropicalPolynomial gen_zigzag(int n);

bool is_homogeneous(const TropicalPolynomial& f);

/// "{1,3,6}+{1,4,5}+..." in canonical order.
std::string to_text(const TropicalPolynomial& f);

/// Inverse of to_text. With n = 0 the variable count is the largest index used.
TropicalPolynomial parse_poly_text(std::string_view text, int n = 0);

} // namespace pert
