#pragma once

#include "pert/linfeas.hpp"
#include "pert/poset.hpp"
#include "pert/rational.hpp"
#include "pert/tropical.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace pert::test {

inline Rational Q(const std::string& s) { return parse_rational(s); }

inline std::vector<Rational> costs(std::initializer_list<const char*> values) {
    std::vector<Rational> out;
    for (const char* v : values) out.push_back(parse_rational(v));
    return out;
}

inline std::vector<Rational> ones(int n) { return std::vector<Rational>(static_cast<std::size_t>(n), 1); }

// The six-activity chart whose paths are
// {1,3,6}, {1,4,5}, {1,4,6}, {2,3,6}, {2,5}.
inline std::vector<Arc> six_arcs() { return {{1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {4, 6}, {4, 5}}; }

inline ProjectNetwork six_network() { return validate_network(6, six_arcs(), ones(6)); }

inline SupportFamily six_terms() { return {{1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 6}, {2, 5}}; }

inline TropicalPolynomial six_poly() { return make_poly(6, six_terms()); }

inline ProjectNetwork chain_network(int n) {
    std::vector<Arc> arcs;
    for (int i = 1; i < n; ++i) arcs.push_back({i, i + 1});
    return validate_network(n, arcs, ones(n));
}

inline ProjectNetwork parallel_network(int n) { return validate_network(n, {}, ones(n)); }

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random acyclic arc set over a random topological order (may contain
/// short-cuts); arcs with probability p.
inline std::vector<Arc> random_dag_arcs(int n, Rng& rng, double p) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution coin(p);
    std::vector<Arc> arcs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) arcs.push_back({perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]});
    return arcs;
}

inline std::vector<Rational> random_costs(int n, Rng& rng) {
    std::vector<Rational> t;
    for (int i = 0; i < n; ++i) t.emplace_back(uniform(rng, 0, 20), uniform(rng, 1, 4));
    for (auto& x : t) x.canonicalize();
    return t;
}

inline ProjectNetwork random_network(int n, Rng& rng) {
    std::uniform_real_distribution<double> density(0.1, 0.7);
    return validate_network(n, random_dag_arcs(n, rng, density(rng)), random_costs(n, rng), {}, {true});
}

/// Random antichain over [n]: random subsets, then keep the inclusion-maximal ones.
inline SupportFamily random_antichain(int n, Rng& rng) {
    const int m = uniform(rng, 1, 2 * n);
    std::vector<unsigned> masks;
    for (int k = 0; k < m; ++k) {
        unsigned mask = 0;
        while (mask == 0) mask = static_cast<unsigned>(uniform(rng, 1, (1 << n) - 1));
        masks.push_back(mask);
    }
    SupportFamily out;
    for (unsigned a : masks) {
        bool dominated = false;
        for (unsigned b : masks)
            if (a != b && (a & b) == a) dominated = true;
        if (dominated) continue;
        Term t;
        for (int i = 0; i < n; ++i)
            if (a >> i & 1u) t.push_back(i + 1);
        out.push_back(std::move(t));
    }
    return canonical_family(std::move(out));
}

/// Random nonempty family of k-subsets for a random k (k < n when
/// `proper` is set, so that the dual exists).
inline TropicalPolynomial random_homogeneous(int n, Rng& rng, bool proper = false) {
    const int k = uniform(rng, 1, proper ? std::max(1, n - 1) : n);
    SupportFamily all = gen_fnk(n, k).terms();
    std::bernoulli_distribution keep(uniform(rng, 2, 9) / 10.0);
    SupportFamily chosen;
    for (const auto& t : all)
        if (keep(rng)) chosen.push_back(t);
    if (chosen.empty()) chosen.push_back(all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))]);
    return make_poly(n, std::move(chosen));
}

/// Small homogeneous system with coefficients in [-3, 3].
inline ConstraintSystem random_conic_system(Rng& rng) {
    const int n = uniform(rng, 1, 5);
    ConstraintSystem s;
    s.n = n;
    auto random_row = [&] {
        RowVector r(static_cast<std::size_t>(n));
        for (auto& x : r) x = uniform(rng, -3, 3);
        return r;
    };
    const int eq = uniform(rng, 0, 1);
    const int weak = uniform(rng, 0, 4);
    const int strict = uniform(rng, 0, 4);
    for (int k = 0; k < eq; ++k) s.equalities.push_back(random_row());
    for (int k = 0; k < weak; ++k) s.weak.push_back(random_row());
    for (int k = 0; k < strict; ++k) s.strict.push_back(random_row());
    return s;
}

inline unsigned mask_of(const Term& t) {
    unsigned m = 0;
    for (int i : t) m |= 1u << (i - 1);
    return m;
}

} // namespace pert::test
