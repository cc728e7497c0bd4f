#pragma once

// Fourier-Motzkin feasibility for homogeneous systems with strictness
// tracking. Doubly exponential; test use only (n <= 5).

#include "pert/linfeas.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace pert::oracle {

inline bool fm_feasible(const ConstraintSystem& s) {
    using Ineq = std::pair<std::vector<Rational>, bool>;  // <a,t> > 0 when strict, else >= 0
    auto normalise = [](Ineq q) {
        for (const auto& x : q.first)
            if (sgn(x) != 0) {
                Rational scale = abs(x);
                for (auto& y : q.first) y /= scale;
                break;
            }
        return q;
    };
    std::vector<Ineq> rows;
    for (const auto& a : s.equalities) {
        rows.push_back({a, false});
        std::vector<Rational> neg = a;
        for (auto& x : neg) x = -x;
        rows.push_back({neg, false});
    }
    for (const auto& a : s.weak) rows.push_back({a, false});
    for (const auto& a : s.strict) rows.push_back({a, true});

    for (int var = 0; var < s.n; ++var) {
        const auto v = static_cast<std::size_t>(var);
        std::vector<Ineq> pos, neg, next;
        for (auto& q : rows) {
            int sg = sgn(q.first[v]);
            if (sg > 0)
                pos.push_back(q);
            else if (sg < 0)
                neg.push_back(q);
            else
                next.push_back(q);
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                Ineq c{std::vector<Rational>(p.first.size()), p.second || q.second};
                Rational wp = -q.first[v];
                Rational wq = p.first[v];
                for (std::size_t j = 0; j < c.first.size(); ++j) c.first[j] = wp * p.first[j] + wq * q.first[j];
                next.push_back(c);
            }
        }
        std::set<std::pair<std::vector<std::string>, bool>> seen;
        rows.clear();
        for (auto& q : next) {
            q = normalise(std::move(q));
            std::vector<std::string> key;
            for (const auto& x : q.first) key.push_back(x.get_str());
            if (seen.insert({key, q.second}).second) rows.push_back(std::move(q));
        }
    }
    // Only 0 >= 0 and 0 > 0 remain.
    return std::none_of(rows.begin(), rows.end(), [](const Ineq& q) { return q.second; });
}

} // namespace pert::oracle
