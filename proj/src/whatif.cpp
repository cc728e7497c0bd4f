#include "pert/whatif.hpp"

#include "pert/error.hpp"
#include "pert/realise.hpp"

#include <algorithm>

namespace pert {

CriticalPaths critical_paths(const ProjectNetwork& network, std::span<const Rational> t, std::size_t max_chains) {
    auto e = eval(eft_polynomial(network, max_chains), t);
    return {std::move(e.value), std::move(e.argmax)};
}

namespace {

void check_move(int n, int activity, int sign) {
    if (activity < 1 || activity > n)
        throw Error(ErrorKind::Input, "BadParameters",
                    "activity " + std::to_string(activity) + " outside 1.." + std::to_string(n));
    if (sign != 1 && sign != -1) throw Error(ErrorKind::Input, "BadParameters", "direction must be +1 or -1");
}

bool contains(const Term& t, int i) { return std::binary_search(t.begin(), t.end(), i); }

} // namespace

WhatIfResult ray_trace(const TropicalPolynomial& f, std::span<const Rational> t, int activity, int sign) {
    check_move(f.variables(), activity, sign);
    const Evaluation start = eval(f, t);
    if (start.argmax.size() != 1)
        throw Error(ErrorKind::Domain, "OnWall", "the start point has " + std::to_string(start.argmax.size()) +
                                                     " critical terms; pick a point inside a chamber");

    // Term k as a line: value_k + slope_k * s.
    const std::size_t m = f.size();
    std::vector<Rational> value(m);
    std::vector<int> slope(m);
    for (std::size_t k = 0; k < m; ++k) {
        value[k] = term_value(f.term(k), t);
        slope[k] = contains(f.term(k), activity) ? sign : 0;
    }
    auto at = [&](std::size_t k, const Rational& s) { return Rational(value[k] + slope[k] * s); };

    WhatIfResult r;
    r.activity = activity;
    r.sign = sign;
    r.start = start.argmax;

    const bool bounded = sign < 0;
    const Rational floor = t[static_cast<std::size_t>(activity - 1)];

    // Upper-envelope sweep: the current leader set shares one line, and
    // only lines of larger slope can overtake it.
    std::size_t leader = *f.find(start.argmax.front());
    Rational s = 0;
    while (true) {
        std::optional<Rational> hit;
        for (std::size_t k = 0; k < m; ++k) {
            if (slope[k] <= slope[leader]) continue;
            Rational cross = (value[leader] - value[k]) / (slope[k] - slope[leader]);
            if (cross > s && (!hit || cross < *hit)) hit = cross;
        }
        if (!hit || (bounded && *hit > floor)) break;

        s = *hit;
        Crossing c;
        c.step = s;
        Rational top = at(leader, s);
        int best_slope = slope[leader];
        for (std::size_t k = 0; k < m; ++k) {
            if (at(k, s) != top) continue;
            c.tie.push_back(f.term(k));
            best_slope = std::max(best_slope, slope[k]);
        }
        for (std::size_t k = 0; k < m; ++k) {
            if (at(k, s) == top && slope[k] == best_slope) {
                c.next.push_back(f.term(k));
                leader = k;
            }
        }
        r.crossings.push_back(std::move(c));
    }

    if (bounded) {
        r.horizon.kind = Horizon::Kind::Floor;
        r.horizon.step = floor;
        std::vector<Rational> end(t.begin(), t.end());
        end[static_cast<std::size_t>(activity - 1)] = 0;
        r.horizon.argmax = eval(f, end).argmax;
    } else {
        r.horizon.kind = Horizon::Kind::Stable;
        r.horizon.argmax = r.crossings.empty() ? r.start : r.crossings.back().next;
    }
    return r;
}

Prediction predict_transitions(const TropicalPolynomial& f, const LabeledGraph& adjacency, const Term& current,
                               int activity, int sign) {
    check_move(f.variables(), activity, sign);
    auto where = std::find(adjacency.vertices.begin(), adjacency.vertices.end(), current);
    if (!f.find(current) || where == adjacency.vertices.end())
        throw Error(ErrorKind::Input, "UnknownTerm", format_term(current) + " is not a term");

    Prediction p;
    const bool inside = contains(current, activity);
    if ((sign < 0) != inside) {
        p.code = PredictionCode::StaysInside;
        return p;
    }
    const int v = static_cast<int>(where - adjacency.vertices.begin());
    for (int w : adjacency.neighbours(v)) {
        const Term& J = adjacency.vertices[static_cast<std::size_t>(w)];
        if (contains(J, activity) != inside) p.candidates.push_back(J);
    }
    std::sort(p.candidates.begin(), p.candidates.end());
    return p;
}

Prediction predict_transitions(const TropicalPolynomial& f, const Term& current, int activity, int sign) {
    if (!f.find(current)) throw Error(ErrorKind::Input, "UnknownTerm", format_term(current) + " is not a term");
    return predict_transitions(f, adjacency_graph(f), current, activity, sign);
}

} // namespace pert
