#include "pert/graphs.hpp"

#include "pert/error.hpp"

#include <algorithm>

namespace pert {

bool LabeledGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::pair{a, b});
}

std::vector<int> LabeledGraph::neighbours(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabeledGraph canonical_graph(int n, SupportFamily vertices, std::vector<std::pair<int, int>> edges) {
    const int m = static_cast<int>(vertices.size());
    std::vector<int> order(vertices.size());
    for (int k = 0; k < m; ++k) order[static_cast<std::size_t>(k)] = k;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return vertices[static_cast<std::size_t>(a)] < vertices[static_cast<std::size_t>(b)];
    });
    std::vector<int> new_index(vertices.size());
    LabeledGraph g;
    g.n = n;
    for (int k = 0; k < m; ++k) {
        new_index[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
        g.vertices.push_back(vertices[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])]);
    }
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= m || b >= m || a == b)
            throw Error(ErrorKind::Input, "InvalidGraph", "bad edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        a = new_index[static_cast<std::size_t>(a)];
        b = new_index[static_cast<std::size_t>(b)];
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

LabeledGraph complete_graph(int n, SupportFamily vertices) {
    std::vector<std::pair<int, int>> edges;
    const int m = static_cast<int>(vertices.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) edges.emplace_back(a, b);
    return canonical_graph(n, std::move(vertices), std::move(edges));
}

ChamberMembership chamber_membership(const TropicalPolynomial& f, std::span<const Rational> t) {
    Evaluation e = eval(f, t);
    return {e.argmax.size() == 1, std::move(e.argmax)};
}

namespace {

RowVector indicator_difference(int n, const Term& a, const Term& b) {
    RowVector row(static_cast<std::size_t>(n));
    for (int i : a) row[static_cast<std::size_t>(i - 1)] += 1;
    for (int i : b) row[static_cast<std::size_t>(i - 1)] -= 1;
    return row;
}

ConstraintSystem tie_system(const TropicalPolynomial& f, std::size_t a, std::size_t b) {
    const int n = f.variables();
    ConstraintSystem s;
    s.n = n;
    s.equalities.push_back(indicator_difference(n, f.term(a), f.term(b)));
    for (std::size_t k = 0; k < f.size(); ++k)
        if (k != a && k != b) s.strict.push_back(indicator_difference(n, f.term(a), f.term(k)));
    return s;
}

void check_pair(const TropicalPolynomial& f, std::size_t a, std::size_t b) {
    if (a >= f.size() || b >= f.size() || a == b)
        throw Error(ErrorKind::Input, "UnknownTerm", "need two distinct terms of the polynomial");
}

std::pair<std::size_t, std::size_t> locate(const TropicalPolynomial& f, const Term& I, const Term& J) {
    auto a = f.find(I);
    auto b = f.find(J);
    if (!a) throw Error(ErrorKind::Input, "UnknownTerm", format_term(I) + " is not a term");
    if (!b) throw Error(ErrorKind::Input, "UnknownTerm", format_term(J) + " is not a term");
    if (*a == *b) throw Error(ErrorKind::Input, "UnknownTerm", "the two terms must differ");
    return {*a, *b};
}

template <class Test>
LabeledGraph pairwise_graph(const TropicalPolynomial& f, Execution exec, Test test) {
    const std::size_t m = f.size();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m * (m - 1) / 2);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));

    std::vector<char> hit(pairs.size(), 0);
    const auto count = static_cast<long>(pairs.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long p = 0; p < count; ++p) {
            const auto& [a, b] = pairs[static_cast<std::size_t>(p)];
            hit[static_cast<std::size_t>(p)] = test(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) ? 1 : 0;
        }
    } else {
        for (long p = 0; p < count; ++p) {
            const auto& [a, b] = pairs[static_cast<std::size_t>(p)];
            hit[static_cast<std::size_t>(p)] = test(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) ? 1 : 0;
        }
    }

    LabeledGraph g;
    g.n = f.variables();
    g.vertices = f.terms();
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (hit[p]) g.edges.push_back(pairs[p]);
    return g;
}

} // namespace

ConstraintSystem chamber_system(const TropicalPolynomial& f, std::size_t a, bool open) {
    if (a >= f.size()) throw Error(ErrorKind::Input, "UnknownTerm", "term index out of range");
    const int n = f.variables();
    ConstraintSystem s;
    s.n = n;
    for (int m = 0; m < n; ++m) {
        RowVector unit(static_cast<std::size_t>(n));
        unit[static_cast<std::size_t>(m)] = 1;
        s.weak.push_back(std::move(unit));
    }
    auto& rows = open ? s.strict : s.weak;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (k != a) rows.push_back(indicator_difference(n, f.term(a), f.term(k)));
    return s;
}

ConstraintSystem adjacency_system(const TropicalPolynomial& f, std::size_t a, std::size_t b) {
    check_pair(f, a, b);
    ConstraintSystem s = tie_system(f, a, b);
    for (int m = 0; m < f.variables(); ++m) {
        RowVector unit(static_cast<std::size_t>(f.variables()));
        unit[static_cast<std::size_t>(m)] = 1;
        s.strict.push_back(std::move(unit));
    }
    return s;
}

ConstraintSystem newton_edge_system(const TropicalPolynomial& f, std::size_t a, std::size_t b) {
    check_pair(f, a, b);
    return tie_system(f, a, b);
}

bool adjacency_test(const TropicalPolynomial& f, const Term& I, const Term& J) {
    auto [a, b] = locate(f, I, J);
    return feasible(adjacency_system(f, a, b)).has_value();
}

bool newton_edge_test(const TropicalPolynomial& f, const Term& I, const Term& J) {
    auto [a, b] = locate(f, I, J);
    return feasible(newton_edge_system(f, a, b)).has_value();
}

LabeledGraph adjacency_graph(const TropicalPolynomial& f, Execution exec) {
    return pairwise_graph(f, exec,
                          [&](std::size_t a, std::size_t b) { return feasible(adjacency_system(f, a, b)).has_value(); });
}

LabeledGraph newton_skeleton(const TropicalPolynomial& f, Execution exec) {
    return pairwise_graph(f, exec,
                          [&](std::size_t a, std::size_t b) { return feasible(newton_edge_system(f, a, b)).has_value(); });
}

LabeledGraph cartesian_product(const LabeledGraph& g1, const LabeledGraph& g2) {
    const int m1 = static_cast<int>(g1.vertices.size());
    const int m2 = static_cast<int>(g2.vertices.size());
    auto id = [m2](int v1, int v2) { return v1 * m2 + v2; };
    SupportFamily vertices;
    for (const auto& I : g1.vertices) {
        for (const auto& J : g2.vertices) {
            Term t = I;
            for (int j : J) t.push_back(j + g1.n);
            vertices.push_back(std::move(t));
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g1.edges)
        for (int v2 = 0; v2 < m2; ++v2) edges.emplace_back(id(a, v2), id(b, v2));
    for (const auto& [a, b] : g2.edges)
        for (int v1 = 0; v1 < m1; ++v1) edges.emplace_back(id(v1, a), id(v1, b));
    return canonical_graph(g1.n + g2.n, std::move(vertices), std::move(edges));
}

LabeledGraph complement_labels(const LabeledGraph& g) {
    SupportFamily vertices;
    for (const auto& I : g.vertices) {
        Term c;
        for (int i = 1; i <= g.n; ++i)
            if (!std::binary_search(I.begin(), I.end(), i)) c.push_back(i);
        vertices.push_back(std::move(c));
    }
    return canonical_graph(g.n, std::move(vertices), g.edges);
}

namespace {

// Edges as label pairs, so graphs with the same labels compare regardless of
// vertex order.
std::vector<std::pair<Term, Term>> labelled_edges(const LabeledGraph& g) {
    std::vector<std::pair<Term, Term>> out;
    for (const auto& [a, b] : g.edges) {
        const auto& A = g.vertices[static_cast<std::size_t>(a)];
        const auto& B = g.vertices[static_cast<std::size_t>(b)];
        out.emplace_back(std::min(A, B), std::max(A, B));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void require_same_vertices(const LabeledGraph& a, const LabeledGraph& b) {
    auto va = a.vertices;
    auto vb = b.vertices;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) throw Error(ErrorKind::Input, "VertexSetMismatch", "graphs have different vertex labels");
}

} // namespace

bool graph_equal(const LabeledGraph& a, const LabeledGraph& b) {
    require_same_vertices(a, b);
    return labelled_edges(a) == labelled_edges(b);
}

bool is_subgraph(const LabeledGraph& a, const LabeledGraph& b) {
    require_same_vertices(a, b);
    auto ea = labelled_edges(a);
    auto eb = labelled_edges(b);
    return std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
}

bool is_complete(const LabeledGraph& g) {
    const auto m = g.vertices.size();
    return labelled_edges(g).size() == m * (m - 1) / 2;
}

std::vector<int> degree_sequence(const LabeledGraph& g) {
    std::vector<int> deg(g.vertices.size(), 0);
    for (const auto& [a, b] : g.edges) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

} // namespace pert
