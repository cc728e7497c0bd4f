#pragma once

#include "pert/linfeas.hpp"
#include "pert/tropical.hpp"

#include <span>
#include <utility>
#include <vector>

namespace pert {

/// Undirected graph whose vertices are terms (canonical index sets over
/// variables 1..n). Vertices are kept sorted; edges are (a, b) index pairs
/// into `vertices` with a < b, sorted.
struct LabeledGraph {
    int n = 0;
    SupportFamily vertices;
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int a, int b) const;
    std::vector<int> neighbours(int v) const;
    bool operator==(const LabeledGraph&) const = default;
};

/// Sorts vertices and re-indexes edges; drops duplicate edges. Throws
/// InvalidGraph on self-loops or out-of-range edge endpoints.
LabeledGraph canonical_graph(int n, SupportFamily vertices, std::vector<std::pair<int, int>> edges);

/// K_m on the given labels.
LabeledGraph complete_graph(int n, SupportFamily vertices);

/// Which closed chamber a cost point sits in.
struct ChamberMembership {
    bool interior = false;  // true: unique maximal term
    SupportFamily terms;    // the maximal term, or the tied terms on a wall
};

ChamberMembership chamber_membership(const TropicalPolynomial& f, std::span<const Rational> t);

/// C_I for term index a: t in the orthant with t_I >= t_J for every J. With
/// `open` the term comparisons are strict, giving C°_I (open relative to the
/// orthant, so boundary points such as e_I belong to it).
ConstraintSystem chamber_system(const TropicalPolynomial& f, std::size_t a, bool open);

/// Feasibility system for a codimension-one wall between chambers of terms
/// a and b (indices into f.terms()): all t_m > 0, t_A = t_B and every other
/// term strictly below.
ConstraintSystem adjacency_system(const TropicalPolynomial& f, std::size_t a, std::size_t b);

/// Same tie/strict rows as adjacency_system with the cost vector unrestricted
/// in sign: the segment [e_A, e_B] is an edge of the Newton polytope.
ConstraintSystem newton_edge_system(const TropicalPolynomial& f, std::size_t a, std::size_t b);

/// Throws UnknownTerm when I or J is not a term of f, or they are equal.
bool adjacency_test(const TropicalPolynomial& f, const Term& I, const Term& J);
bool newton_edge_test(const TropicalPolynomial& f, const Term& I, const Term& J);

enum class Execution { Serial, Parallel };

/// G(F): vertices are the terms, edges the adjacent chamber pairs. The
/// Parallel path distributes the pairwise feasibility tests over OpenMP
/// threads; Serial is the reference loop. Both return identical graphs.
LabeledGraph adjacency_graph(const TropicalPolynomial& f, Execution exec = Execution::Parallel);

/// N(F): 1-skeleton of the Newton polytope conv{e_I}.
LabeledGraph newton_skeleton(const TropicalPolynomial& f, Execution exec = Execution::Parallel);

/// G1 □ G2. Vertex labels are I ∪ (J + G1.n), matching product(F1, F2).
LabeledGraph cartesian_product(const LabeledGraph& g1, const LabeledGraph& g2);

/// Relabels every vertex I by [n] \ I.
LabeledGraph complement_labels(const LabeledGraph& g);

/// Throws VertexSetMismatch when the vertex label sets differ.
bool graph_equal(const LabeledGraph& a, const LabeledGraph& b);
/// Every edge of `a` is an edge of `b`; same vertex labels required.
bool is_subgraph(const LabeledGraph& a, const LabeledGraph& b);
bool is_complete(const LabeledGraph& g);
/// Sorted ascending.
std::vector<int> degree_sequence(const LabeledGraph& g);

} // namespace pert
