#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chgraph/algebra.hpp"
#include "chgraph/graphs.hpp"

namespace chgraph {

// Bivector placed on an edge. Black = [G-G+], JBlack = [J G-G+],
// White = [Pi0] (or [O0] in dressed mode), GMinus = [G-], Identity = [Id],
// JIdentity = [J].
enum class Marking { Black, JBlack, White, GMinus, Identity, JIdentity };

// The operator realizing each marking. standard() uses the algebra's
// constant operators; dressed() substitutes O_c for G-G+ and O_0 for Pi0
// (general mode of the relation checkers).
struct EdgeOperatorSet {
    std::map<Marking, SuperOperator> ops;

    const SuperOperator& of(Marking m) const { return ops.at(m); }

    static EdgeOperatorSet standard(const CHAlgebra& a, int D);
    static EdgeOperatorSet dressed(const CHAlgebra& a, const SuperOperator& Oc,
                                   const SuperOperator& O0, int D);
};

// Weighted contraction of a marked graph: vertices become the forms
// m_k(a_1..a_k) = int a_1...a_k, edges apply their marked operator, leaves
// feed the given vectors, and the result carries the 1/|Aut| weight.
// Genus-1 graphs close through a plain matrix trace at a cycle edge;
// J factors come only from explicit JBlack/JIdentity markings.
Series evaluate_graph(const CHAlgebra& a, const Graph& g,
                      const std::vector<Marking>& edge_marks,
                      const std::vector<SuperVector>& leaf_values, int D,
                      const EdgeOperatorSet& ops,
                      bool include_aut_weight = true);

Series evaluate_graph(const CHAlgebra& a, const Graph& g,
                      const std::vector<Marking>& edge_marks,
                      const std::vector<SuperVector>& leaf_values, int D);

// Sum of evaluate_graph over all classes with E on every leaf: monomial
// degree equals leaf count, so leaf counts run up to D. Genus-1 classes get
// JBlack on the canonical cycle edge.
Series compute_potential(const CHAlgebra& a, int genus, int D);

// Closed-form genus-1 oracle:
//   F1 = 1/2 sum_{i>=1} (1/i) tr(J (G-G+ gamma.)^i).
Series f1_trace_form(const CHAlgebra& a, const SuperVector& gamma, int D);

}  // namespace chgraph
