#pragma once

#include "chgraph/algebra.hpp"
#include "chgraph/report.hpp"

namespace chgraph {

// gamma = E + 1/2 G-G+(gamma^2), iterated to degree-D stability.
SuperVector compute_gamma(const CHAlgebra& a, int D);

// Independent oracle: explicit sum over rooted trivalent trees with E on
// leaves, G-G+ on edges, 1/|Aut| weights.
SuperVector gamma_tree_sum(const CHAlgebra& a, int D);

// G-(gamma) = 0 and Q(gamma) + 1/2 G-(gamma^2) = 0 up to degree D.
Report check_maurer_cartan(const CHAlgebra& a, int D);

struct HomotopyOperators {
    SuperOperator Gamma;  // h -> G-G+(gamma h)
    SuperOperator Ol;     // sum_i Gamma^i
    SuperOperator Oc;     // Ol G-G+
    SuperOperator Or;     // Id + gamma . Ol G-G+
    SuperOperator O0;     // Ol Pi0 Or
    SuperVector gamma;
};

HomotopyOperators compute_operators(const CHAlgebra& a, int D);

// Q Ol(a) = -G-(gamma Ol(a)) on the H0 basis; the O0 expansion identity;
// and the Oc commutator identity under both candidate readings of its
// misprinted middle term (the reading that holds is reported).
Report check_operator_identities(const CHAlgebra& a, int D);

}  // namespace chgraph
