#pragma once

#include "chgraph/algebra.hpp"
#include "chgraph/report.hpp"

namespace chgraph {

// A(v) = K1(v) + 1/2 K2(v,v) + 1/6 K3(v,v,v) - 1/2 B2(v,v) over an even
// space V, with Series-valued form coefficients (symmetric as stored) and a
// constant invertible B2. For the tree sums to truncate, K1 and K2 must
// have positive T-degree.
struct CubicAction {
    int n = 0;
    VarsPtr vars;
    std::vector<Series> K1;                             // K1[i]
    std::vector<std::vector<Series>> K2;                // symmetric
    std::vector<std::vector<std::vector<Series>>> K3;   // symmetric
    RationalMatrix B2;

    Series eval(const std::vector<Series>& v, int D) const;
    // dA/dv^i at v
    std::vector<Series> gradient(const std::vector<Series>& v, int D) const;
};

struct CriticalPoint {
    std::vector<Series> v;
    Report report;  // stationarity certificate
};

// Fixed-point iteration v <- B2^{-1}(K1 + K2 v + 1/2 K3 v v) to degree-D
// stability; certifies that every partial of A vanishes up to degree D.
// Throws std::invalid_argument when B2 is singular.
CriticalPoint generic_critical_point(const CubicAction& action, int D);

// A(v_cr), plus the certificate that it matches the independent sum over
// unrooted trees (vertices K1/K2/K3 by degree, b2 on edges, 1/|Aut|).
struct CriticalValue {
    Series value;
    Report report;
};
CriticalValue generic_critical_value(const CubicAction& action,
                                     const std::vector<Series>& vcr, int D);

// Oracle: v_cr as an explicit sum over rooted trees.
std::vector<Series> critical_point_tree_sum(const CubicAction& action, int D);
// Oracle: A_cr as an explicit sum over unrooted trees (labeled-tree
// enumeration divided by n!).
Series critical_value_tree_sum(const CubicAction& action, int D);

// The BCOV specialization on a cH algebra:
//   A(v) = 1/6 int (E + G-v)^3 - 1/2 int Qv G-v,  v in span{e_alpha}.
// Verifies (i) E + G-(v_cr) = gamma, (ii) A(v_cr) = F0 from the graph sum,
// (iii) G- applied to both slots of b2 equals [G-G+].
Report bcov_verify(const CHAlgebra& a, int D);

}  // namespace chgraph
