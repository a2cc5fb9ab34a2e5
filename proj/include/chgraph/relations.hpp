#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "chgraph/algebra.hpp"
#include "chgraph/evaluator.hpp"
#include "chgraph/homotopy.hpp"
#include "chgraph/report.hpp"

namespace chgraph {

// The seven codimension-2 strata of the genus-1 four-point relation, as
// dual-graph data: vertex genera, leg distributions, connecting edges.
enum class Stratum { D22, D23, D24, D34, D03, D04, Db };

extern const std::array<Stratum, 7> kAllStrata;
const char* stratum_name(Stratum s);
// coefficients of the relation 12 D22 - 4 D23 - 2 D24 + 6 D34 + D03 + D04 - 2 Db
Rational getzler_coefficient(Stratum s);

// --- PDE route -------------------------------------------------------------

// WDVV: for every variable quadruple, the three channel contractions of
// third derivatives of F0 through eta^{-1} agree. Requires even H0.
Report check_wdvv_pde(const CHAlgebra& a, int D);

// The stratum's PDE value for legs = variable indices quad (diagonal mode:
// every leg may also carry the sum over the quad): per-vertex derivative
// series of F0/F1 contracted through eta^{-1} over edges, summed over the
// leg-distribution orbit, with 1/|Aut| for the dual graphs carrying a
// symmetry (D03, D04, Db). The result carries the leg T-factors so that it
// is comparable with the graph route.
Series stratum_to_pde(const CHAlgebra& a, Stratum s, const Series& F0,
                      const Series& F1, const std::array<int, 4>& quad, int D);

// --- graph route -----------------------------------------------------------

struct DeltaTemplate {
    Graph graph;
    std::vector<Marking> marks;
};

// The frozen marked-graph templates of each stratum (reconstructed from the
// stated weights; the 1/|Aut| factors come out of the evaluator).
const std::vector<DeltaTemplate>& delta_templates(Stratum s);

// Template weights as evaluated by 1/|Aut| (for the documented-coefficients
// audit): the list of automorphism orders per stratum.
std::vector<Integer> delta_template_auts(Stratum s);

enum class DeltaMode { Simplest, General };

// Evaluate the seven strata with e = sum of the four chosen leaf vectors on
// every leaf. Simplest mode: Pi0/G-G+ markings; General mode: O0/Oc
// markings with O_l-wrapped leaves.
std::map<Stratum, Series> evaluate_delta_cycles(const CHAlgebra& a,
                                                const std::array<int, 4>& quad,
                                                int D, DeltaMode mode);

// --- P-graph basis ----------------------------------------------------------

struct PGraph {
    Graph graph;
    std::vector<Marking> marks;
};

// P1..P9 templates (frozen data).
const std::array<PGraph, 9>& p_graphs();

// the paper's 7x9 decomposition table, exact rationals
const std::map<Stratum, std::array<Rational, 9>>& p_decomposition_table();

// Verifies numerically that each stratum's direct evaluation equals its
// P-combination; requires the 1/12 axiom (skipped with reason otherwise).
Report decompose_in_p_basis(const CHAlgebra& a, const std::array<int, 4>& quad,
                            int D);

// Algebra-independent: the Getzler combination of the table rows vanishes.
Report check_p_table_cancellation();

// --- top-level checkers -----------------------------------------------------

// Graph-route WDVV: the three channel graphs with O_l-wrapped leaves and an
// O0 internal edge all equal the four-point integral of O_l-wrapped leaves.
Report check_wdvv_graph(const CHAlgebra& a, const std::array<int, 4>& quad,
                        int D);

enum class GetzlerRoute { Pde, Graph };

Report check_getzler(const CHAlgebra& a, int D, GetzlerRoute route);

// both-route agreement on a fixture
Report check_route_agreement(const CHAlgebra& a, const std::array<int, 4>& quad,
                             int D);

}  // namespace chgraph
