#include "chgraph/evaluator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chgraph {

EdgeOperatorSet EdgeOperatorSet::standard(const CHAlgebra& a, int D) {
    EdgeOperatorSet s;
    s.ops[Marking::Black] = a.opK();
    s.ops[Marking::JBlack] = a.opJ().compose(a.opK(), D);
    s.ops[Marking::White] = a.opPi0();
    s.ops[Marking::GMinus] = a.opGm();
    s.ops[Marking::Identity] = a.opId();
    s.ops[Marking::JIdentity] = a.opJ();
    return s;
}

EdgeOperatorSet EdgeOperatorSet::dressed(const CHAlgebra& a,
                                         const SuperOperator& Oc,
                                         const SuperOperator& O0, int D) {
    EdgeOperatorSet s = standard(a, D);
    s.ops[Marking::Black] = Oc;
    s.ops[Marking::JBlack] = a.opJ().compose(Oc, D);
    s.ops[Marking::White] = O0;
    return s;
}

namespace {

struct Eval {
    const CHAlgebra& a;
    const Graph& g;
    const std::vector<Marking>& marks;
    const std::vector<SuperVector>& leafv;
    int D;
    const EdgeOperatorSet& ops;

    std::vector<std::vector<int>> vertex_edges;  // edge ids per vertex
    std::vector<std::vector<int>> vertex_leaves; // leaf ids per vertex

    Eval(const CHAlgebra& a_, const Graph& g_, const std::vector<Marking>& m_,
         const std::vector<SuperVector>& lv_, int D_, const EdgeOperatorSet& o_)
        : a(a_), g(g_), marks(m_), leafv(lv_), D(D_), ops(o_),
          vertex_edges(g_.vertices), vertex_leaves(g_.vertices) {
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            vertex_edges[g.edges[e].first].push_back(int(e));
            if (g.edges[e].second != g.edges[e].first)
                vertex_edges[g.edges[e].second].push_back(int(e));
        }
        for (std::size_t l = 0; l < g.leaves.size(); ++l)
            vertex_leaves[g.leaves[l].first].push_back(int(l));
    }

    // product of leaf values and incoming subtree values at v, excluding the
    // listed edges; subtrees are evaluated recursively through their marked
    // operators. Inputs multiply in canonical order: leaves first (by id),
    // then edges (by id).
    SuperVector hanging_value(int v, const std::set<int>& exclude_edges) {
        SuperVector acc = SuperVector::basis(a.space(), a.vars(), 0);  // unit
        for (int l : vertex_leaves[v]) acc = a.mul(acc, leafv.at(l), D);
        for (int e : vertex_edges[v]) {
            if (exclude_edges.count(e)) continue;
            auto [x, y] = g.edges[e];
            int child = (x == v) ? y : x;
            std::set<int> ex{e};
            SuperVector sub = hanging_value(child, ex);
            acc = a.mul(acc, ops.of(marks.at(e)).apply(sub, D), D);
        }
        return acc;
    }

    Series run() {
        const int genus = g.genus();
        if (genus == 0) {
            // evaluate everything into vertex 0 and integrate
            SuperVector root = hanging_value(0, {});
            return a.integrate(root);
        }
        if (genus != 1)
            throw std::invalid_argument("evaluate_graph: genus must be 0 or 1");
        // close the loop with a plain matrix trace at a canonical cycle edge
        auto cyc = cycle_edges(g);
        int cut = cyc.front();
        auto dec = cycle_decomposition(g, cut);
        std::set<int> cycset(dec.edge_ids.begin(), dec.edge_ids.end());
        // P = M_{h_{k-1}} Op(e_{k-2}) ... Op(e_0) M_{h_0}
        SuperOperator P;
        bool first = true;
        for (std::size_t i = 0; i < dec.vertices.size(); ++i) {
            int v = dec.vertices[i];
            SuperVector h = hanging_value(v, cycset);
            SuperOperator Mh = a.mul_operator(h, D);
            P = first ? Mh : Mh.compose(P, D);
            first = false;
            if (i + 1 < dec.vertices.size()) {
                const SuperOperator& E = ops.of(marks.at(dec.edge_ids[i]));
                P = E.compose(P, D);
            }
        }
        SuperOperator closed = ops.of(marks.at(cut)).compose(P, D);
        return trace(closed);
    }
};

}  // namespace

Series evaluate_graph(const CHAlgebra& a, const Graph& g,
                      const std::vector<Marking>& edge_marks,
                      const std::vector<SuperVector>& leaf_values, int D,
                      const EdgeOperatorSet& ops, bool include_aut_weight) {
    if (edge_marks.size() != g.edges.size())
        throw std::invalid_argument("evaluate_graph: marking per edge required");
    if (leaf_values.size() != g.leaves.size())
        throw std::invalid_argument("evaluate_graph: value per leaf required");
    Eval ev(a, g, edge_marks, leaf_values, D, ops);
    Series s = ev.run();
    if (include_aut_weight) {
        Integer aut = g.automorphism_order();
        s = s.scaled(Rational(Integer(1), aut));
    }
    return s.truncated(D);
}

Series evaluate_graph(const CHAlgebra& a, const Graph& g,
                      const std::vector<Marking>& edge_marks,
                      const std::vector<SuperVector>& leaf_values, int D) {
    return evaluate_graph(a, g, edge_marks, leaf_values, D,
                          EdgeOperatorSet::standard(a, D));
}

Series compute_potential(const CHAlgebra& a, int genus, int D) {
    Series total(a.vars());
    auto ops = EdgeOperatorSet::standard(a, D);
    SuperVector E = a.euler_vector();
    int nmin = (genus == 0) ? 3 : 1;
    for (int n = nmin; n <= D; ++n) {
        std::vector<std::string> labels(n, "E");
        for (const auto& cls : enumerate_graphs(labels, genus)) {
            std::vector<Marking> marks(cls.graph.edges.size(), Marking::Black);
            if (genus == 1)
                marks[cycle_edges(cls.graph).front()] = Marking::JBlack;
            std::vector<SuperVector> lv(cls.graph.leaves.size(), E);
            total += evaluate_graph(a, cls.graph, marks, lv, D, ops);
        }
    }
    return total.truncated(D);
}

Series f1_trace_form(const CHAlgebra& a, const SuperVector& gamma, int D) {
    SuperOperator G = a.opK().compose(a.mul_operator(gamma, D), D);
    SuperOperator P = SuperOperator::identity(a.space(), a.vars());
    Series total(a.vars());
    for (int i = 1; i <= D; ++i) {
        P = G.compose(P, D);
        total += trace(a.opJ().compose(P, D)).scaled(Rational(1, 2 * i));
    }
    return total.truncated(D);
}

}  // namespace chgraph
