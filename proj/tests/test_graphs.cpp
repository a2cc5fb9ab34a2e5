#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "chgraph/graphs.hpp"

using namespace chgraph;

namespace {

std::vector<std::string> distinct_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
    return out;
}

Graph tadpole() {
    Graph g;
    g.vertices = 1;
    g.edges = {{0, 0}};
    g.leaves = {{0, "a"}};
    return g;
}

}  // namespace

TEST_CASE("leaf-labeled tree counts match the double factorial") {
    // (2n-5)!! = 1, 3, 15, 105, 945 for n = 3..7
    for (int n = 3; n <= 7; ++n) {
        auto classes = enumerate_graphs(distinct_labels(n), 0);
        Integer expect = labeled_tree_count(n);
        Integer got = 0;
        for (const auto& c : classes) {
            CHECK(c.graph.trivalent());
            CHECK(c.graph.genus() == 0);
            got += 1;
        }
        CHECK(got == expect);
        // with all labels distinct every class has trivial automorphisms
        for (const auto& c : classes) CHECK(c.aut_order == 1);
    }
}

TEST_CASE("four distinct labels give the three channel trees") {
    auto classes = enumerate_graphs(distinct_labels(4), 0);
    CHECK(classes.size() == 3);
}

TEST_CASE("degenerate genus-0 requests return the empty list") {
    CHECK(enumerate_graphs({}, 0).empty());
    CHECK(enumerate_graphs({"a"}, 0).empty());
    CHECK(enumerate_graphs({"a", "b"}, 0).empty());
}

TEST_CASE("tadpole: one class, automorphism order 2") {
    auto classes = enumerate_graphs({"a"}, 1);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].graph.vertices == 1);
    CHECK(classes[0].graph.edges.size() == 1);
    CHECK(classes[0].aut_order == 2);
    CHECK(classes[0].graph.genus() == 1);
}

TEST_CASE("caterpillar with leaves {a,b},{c},{a,b} has automorphism order 2") {
    Graph g;
    g.vertices = 3;
    g.edges = {{0, 1}, {1, 2}};
    g.leaves = {{0, "a"}, {0, "b"}, {1, "c"}, {2, "a"}, {2, "b"}};
    CHECK(g.automorphism_order() == 2);
}

TEST_CASE("theta graph automorphisms") {
    Graph g;
    g.vertices = 2;
    g.edges = {{0, 1}, {0, 1}, {0, 1}};
    CHECK(g.automorphism_order() == 12);
    CHECK(g.genus() == 2);
}

TEST_CASE("identical-label potentials carry the paper's weights") {
    // n = 3 identical leaves: single class with |Aut| = 6
    auto c3 = enumerate_graphs({"E", "E", "E"}, 0);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].aut_order == 6);
    // n = 4: one class, |Aut| = 8
    auto c4 = enumerate_graphs({"E", "E", "E", "E"}, 0);
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].aut_order == 8);
    // n = 5: one class (caterpillar), |Aut| = 8
    auto c5 = enumerate_graphs({"E", "E", "E", "E", "E"}, 0);
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].aut_order == 8);
    // genus 1, one identical leaf: tadpole, |Aut| = 2
    auto g1 = enumerate_graphs({"E"}, 1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].aut_order == 2);
    // genus 1, two identical leaves: 2-cycle and loop-with-stem, |Aut| = 4
    auto g2 = enumerate_graphs({"E", "E"}, 1);
    REQUIRE(g2.size() == 2);
    for (const auto& c : g2) CHECK(c.aut_order == 4);
}

TEST_CASE("canonicalization is idempotent and relabel-invariant") {
    std::mt19937 rng(123);
    for (int n = 3; n <= 6; ++n) {
        auto classes = enumerate_graphs(distinct_labels(n), 0);
        for (const auto& c : classes) {
            Graph g = c.graph;
            CHECK(g.canonical_form().canonical_key() == g.canonical_key());
            // random vertex relabeling
            std::vector<int> perm(g.vertices);
            for (int i = 0; i < g.vertices; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph h;
            h.vertices = g.vertices;
            for (auto [u, v] : g.edges)
                h.edges.emplace_back(std::min(perm[u], perm[v]),
                                     std::max(perm[u], perm[v]));
            h.edge_color = g.edge_color;
            for (auto& [v, lab] : g.leaves) h.leaves.emplace_back(perm[v], lab);
            CHECK(h.canonical_key() == g.canonical_key());
            CHECK(h.automorphism_order() == g.automorphism_order());
        }
    }
}

TEST_CASE("orbit counting: labeled classes match unlabeled weights") {
    // sum over unlabeled-leaf classes of n!/|Aut| equals the number of
    // distinct-label classes
    for (int n = 3; n <= 6; ++n) {
        auto unl = enumerate_graphs(std::vector<std::string>(n, "E"), 0);
        auto lab = enumerate_graphs(distinct_labels(n), 0);
        Integer fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        Rational total = 0;
        for (const auto& c : unl) total += Rational(fact, c.aut_order);
        CHECK(total == Rational(Integer(lab.size())));
    }
}

TEST_CASE("cycle edges and J-edge choices") {
    auto g = tadpole();
    auto cyc = cycle_edges(g);
    REQUIRE(cyc.size() == 1);
    CHECK(cyc[0] == 0);
    auto dec = cycle_decomposition(g, 0);
    CHECK(dec.vertices.size() == 1);

    // 2-cycle with a leaf on each vertex: both parallel edges are valid
    Graph two;
    two.vertices = 2;
    two.edges = {{0, 1}, {0, 1}};
    two.leaves = {{0, "a"}, {1, "b"}};
    auto cyc2 = cycle_edges(two);
    CHECK(cyc2.size() == 2);
    auto dec2 = cycle_decomposition(two, 0);
    CHECK(dec2.vertices.size() == 2);
    CHECK(dec2.edge_ids.size() == 2);

    // genus-0 input is an error
    Graph tree;
    tree.vertices = 1;
    tree.leaves = {{0, "a"}, {0, "b"}, {0, "c"}};
    CHECK_THROWS_AS(cycle_edges(tree), std::invalid_argument);
}

TEST_CASE("edge colors separate parallel classes") {
    Graph g;
    g.vertices = 2;
    g.edges = {{0, 1}, {0, 1}};
    g.leaves = {{0, "e"}, {1, "e"}};
    CHECK(g.automorphism_order() == 4);  // swap edges x swap vertices
    g.edge_color = {0, 1};
    CHECK(g.automorphism_order() == 2);  // colored edges cannot swap
}

TEST_CASE("genus-1 enumeration produces distinct trivalent classes") {
    auto classes = enumerate_graphs({"a", "b"}, 1);
    for (const auto& c : classes) {
        CHECK(c.graph.trivalent());
        CHECK(c.graph.genus() == 1);
        CHECK(c.graph.connected());
    }
    // 2-cycle with a|b and the loop-with-stem carrying {a,b}
    CHECK(classes.size() == 2);
    std::set<std::string> keys;
    for (const auto& c : classes) keys.insert(c.graph.canonical_key());
    CHECK(keys.size() == classes.size());
}
