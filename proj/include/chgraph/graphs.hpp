#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chgraph/rational.hpp"
#include "chgraph/vendor_json.hpp"

namespace chgraph {

// Connected multigraph with trivalent internal vertices (self-loops count
// twice toward the degree) and labeled leaves. genus = edges - vertices + 1.
struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;            // u <= v, self-loops u==v
    std::vector<std::pair<int, std::string>> leaves;   // (vertex, label)
    // Optional edge colors (empty = all 0). Isomorphisms and automorphisms
    // must preserve colors; relation templates use them to separate
    // propagator and projector edges.
    std::vector<int> edge_color;

    int color(std::size_t e) const {
        return e < edge_color.size() ? edge_color[e] : 0;
    }

    int degree(int v) const;
    int genus() const;
    bool connected() const;
    bool trivalent() const;

    // Lexicographically minimal encoding over all vertex orderings.
    Graph canonical_form() const;
    // Order of the label-respecting half-edge automorphism group.
    Integer automorphism_order() const;
    // Deterministic comparison key of the canonical form.
    std::string canonical_key() const;

    nlohmann::json to_json() const;
};

struct IsoClass {
    Graph graph;          // canonical representative
    Integer aut_order;
};

// Complete duplicate-free list of isomorphism classes of connected trivalent
// graphs with the given leaf labels and genus, sorted by canonical key.
// For genus 0 the list is empty unless labels.size() >= 3.
std::vector<IsoClass> enumerate_graphs(const std::vector<std::string>& labels,
                                       int genus, int max_vertices = 32);

// Count of leaf-labeled (all-distinct) trivalent trees: (2n-5)!!, via the
// add-a-leaf recursion t(n) = (2n-5) t(n-1). Oracle for enumerate_graphs.
Integer labeled_tree_count(int n_leaves);

// Edges of the unique cycle of a genus-1 graph (each is a valid J-edge:
// cutting it leaves a tree). Throws std::invalid_argument on genus 0.
std::vector<int> cycle_edges(const Graph& g);
// Ordered cycle: vertex sequence v0..v_{k-1} and edge ids, e[i] joining
// v[i] and v[(i+1)%k]; for a self-loop k == 1.
struct CycleDecomposition {
    std::vector<int> vertices;
    std::vector<int> edge_ids;
};
CycleDecomposition cycle_decomposition(const Graph& g, int through_edge);

}  // namespace chgraph
