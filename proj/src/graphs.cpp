#include "chgraph/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chgraph {

namespace {

// encoding of a graph under a vertex relabeling: sorted edge list then
// per-vertex sorted leaf labels
std::string encode(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::tuple<int, int, int>> es;
    es.reserve(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        int a = perm[u], b = perm[v];
        if (a > b) std::swap(a, b);
        es.emplace_back(a, b, g.color(e));
    }
    std::sort(es.begin(), es.end());
    std::vector<std::vector<std::string>> lv(g.vertices);
    for (const auto& [v, lab] : g.leaves) lv[perm[v]].push_back(lab);
    for (auto& ls : lv) std::sort(ls.begin(), ls.end());
    std::ostringstream os;
    os << g.vertices << ";";
    for (auto [a, b, c] : es) os << a << "-" << b << "#" << c << ",";
    os << ";";
    for (int v = 0; v < g.vertices; ++v) {
        for (const auto& l : lv[v]) os << v << ":" << l << ",";
    }
    return os.str();
}

// vertex invariant used to prune the permutation search
std::vector<std::string> vertex_invariants(const Graph& g) {
    std::vector<int> deg(g.vertices, 0), loops(g.vertices, 0), nleaf(g.vertices, 0);
    std::vector<std::vector<int>> cols(g.vertices);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        deg[u]++;
        deg[v]++;
        if (u == v) loops[u]++;
        cols[u].push_back(g.color(e));
        if (u != v) cols[v].push_back(g.color(e));
    }
    std::vector<std::vector<std::string>> lv(g.vertices);
    for (const auto& [v, lab] : g.leaves) lv[v].push_back(lab);
    std::vector<std::string> inv(g.vertices);
    for (int v = 0; v < g.vertices; ++v) {
        std::sort(lv[v].begin(), lv[v].end());
        std::sort(cols[v].begin(), cols[v].end());
        std::ostringstream os;
        os << deg[v] << "/" << loops[v] << "/";
        for (int c : cols[v]) os << c << ".";
        os << "/";
        for (auto& l : lv[v]) os << l << ",";
        inv[v] = os.str();
    }
    return inv;
}

// Enumerates vertex relabelings that respect invariant classes: vertices in
// the class with the k-th smallest invariant string receive the k-th block
// of new positions. The minimum encoding over these relabelings is a valid
// canonical form (invariants are isomorphism-invariant), and automorphisms
// always lie inside them.
void foreach_admissible_perm(const Graph& g,
                             const std::function<void(const std::vector<int>&)>& fn) {
    const int n = g.vertices;
    auto inv = vertex_invariants(g);
    std::map<std::string, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[inv[v]].push_back(v);
    std::vector<std::vector<int>> members;       // per class, old vertices
    std::vector<int> start;                      // per class, first position
    int pos = 0;
    for (auto& [key, vs] : classes) {
        members.push_back(vs);
        start.push_back(pos);
        pos += static_cast<int>(vs.size());
    }
    std::vector<int> perm(n, -1);  // perm[old] = new
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == members.size()) {
            fn(perm);
            return;
        }
        std::vector<int> order = members[c];
        std::sort(order.begin(), order.end());
        do {
            for (std::size_t i = 0; i < order.size(); ++i)
                perm[order[i]] = start[c] + static_cast<int>(i);
            rec(c + 1);
        } while (std::next_permutation(order.begin(), order.end()));
    };
    rec(0);
}

}  // namespace

int Graph::degree(int v) const {
    int d = 0;
    for (auto [u, w] : edges) {
        if (u == v) ++d;
        if (w == v) ++d;
    }
    for (const auto& [u, lab] : leaves)
        if (u == v) ++d;
    return d;
}

int Graph::genus() const {
    return static_cast<int>(edges.size()) - vertices + 1;
}

bool Graph::connected() const {
    if (vertices == 0) return false;
    std::vector<int> seen(vertices, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
            int w = -1;
            if (a == v) w = b;
            else if (b == v) w = a;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

bool Graph::trivalent() const {
    for (int v = 0; v < vertices; ++v)
        if (degree(v) != 3) return false;
    return true;
}

Graph Graph::canonical_form() const {
    std::string best;
    std::vector<int> bestperm;
    foreach_admissible_perm(*this, [&](const std::vector<int>& p) {
        std::string e = encode(*this, p);
        if (best.empty() || e < best) {
            best = e;
            bestperm = p;
        }
    });
    Graph out;
    out.vertices = vertices;
    std::vector<std::tuple<int, int, int>> es;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        int a = bestperm[u], b = bestperm[v];
        if (a > b) std::swap(a, b);
        es.emplace_back(a, b, color(e));
    }
    std::sort(es.begin(), es.end());
    for (auto [a, b, c] : es) {
        out.edges.emplace_back(a, b);
        out.edge_color.push_back(c);
    }
    for (const auto& [v, lab] : leaves) out.leaves.emplace_back(bestperm[v], lab);
    std::sort(out.leaves.begin(), out.leaves.end());
    return out;
}

std::string Graph::canonical_key() const {
    Graph c = canonical_form();
    std::vector<int> id(c.vertices);
    std::iota(id.begin(), id.end(), 0);
    return encode(c, id);
}

Integer Graph::automorphism_order() const {
    // Vertex part: the relabelings achieving the canonical encoding form a
    // torsor under the vertex automorphism group, so counting them gives its
    // order for any input labeling. Half-edge part: parallel classes of m
    // same-colored edges contribute m!, each self-loop an extra flip 2,
    // identical leaf labels c! per vertex; the product over classes is
    // permutation-independent.
    std::string best;
    Integer count = 0;
    foreach_admissible_perm(*this, [&](const std::vector<int>& p) {
        std::string e = encode(*this, p);
        if (best.empty() || e < best) {
            best = e;
            count = 1;
        } else if (e == best) {
            count += 1;
        }
    });

    std::map<std::tuple<int, int, int>, int> mult;
    for (std::size_t e = 0; e < edges.size(); ++e)
        mult[{edges[e].first, edges[e].second, color(e)}]++;
    std::map<int, std::map<std::string, int>> leafcount;
    for (const auto& [v, lab] : leaves) leafcount[v][lab]++;
    auto fact = [](int k) {
        Integer f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    Integer ways = 1;
    for (const auto& [uvc, m] : mult) {
        ways *= fact(m);
        if (std::get<0>(uvc) == std::get<1>(uvc))
            for (int i = 0; i < m; ++i) ways *= 2;
    }
    for (const auto& [v, labs] : leafcount)
        for (const auto& [lab, c] : labs) ways *= fact(c);
    return count * ways;
}

nlohmann::json Graph::to_json() const {
    nlohmann::json j;
    j["vertices"] = vertices;
    auto es = nlohmann::json::array();
    for (auto [u, v] : edges) es.push_back({u, v});
    j["edges"] = std::move(es);
    auto ls = nlohmann::json::array();
    for (const auto& [v, lab] : leaves) ls.push_back({v, lab});
    j["leaves"] = std::move(ls);
    j["aut_order"] = automorphism_order().str();
    return j;
}

namespace {

// all trivalent trees with the given leaf labels, by add-a-leaf insertion,
// deduplicated by canonical key
std::vector<Graph> all_trees(const std::vector<std::string>& labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<Graph> cur;
    if (n < 3) return cur;
    Graph base;
    base.vertices = 1;
    base.leaves = {{0, labels[0]}, {0, labels[1]}, {0, labels[2]}};
    cur.push_back(base);
    for (int k = 3; k < n; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& t : cur) {
            // subdivide an internal edge
            for (std::size_t e = 0; e < t.edges.size(); ++e) {
                Graph s = t;
                auto [u, v] = s.edges[e];
                int w = s.vertices++;
                s.edges.erase(s.edges.begin() + e);
                s.edges.emplace_back(std::min(u, w), std::max(u, w));
                s.edges.emplace_back(std::min(v, w), std::max(v, w));
                s.leaves.emplace_back(w, labels[k]);
                Graph c = s.canonical_form();
                next.emplace(c.canonical_key(), c);
            }
            // split a leaf
            for (std::size_t l = 0; l < t.leaves.size(); ++l) {
                Graph s = t;
                auto [v, lab] = s.leaves[l];
                int w = s.vertices++;
                s.leaves.erase(s.leaves.begin() + l);
                s.edges.emplace_back(std::min(v, w), std::max(v, w));
                s.leaves.emplace_back(w, lab);
                s.leaves.emplace_back(w, labels[k]);
                Graph c = s.canonical_form();
                next.emplace(c.canonical_key(), c);
            }
        }
        cur.clear();
        for (auto& [key, g] : next) cur.push_back(std::move(g));
    }
    return cur;
}

const std::string kGlueMark = "\x01glue";

}  // namespace

std::vector<IsoClass> enumerate_graphs(const std::vector<std::string>& labels,
                                       int genus, int max_vertices) {
    if (genus != 0 && genus != 1)
        throw std::invalid_argument("enumerate_graphs: genus must be 0 or 1");
    std::map<std::string, Graph> classes;
    if (genus == 0) {
        for (const Graph& t : all_trees(labels))
            if (t.vertices <= max_vertices) classes.emplace(t.canonical_key(), t);
    } else {
        if (labels.empty()) return {};
        std::vector<std::string> aug = labels;
        aug.push_back(kGlueMark);
        aug.push_back(kGlueMark);
        for (const Graph& t : all_trees(aug)) {
            // glue the two marked leaves into an edge
            std::vector<int> marks;
            for (std::size_t i = 0; i < t.leaves.size(); ++i)
                if (t.leaves[i].second == kGlueMark) marks.push_back(int(i));
            Graph s = t;
            int u = s.leaves[marks[0]].first, v = s.leaves[marks[1]].first;
            s.leaves.erase(s.leaves.begin() + marks[1]);
            s.leaves.erase(s.leaves.begin() + marks[0]);
            s.edges.emplace_back(std::min(u, v), std::max(u, v));
            if (s.vertices > max_vertices) continue;
            Graph c = s.canonical_form();
            classes.emplace(c.canonical_key(), c);
        }
    }
    std::vector<IsoClass> out;
    for (auto& [key, g] : classes)
        out.push_back(IsoClass{g, g.automorphism_order()});
    return out;
}

Integer labeled_tree_count(int n) {
    if (n < 3) return 0;
    Integer t = 1;
    for (int k = 4; k <= n; ++k) t *= (2 * k - 5);
    return t;
}

std::vector<int> cycle_edges(const Graph& g) {
    if (g.genus() != 1)
        throw std::invalid_argument("cycle_edges: graph is not genus 1");
    std::vector<int> out;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        Graph cut = g;
        cut.edges.erase(cut.edges.begin() + e);
        // removing a cycle edge keeps the graph connected
        if (g.edges[e].first == g.edges[e].second || cut.connected())
            out.push_back(int(e));
    }
    return out;
}

CycleDecomposition cycle_decomposition(const Graph& g, int through_edge) {
    auto cyc = cycle_edges(g);
    if (std::find(cyc.begin(), cyc.end(), through_edge) == cyc.end())
        throw std::invalid_argument("cycle_decomposition: edge not on the cycle");
    CycleDecomposition out;
    auto [a, b] = g.edges[through_edge];
    if (a == b) {
        out.vertices = {a};
        out.edge_ids = {through_edge};
        return out;
    }
    // walk from b back to a avoiding through_edge, using cycle edges only
    std::set<int> cyc_set(cyc.begin(), cyc.end());
    std::vector<int> vseq{b};
    std::vector<int> eseq;
    int prev_edge = through_edge;
    int cur = b;
    while (cur != a) {
        bool advanced = false;
        for (int e : cyc) {
            if (e == prev_edge || e == through_edge) continue;
            auto [u, v] = g.edges[e];
            if (u == v) continue;
            int nxt = -1;
            if (u == cur) nxt = v;
            else if (v == cur) nxt = u;
            if (nxt < 0) continue;
            // the cycle is unique; any cycle edge from cur advances
            eseq.push_back(e);
            vseq.push_back(nxt);
            prev_edge = e;
            cur = nxt;
            advanced = true;
            break;
        }
        if (!advanced)
            throw std::logic_error("cycle walk failed");
    }
    // vseq = b .. a ; edges connect consecutive; close with through_edge
    out.vertices = vseq;
    out.edge_ids = eseq;
    out.edge_ids.push_back(through_edge);
    return out;
}

}  // namespace chgraph
