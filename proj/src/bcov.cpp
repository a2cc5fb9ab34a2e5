#include "chgraph/bcov.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "chgraph/evaluator.hpp"
#include "chgraph/homotopy.hpp"

namespace chgraph {

Series CubicAction::eval(const std::vector<Series>& v, int D) const {
    Series A(vars);
    for (int i = 0; i < n; ++i) A += series_mul(K1[i], v[i], D);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Series t = series_mul(K2[i][j], series_mul(v[i], v[j], D), D);
            A += t.scaled(Rational(1, 2));
            A -= series_mul(v[i], v[j], D).scaled(B2[i][j] / 2);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Series t = series_mul(
                    K3[i][j][k],
                    series_mul(v[i], series_mul(v[j], v[k], D), D), D);
                A += t.scaled(Rational(1, 6));
            }
    return A.truncated(D);
}

std::vector<Series> CubicAction::gradient(const std::vector<Series>& v,
                                          int D) const {
    std::vector<Series> g(n, Series(vars));
    for (int i = 0; i < n; ++i) {
        g[i] += K1[i];
        for (int j = 0; j < n; ++j) {
            g[i] += series_mul(K2[i][j], v[j], D);
            g[i] -= v[j].scaled(B2[i][j]);
            for (int k = 0; k < n; ++k)
                g[i] += series_mul(K3[i][j][k], series_mul(v[j], v[k], D), D)
                            .scaled(Rational(1, 2));
        }
        g[i] = g[i].truncated(D);
    }
    return g;
}

CriticalPoint generic_critical_point(const CubicAction& action, int D) {
    auto binv = rmat_inverse(action.B2);
    if (!binv)
        throw std::invalid_argument("generic_critical_point: B2 is degenerate");
    const int n = action.n;
    std::vector<Series> v(n, Series(action.vars));
    for (int it = 0; it <= D; ++it) {
        // rhs_i = K1_i + K2_ij v^j + 1/2 K3_ijk v^j v^k
        std::vector<Series> rhs(n, Series(action.vars));
        for (int i = 0; i < n; ++i) {
            rhs[i] += action.K1[i];
            for (int j = 0; j < n; ++j) {
                rhs[i] += series_mul(action.K2[i][j], v[j], D);
                for (int k = 0; k < n; ++k)
                    rhs[i] += series_mul(action.K3[i][j][k],
                                         series_mul(v[j], v[k], D), D)
                                  .scaled(Rational(1, 2));
            }
        }
        for (int i = 0; i < n; ++i) {
            Series acc(action.vars);
            for (int j = 0; j < n; ++j)
                if ((*binv)[i][j] != 0) acc += rhs[j].scaled((*binv)[i][j]);
            v[i] = acc.truncated(D);
        }
    }
    CriticalPoint cp;
    cp.v = v;
    auto grad = action.gradient(v, D);
    bool ok = true;
    std::string mono;
    for (int i = 0; i < n && ok; ++i)
        if (!grad[i].is_zero()) {
            ok = false;
            mono = grad[i].leading_monomial_string();
        }
    cp.report.add(ok ? CheckResult::pass("stationarity of v_cr", D)
                     : CheckResult::fail("stationarity of v_cr", "", mono, D));
    return cp;
}

namespace {

struct RootedShape {
    std::vector<Series> up;  // vector flowing through the root edge
    Integer aut;
    int weight;
};

}  // namespace

std::vector<Series> critical_point_tree_sum(const CubicAction& a, int D) {
    // Explicit rooted-tree enumeration keyed by the number of K1/K2 nodes
    // (each contributes T-degree >= 1, so weight <= D suffices).
    struct Gen {
        const CubicAction& a;
        int D;
        RationalMatrix binv;
        std::map<int, std::vector<RootedShape>> memo;

        std::vector<Series> contract_up(const std::vector<Series>& covec) {
            std::vector<Series> v(a.n, Series(a.vars));
            for (int i = 0; i < a.n; ++i)
                for (int j = 0; j < a.n; ++j)
                    if (binv[i][j] != 0) v[i] += covec[j].scaled(binv[i][j]);
            return v;
        }

        // shapes consuming exactly `w` units of (n1 + n2) weight
        const std::vector<RootedShape>& shapes(int w) {
            auto it = memo.find(w);
            if (it != memo.end()) return it->second;
            std::vector<RootedShape> out;
            if (w >= 1) {
                if (w == 1) {
                    std::vector<Series> covec = a.K1;
                    out.push_back({contract_up(covec), 1, 1});
                }
                // K2 root over shapes of weight w-1
                for (const auto& s : shapes(w - 1)) {
                    std::vector<Series> covec(a.n, Series(a.vars));
                    for (int i = 0; i < a.n; ++i)
                        for (int j = 0; j < a.n; ++j)
                            covec[i] += series_mul(a.K2[i][j], s.up[j], D);
                    out.push_back({contract_up(covec), s.aut, w});
                }
                // K3 root over unordered pairs with weights summing to w
                for (int w1 = 1; w1 <= w - 1; ++w1) {
                    int w2 = w - w1;
                    if (w2 < w1) break;
                    const auto& A = shapes(w1);
                    const auto& B = shapes(w2);
                    for (std::size_t i = 0; i < A.size(); ++i)
                        for (std::size_t j = (w1 == w2 ? i : 0); j < B.size();
                             ++j) {
                            std::vector<Series> covec(a.n, Series(a.vars));
                            for (int x = 0; x < a.n; ++x)
                                for (int y = 0; y < a.n; ++y)
                                    for (int z = 0; z < a.n; ++z)
                                        covec[x] += series_mul(
                                            a.K3[x][y][z],
                                            series_mul(A[i].up[y], B[j].up[z],
                                                       D),
                                            D);
                            Integer aut = A[i].aut * B[j].aut;
                            if (w1 == w2 && i == j) aut *= 2;
                            out.push_back({contract_up(covec), aut, w});
                        }
                }
            }
            return memo.emplace(w, std::move(out)).first->second;
        }
    };
    auto binv = rmat_inverse(a.B2);
    if (!binv)
        throw std::invalid_argument("critical_point_tree_sum: B2 degenerate");
    Gen gen{a, D, *binv, {}};
    std::vector<Series> v(a.n, Series(a.vars));
    for (int w = 1; w <= D; ++w)
        for (const auto& s : gen.shapes(w))
            for (int i = 0; i < a.n; ++i)
                v[i] += s.up[i].scaled(Rational(Integer(1), s.aut)).truncated(D);
    return v;
}

namespace {

// labeled trees on V vertices with max degree 3, via Pruefer sequences in
// which every symbol appears at most twice
void foreach_pruefer(int V, const std::function<void(const std::vector<int>&)>& fn) {
    if (V == 2) {
        fn({});
        return;
    }
    std::vector<int> seq(V - 2, 0), count(V, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == V - 2) {
            fn(seq);
            return;
        }
        for (int s = 0; s < V; ++s) {
            if (count[s] >= 2) continue;
            seq[pos] = s;
            ++count[s];
            rec(pos + 1);
            --count[s];
        }
    };
    rec(0);
}

std::vector<std::pair<int, int>> pruefer_to_tree(int V, const std::vector<int>& seq) {
    std::vector<int> degree(V, 1);
    for (int s : seq) degree[s]++;
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(V, false);
    std::vector<int> deg = degree;
    for (int s : seq) {
        for (int leaf = 0; leaf < V; ++leaf) {
            if (deg[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(leaf, s);
                used[leaf] = true;
                --deg[s];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < V; ++v)
        if (!used[v] && deg[v] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return edges;
}

}  // namespace

Series critical_value_tree_sum(const CubicAction& a, int D) {
    auto binvOpt = rmat_inverse(a.B2);
    if (!binvOpt)
        throw std::invalid_argument("critical_value_tree_sum: B2 degenerate");
    const auto& binv = *binvOpt;
    const int n = a.n;
    auto min_deg = [](const Series& s) {
        int d = 1000;
        for (const auto& [m, c] : s.terms())
            d = std::min(d, monomial_degree(m));
        return d;
    };
    int mind1 = 1000, mind2 = 1000;
    for (const auto& s : a.K1) mind1 = std::min(mind1, min_deg(s));
    for (const auto& row : a.K2)
        for (const auto& s : row) mind2 = std::min(mind2, min_deg(s));
    if (mind1 < 1) throw std::invalid_argument("K1 must have positive degree");
    if (mind2 < 1) throw std::invalid_argument("K2 must have positive degree");

    Series total(a.vars);
    // V vertices: n1 leaves (deg1), n2 chain (deg2), n3 = n1-2 branch (deg3)
    for (int V = 2; V <= 3 * D + 2; ++V) {
        // quick feasibility: n1 >= 2, n3 = n1 - 2, minimum degree bounded
        bool feasible = false;
        for (int n1 = 2; n1 <= V; ++n1) {
            int n3 = n1 - 2, n2 = V - n1 - n3;
            if (n2 < 0) continue;
            long md = static_cast<long>(n1) * mind1 +
                      static_cast<long>(n2) * std::min(mind2, 100);
            if (md <= D) feasible = true;
        }
        if (!feasible) continue;
        Integer vfact = 1;
        for (int i = 2; i <= V; ++i) vfact *= i;
        Series level(a.vars);
        foreach_pruefer(V, [&](const std::vector<int>& seq) {
            auto edges = pruefer_to_tree(V, seq);
            std::vector<int> deg(V, 0);
            std::vector<std::vector<int>> adj(V);
            for (auto [u, v] : edges) {
                deg[u]++;
                deg[v]++;
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
            // evaluate rooted at vertex 0
            std::function<std::vector<Series>(int, int)> up =
                [&](int v, int parent) -> std::vector<Series> {
                std::vector<std::vector<Series>> kids;
                for (int w : adj[v])
                    if (w != parent) kids.push_back(up(w, v));
                std::vector<Series> covec(n, Series(a.vars));
                if (kids.empty()) {
                    covec = a.K1;
                } else if (kids.size() == 1) {
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            covec[i] += series_mul(a.K2[i][j], kids[0][j], D);
                } else {
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            for (int k = 0; k < n; ++k)
                                covec[i] += series_mul(
                                    a.K3[i][j][k],
                                    series_mul(kids[0][j], kids[1][k], D), D);
                }
                std::vector<Series> out(n, Series(a.vars));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (binv[i][j] != 0) out[i] += covec[j].scaled(binv[i][j]);
                return out;
            };
            // root contribution: form K_{deg(0)} on children values
            std::vector<std::vector<Series>> kids;
            for (int w : adj[0]) kids.push_back(up(w, 0));
            Series val(a.vars);
            if (kids.size() == 1) {
                for (int i = 0; i < n; ++i) val += series_mul(a.K1[i], kids[0][i], D);
            } else if (kids.size() == 2) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        val += series_mul(a.K2[i][j],
                                          series_mul(kids[0][i], kids[1][j], D), D);
            } else {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k)
                            val += series_mul(
                                a.K3[i][j][k],
                                series_mul(kids[0][i],
                                           series_mul(kids[1][j], kids[2][k], D),
                                           D),
                                D);
            }
            level += val;
        });
        total += level.scaled(Rational(Integer(1), vfact));
    }
    return total.truncated(D);
}

CriticalValue generic_critical_value(const CubicAction& a,
                                     const std::vector<Series>& vcr, int D) {
    CriticalValue out;
    out.value = a.eval(vcr, D);
    Series oracle = critical_value_tree_sum(a, D);
    Series diff = out.value - oracle;
    out.report.add(diff.is_zero()
                       ? CheckResult::pass("A(v_cr) equals unrooted tree sum", D)
                       : CheckResult::fail("A(v_cr) equals unrooted tree sum",
                                           "", diff.leading_monomial_string(), D));
    return out;
}

Report bcov_verify(const CHAlgebra& alg, int D) {
    Report rep;
    const auto& blocks = alg.blocks();
    if (blocks.empty()) {
        rep.add(CheckResult::skipped("bcov", "algebra has no Hodge blocks"));
        return rep;
    }
    const int n = static_cast<int>(blocks.size());
    // B2_{ab} = int Q e_a . G- e_b  (constants)
    RationalMatrix B2(n, std::vector<Rational>(n, Rational(0)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto qe = alg.opQ().apply(alg.basis_vector(blocks[x].e), D);
            auto ge = alg.opGm().apply(alg.basis_vector(blocks[y].e), D);
            B2[x][y] = alg.integrate(alg.mul(qe, ge, D)).constant_term();
        }
    if (rmat_det(B2) == 0) {
        rep.add(CheckResult::skipped(
            "bcov", "B2 degenerate on the span of block generators"));
        return rep;
    }

    // Work in the even coordinates w = G-(v), basis Ge_a; the action becomes
    //   Atilde(w) = 1/6 int E^3 + 1/2 int E^2 w + 1/2 int E w^2
    //               + 1/6 int w^3 - 1/2 B2(w,w)
    // with B2 re-expressed on the Ge basis (same matrix).
    CubicAction act;
    act.n = n;
    act.vars = alg.vars();
    SuperVector E = alg.euler_vector();
    auto gb = [&](int x) { return alg.opGm().apply(alg.basis_vector(blocks[x].e), D); };
    Series intE3 =
        alg.integrate(alg.mul(alg.mul(E, E, D), E, D)).scaled(Rational(1, 6));
    act.K1.assign(n, Series(alg.vars()));
    for (int x = 0; x < n; ++x)
        act.K1[x] =
            alg.integrate(alg.mul(alg.mul(E, E, D), gb(x), D)).scaled(Rational(1, 2));
    act.K2.assign(n, std::vector<Series>(n, Series(alg.vars())));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            act.K2[x][y] = alg.integrate(alg.mul(E, alg.mul(gb(x), gb(y), D), D));
    act.K3.assign(n, std::vector<std::vector<Series>>(
                         n, std::vector<Series>(n, Series(alg.vars()))));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                act.K3[x][y][z] = alg.integrate(
                    alg.mul(gb(x), alg.mul(gb(y), gb(z), D), D));
    act.B2 = B2;

    auto cp = generic_critical_point(act, D);
    rep.merge(cp.report);
    // w_cr as a supervector
    SuperVector w(alg.space(), alg.vars());
    for (int x = 0; x < n; ++x) {
        auto g = gb(x);
        for (int i = 0; i < alg.dim(); ++i)
            w[i] += series_mul(g[i], cp.v[x], D);
    }
    // (i) E + w_cr = gamma
    SuperVector gamma = compute_gamma(alg, D);
    SuperVector d1 = (E + w) - gamma;
    d1 = d1.truncated(D);
    std::string mono;
    for (int i = 0; i < d1.dim(); ++i)
        if (!d1[i].is_zero()) { mono = d1[i].leading_monomial_string(); break; }
    rep.add(d1.is_zero()
                ? CheckResult::pass("E + G-(v_cr) = gamma", D)
                : CheckResult::fail("E + G-(v_cr) = gamma", "", mono, D));
    // (ii) A(v_cr) = F0 from the graph sum
    Series Acr = intE3 + act.eval(cp.v, D);
    Series F0 = compute_potential(alg, 0, D);
    Series d2 = (Acr - F0).truncated(D);
    rep.add(d2.is_zero() ? CheckResult::pass("A(v_cr) = F0", D)
                         : CheckResult::fail("A(v_cr) = F0", "",
                                             d2.leading_monomial_string(), D));
    // (iii) (G- (x) G-) b2 = [G-G+], with the Koszul sign of moving the
    // second G- past the first slot
    {
        auto b2inv = *rmat_inverse(B2);
        auto K = operator_to_bivector(alg.opK(), alg.pairing());
        auto gg = Bivector::zero(alg.space(), alg.vars());
        bool matched = false;
        for (int sign : {+1, -1}) {
            gg = Bivector::zero(alg.space(), alg.vars());
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (b2inv[x][y] == 0) continue;
                    auto gx = gb(x), gy = gb(y);
                    for (int i = 0; i < alg.dim(); ++i)
                        for (int j = 0; j < alg.dim(); ++j) {
                            Series t = series_mul(gx[i], gy[j], D)
                                           .scaled(b2inv[x][y] * sign);
                            gg.coeff[i][j] += t;
                        }
                }
            if (gg == K) { matched = true; break; }
        }
        rep.add(matched
                    ? CheckResult::pass("G- (x) G- of b2 equals [G-G+]", D)
                    : CheckResult::fail("G- (x) G- of b2 equals [G-G+]",
                                        "neither sign convention matches"));
    }
    return rep;
}

}  // namespace chgraph
