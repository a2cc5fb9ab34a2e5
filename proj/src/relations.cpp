#include "chgraph/relations.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace chgraph {

const std::array<Stratum, 7> kAllStrata = {
    Stratum::D22, Stratum::D23, Stratum::D24, Stratum::D34,
    Stratum::D03, Stratum::D04, Stratum::Db};

const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::D22: return "Delta_{2,2}";
        case Stratum::D23: return "Delta_{2,3}";
        case Stratum::D24: return "Delta_{2,4}";
        case Stratum::D34: return "Delta_{3,4}";
        case Stratum::D03: return "Delta_{0,3}";
        case Stratum::D04: return "Delta_{0,4}";
        case Stratum::Db: return "Delta_b";
    }
    return "?";
}

Rational getzler_coefficient(Stratum s) {
    switch (s) {
        case Stratum::D22: return 12;
        case Stratum::D23: return -4;
        case Stratum::D24: return -2;
        case Stratum::D34: return 6;
        case Stratum::D03: return 1;
        case Stratum::D04: return 1;
        case Stratum::Db: return -2;
    }
    return 0;
}

// ------------------------------------------------------------- templates ---

namespace {

constexpr int kColBlack = 0, kColWhite = 1, kColGm = 2, kColId = 3;

int marking_color(Marking m) {
    switch (m) {
        case Marking::Black:
        case Marking::JBlack: return kColBlack;
        case Marking::White: return kColWhite;
        case Marking::GMinus: return kColGm;
        case Marking::Identity:
        case Marking::JIdentity: return kColId;
    }
    return 0;
}

DeltaTemplate make_template(int nv,
                            std::vector<std::tuple<int, int, Marking>> edges,
                            std::vector<int> leaf_at) {
    DeltaTemplate t;
    t.graph.vertices = nv;
    for (auto& [u, v, m] : edges) {
        t.graph.edges.emplace_back(std::min(u, v), std::max(u, v));
        t.graph.edge_color.push_back(marking_color(m));
        t.marks.push_back(m);
    }
    for (int v : leaf_at) t.graph.leaves.emplace_back(v, "e");
    return t;
}

using M = Marking;

// The fourteen cycle templates. Loops belonging to a genus-1 piece carry the
// J factor on one black edge; loops closed through the metric carry plain
// Pi0 whites.
const std::vector<DeltaTemplate>& templates_for(Stratum s) {
    static const std::map<Stratum, std::vector<DeltaTemplate>> all = [] {
        std::map<Stratum, std::vector<DeltaTemplate>> m;
        // D22: [e,e]-W-v1 =JB/B= v2-W-[e,e]
        m[Stratum::D22] = {
            make_template(4,
                          {{0, 1, M::White}, {1, 2, M::JBlack}, {1, 2, M::Black},
                           {2, 3, M::White}},
                          {0, 0, 3, 3}),
            // [e,e]-W-s(-W-[e,e]) ; s-B-t(JB loop)
            make_template(4,
                          {{0, 1, M::White}, {1, 2, M::Black}, {2, 2, M::JBlack},
                           {1, 3, M::White}},
                          {0, 0, 3, 3})};
        // D23
        m[Stratum::D23] = {
            // v1(e) =JB/B= v2 - W - m(e) - W - w(e,e)
            make_template(4,
                          {{0, 1, M::JBlack}, {0, 1, M::Black}, {1, 2, M::White},
                           {2, 3, M::White}},
                          {0, 2, 3, 3}),
            // t(JB loop)-B-s(e)-W-m(e)-W-w(e,e)
            make_template(4,
                          {{0, 0, M::JBlack}, {0, 1, M::Black}, {1, 2, M::White},
                           {2, 3, M::White}},
                          {1, 2, 3, 3})};
        // D24
        m[Stratum::D24] = {
            // v1(e,e)-B-v2(-W-t(JB loop))(-W-w(e,e))
            make_template(4,
                          {{0, 1, M::Black}, {1, 2, M::White}, {2, 2, M::JBlack},
                           {1, 3, M::White}},
                          {0, 0, 3, 3}),
            // t(JB loop)-W-v1(e)-B-v2(e)-W-w(e,e)
            make_template(4,
                          {{0, 0, M::JBlack}, {0, 1, M::White}, {1, 2, M::Black},
                           {2, 3, M::White}},
                          {1, 2, 3, 3})};
        // D34: t(JB loop)-W-v(e)-W-w1(e)-B-w2(e,e)
        m[Stratum::D34] = {make_template(
            4,
            {{0, 0, M::JBlack}, {0, 1, M::White}, {1, 2, M::White},
             {2, 3, M::Black}},
            {1, 2, 3, 3})};
        // D03
        m[Stratum::D03] = {
            // q(W loop)-B-p(e)-W-w1(e)-B-w2(e,e)
            make_template(4,
                          {{0, 0, M::White}, {0, 1, M::Black}, {1, 2, M::White},
                           {2, 3, M::Black}},
                          {1, 2, 3, 3}),
            // p(e) =B/W= q - W - w1(e) - B - w2(e,e)
            make_template(4,
                          {{0, 1, M::Black}, {0, 1, M::White}, {1, 2, M::White},
                           {2, 3, M::Black}},
                          {0, 2, 3, 3})};
        // D04
        m[Stratum::D04] = {
            // u1(e,e)-B-u2(-W-q(W loop))-B-u3(e,e)
            make_template(4,
                          {{0, 1, M::Black}, {1, 2, M::Black}, {1, 3, M::White},
                           {3, 3, M::White}},
                          {0, 0, 2, 2}),
            // u1(e, -W-q(W loop))-B-u2(e)-B-u3(e,e)
            make_template(4,
                          {{0, 1, M::Black}, {1, 2, M::Black}, {0, 3, M::White},
                           {3, 3, M::White}},
                          {0, 1, 2, 2})};
        // Db
        m[Stratum::Db] = {
            // L(e,e)-B-M(-W-R1(e))(-W-R2(e)); R1-B-R2
            make_template(4,
                          {{0, 1, M::Black}, {1, 2, M::White}, {1, 3, M::White},
                           {2, 3, M::Black}},
                          {0, 0, 2, 3}),
            // 4-cycle B/W/B/W, one leaf each
            make_template(4,
                          {{0, 1, M::Black}, {1, 2, M::White}, {2, 3, M::Black},
                           {0, 3, M::White}},
                          {0, 1, 2, 3}),
            // L(e,e)-B-L2 =W/W= R2-B-R(e,e)
            make_template(4,
                          {{0, 1, M::Black}, {1, 2, M::White}, {1, 2, M::White},
                           {2, 3, M::Black}},
                          {0, 0, 3, 3})};
        return m;
    }();
    return all.at(s);
}

}  // namespace

const std::vector<DeltaTemplate>& delta_templates(Stratum s) {
    return templates_for(s);
}

std::vector<Integer> delta_template_auts(Stratum s) {
    std::vector<Integer> out;
    for (const auto& t : delta_templates(s))
        out.push_back(t.graph.automorphism_order());
    return out;
}

// ---------------------------------------------------------------- P basis --

const std::array<PGraph, 9>& p_graphs() {
    static const std::array<PGraph, 9> ps = [] {
        auto mk = [](int nv, std::vector<std::tuple<int, int, Marking>> edges,
                     std::vector<int> leaf_at) {
            DeltaTemplate t = make_template(nv, std::move(edges), std::move(leaf_at));
            return PGraph{t.graph, t.marks};
        };
        std::array<PGraph, 9> a = {
            // P1: t(JB loop)-B-[e,e,e,e]
            mk(2, {{0, 0, M::JBlack}, {0, 1, M::Black}}, {1, 1, 1, 1}),
            // P2: z(JB loop, e)-B-[e,e,e]
            mk(2, {{0, 0, M::JBlack}, {0, 1, M::Black}}, {0, 1, 1, 1}),
            // P3: z(JB loop, e,e)-B-[e,e]
            mk(2, {{0, 0, M::JBlack}, {0, 1, M::Black}}, {0, 0, 1, 1}),
            // P4: 2-cycle JB/B with [e,e | e,e]
            mk(2, {{0, 1, M::JBlack}, {0, 1, M::Black}}, {0, 0, 1, 1}),
            // P5: 2-cycle JB/B with [e | e,e,e]
            mk(2, {{0, 1, M::JBlack}, {0, 1, M::Black}}, {0, 1, 1, 1}),
            // P6: z(J loop)-B-[e,e]-B-[e,e]
            mk(3, {{0, 0, M::JIdentity}, {0, 1, M::Black}, {1, 2, M::Black}},
               {1, 1, 2, 2}),
            // P7: z(J loop)-B-[e]-B-[e,e,e]
            mk(3, {{0, 0, M::JIdentity}, {0, 1, M::Black}, {1, 2, M::Black}},
               {1, 2, 2, 2}),
            // P8: z(J loop)-B-[e]-B-[e]-B-[e,e]
            mk(4,
               {{0, 0, M::JIdentity}, {0, 1, M::Black}, {1, 2, M::Black},
                {2, 3, M::Black}},
               {1, 2, 3, 3}),
            // P9: z(J loop)-B-[e,e], z-B-[e,e]
            mk(3, {{0, 0, M::JIdentity}, {0, 1, M::Black}, {0, 2, M::Black}},
               {1, 1, 2, 2}),
        };
        return a;
    }();
    return ps;
}

const std::map<Stratum, std::array<Rational, 9>>& p_decomposition_table() {
    static const std::map<Stratum, std::array<Rational, 9>> table = {
        {Stratum::D22,
         {Rational(1, 16), 0, Rational(-1, 8), Rational(1, 16), 0, 0, 0, 0,
          Rational(1, 192)}},
        {Stratum::D23,
         {Rational(1, 4), Rational(-1, 4), 0, 0, Rational(1, 4), 0, 0, 0, 0}},
        {Stratum::D24,
         {Rational(-1, 8), Rational(1, 4), 0, 0, 0, 0, Rational(-1, 48), 0, 0}},
        {Stratum::D34,
         {0, Rational(-1, 12), Rational(1, 4), 0, 0, Rational(-1, 48),
          Rational(1, 144), 0, 0}},
        {Stratum::D03,
         {0, 0, 0, 0, 0, Rational(1, 4), Rational(-1, 12), Rational(-1, 4), 0}},
        {Stratum::D04,
         {0, 0, 0, 0, 0, Rational(-1, 8), 0, Rational(1, 4), Rational(1, 16)}},
        {Stratum::Db,
         {0, 0, 0, Rational(3, 8), Rational(-1, 2), 0, 0, 0, Rational(1, 16)}},
    };
    return table;
}

Report check_p_table_cancellation() {
    Report rep;
    const auto& table = p_decomposition_table();
    bool ok = true;
    std::string wit;
    for (int j = 0; j < 9; ++j) {
        Rational sum = 0;
        for (Stratum s : kAllStrata)
            sum += getzler_coefficient(s) * table.at(s)[j];
        if (sum != 0) {
            ok = false;
            wit = "P" + std::to_string(j + 1) + " column sums to " + to_string(sum);
        }
    }
    rep.add(ok ? CheckResult::pass("Getzler combination of table rows is zero")
               : CheckResult::fail("Getzler combination of table rows is zero",
                                   wit));
    return rep;
}

// --------------------------------------------------------------- evaluate --

namespace {

SuperVector quad_vector(const CHAlgebra& a, const std::array<int, 4>& quad) {
    // e = sum of the four chosen L-elements e_{i_m} T_{i_m}; repeats allowed
    // (a repeated index contributes once: the sum is over the distinct set,
    // matching "we put the sum a+b+c+d at each leaf" with distinct entries).
    SuperVector e(a.space(), a.vars());
    std::vector<int> seen;
    for (int t : quad) {
        if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
        seen.push_back(t);
        e[a.h0()[t]] += Series::variable(a.vars(), t);
    }
    return e;
}

}  // namespace

std::map<Stratum, Series> evaluate_delta_cycles(const CHAlgebra& a,
                                                const std::array<int, 4>& quad,
                                                int D, DeltaMode mode) {
    EdgeOperatorSet ops = EdgeOperatorSet::standard(a, D);
    SuperVector leaf = quad_vector(a, quad);
    if (mode == DeltaMode::General) {
        auto h = compute_operators(a, D);
        ops = EdgeOperatorSet::dressed(a, h.Oc, h.O0, D);
        leaf = h.Ol.apply(leaf, D);
    }
    std::map<Stratum, Series> out;
    for (Stratum s : kAllStrata) {
        Series total(a.vars());
        for (const auto& t : delta_templates(s)) {
            std::vector<SuperVector> lv(t.graph.leaves.size(), leaf);
            total += evaluate_graph(a, t.graph, t.marks, lv, D, ops);
        }
        out[s] = total;
    }
    return out;
}

// -------------------------------------------------------------- PDE route --

namespace {

// derivative cache: sorted variable index list -> series
struct DerivCache {
    const Series* base;
    std::map<std::vector<int>, Series> cache;

    const Series& get(std::vector<int> idx) {
        std::sort(idx.begin(), idx.end());
        auto it = cache.find(idx);
        if (it != cache.end()) return it->second;
        Series s = *base;
        for (int i : idx) s = s.derivative(i);
        return cache.emplace(std::move(idx), std::move(s)).first->second;
    }
};

struct PdeVertex {
    int genus;       // 0 or 1
    int legs;        // number of argument positions
    int slots;       // number of edge slots
};

struct PdeShape {
    std::vector<PdeVertex> verts;
    // edges as ((vertex, slot), (vertex, slot)); self-edges allowed
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
    int orbit;            // number of leg distributions
    Rational aut_factor;  // 1/|Aut| of the dual graph (legs fixed)
    // leg positions -> vertex, for the representative distribution: legs are
    // assigned to vertices in order
    std::vector<int> leg_vertex;
};

PdeShape pde_shape(Stratum s) {
    switch (s) {
        case Stratum::D22:
            return {{{0, 2, 1}, {1, 0, 2}, {0, 2, 1}},
                    {{{0, 0}, {1, 0}}, {{1, 1}, {2, 0}}},
                    3,
                    Rational(1),
                    {0, 0, 2, 2}};
        case Stratum::D23:
            return {{{1, 1, 1}, {0, 1, 2}, {0, 2, 1}},
                    {{{0, 0}, {1, 0}}, {{1, 1}, {2, 0}}},
                    12,
                    Rational(1),
                    {0, 1, 2, 2}};
        case Stratum::D24:
            return {{{1, 0, 1}, {0, 2, 2}, {0, 2, 1}},
                    {{{0, 0}, {1, 0}}, {{1, 1}, {2, 0}}},
                    6,
                    Rational(1),
                    {1, 1, 2, 2}};
        case Stratum::D34:
            return {{{1, 0, 1}, {0, 1, 2}, {0, 3, 1}},
                    {{{0, 0}, {1, 0}}, {{1, 1}, {2, 0}}},
                    4,
                    Rational(1),
                    {1, 2, 2, 2}};
        case Stratum::D03:
            // loop on the marked vertex: F0(x, i, j, k) eta^{ij} closes a
            // self-edge, eta^{kl} connects to F0(l, y, z, w)
            return {{{0, 1, 3}, {0, 3, 1}},
                    {{{0, 0}, {0, 1}}, {{0, 2}, {1, 0}}},
                    4,
                    Rational(1, 2),
                    {0, 1, 1, 1}};
        case Stratum::D04:
            return {{{0, 0, 3}, {0, 4, 1}},
                    {{{0, 0}, {0, 1}}, {{0, 2}, {1, 0}}},
                    1,
                    Rational(1, 2),
                    {1, 1, 1, 1}};
        case Stratum::Db:
            return {{{0, 2, 2}, {0, 2, 2}},
                    {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}},
                    3,
                    Rational(1, 2),
                    {0, 0, 1, 1}};
    }
    throw std::logic_error("pde_shape");
}

}  // namespace

Series stratum_to_pde(const CHAlgebra& a, Stratum s, const Series& F0,
                      const Series& F1, const std::array<int, 4>& quad, int D) {
    if (!a.eta_inverse())
        throw std::invalid_argument("stratum_to_pde: eta degenerate");
    for (int i : a.h0())
        if (a.parity(i))
            throw std::invalid_argument(
                "stratum_to_pde: PDE route requires even H0");
    const auto& etainv = *a.eta_inverse();
    const int n = static_cast<int>(a.h0().size());
    PdeShape shape = pde_shape(s);
    DerivCache c0{&F0, {}}, c1{&F1, {}};

    // distinct leg values (a repeated quad index enters once, matching the
    // graph route's leaf vector)
    std::vector<int> legs;
    for (int t : quad)
        if (std::find(legs.begin(), legs.end(), t) == legs.end())
            legs.push_back(t);
    const int L = static_cast<int>(legs.size());
    const int nslots = [&] {
        int k = 0;
        for (const auto& v : shape.verts) k += v.slots;
        return k;
    }();

    Series total(a.vars());
    // assignments of leg values to the 4 leg positions
    std::vector<int> f(4, 0);
    std::function<void(int)> rec_legs = [&](int pos) {
        if (pos == 4) {
            // T factor of this assignment
            Monomial mono(a.vars()->count(), 0);
            for (int p = 0; p < 4; ++p) mono[legs[f[p]]]++;
            bool dead = false;
            for (int i = 0; i < a.vars()->count(); ++i)
                if (a.vars()->parity[i] && mono[i] > 1) dead = true;
            if (dead) return;
            Series tf = Series::monomial(a.vars(), mono, Rational(1));
            // sum over edge index assignments
            std::vector<int> slot_index(nslots, 0);
            std::function<void(int, Rational)> rec_edges = [&](int eidx,
                                                               Rational w) {
                if (eidx == static_cast<int>(shape.edges.size())) {
                    // per-vertex derivative product
                    Series prod = Series::constant(a.vars(), w);
                    int slot_base = 0;
                    for (std::size_t v = 0; v < shape.verts.size(); ++v) {
                        std::vector<int> idx;
                        for (int p = 0; p < 4; ++p)
                            if (shape.leg_vertex[p] == static_cast<int>(v))
                                idx.push_back(legs[f[p]]);
                        for (int sl = 0; sl < shape.verts[v].slots; ++sl)
                            idx.push_back(slot_index[slot_base + sl]);
                        const Series& dv = shape.verts[v].genus == 0
                                               ? c0.get(idx)
                                               : c1.get(idx);
                        if (dv.is_zero()) return;
                        prod = series_mul(prod, dv, D);
                        slot_base += shape.verts[v].slots;
                    }
                    total += series_mul(prod, tf, D);
                    return;
                }
                auto [p1, p2] = shape.edges[eidx];
                auto base_of = [&](int vv) {
                    int b = 0;
                    for (int x = 0; x < vv; ++x) b += shape.verts[x].slots;
                    return b;
                };
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (etainv[i][j] == 0) continue;
                        slot_index[base_of(p1.first) + p1.second] = i;
                        slot_index[base_of(p2.first) + p2.second] = j;
                        rec_edges(eidx + 1, w * etainv[i][j]);
                    }
            };
            rec_edges(0, Rational(1));
            return;
        }
        for (int v = 0; v < L; ++v) {
            f[pos] = v;
            rec_legs(pos + 1);
        }
    };
    rec_legs(0);
    // orbit terms are all equal at the diagonal; multiply by the orbit size
    return total.scaled(shape.aut_factor * shape.orbit).truncated(D);
}

// ------------------------------------------------------------- top checks --

Report check_wdvv_pde(const CHAlgebra& a, int D) {
    Report rep;
    for (int i : a.h0())
        if (a.parity(i)) {
            rep.add(CheckResult::skipped(
                "WDVV (PDE route)",
                "odd H0 present; use the graph-form checker"));
            return rep;
        }
    if (!a.eta_inverse()) {
        rep.add(CheckResult::skipped("WDVV (PDE route)", "eta degenerate"));
        return rep;
    }
    const auto& etainv = *a.eta_inverse();
    const int n = static_cast<int>(a.h0().size());
    Series F0 = compute_potential(a, 0, D + 3);
    DerivCache c0{&F0, {}};
    auto channel = [&](int x, int y, int z, int w) {
        Series s(a.vars());
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                if (etainv[k][l] == 0) continue;
                s += series_mul(c0.get({x, y, k}), c0.get({l, z, w}), D)
                         .scaled(etainv[k][l]);
            }
        return s.truncated(D);
    };
    bool ok = true;
    std::string wit, mono;
    for (int i1 = 0; i1 < n && ok; ++i1)
        for (int i2 = i1; i2 < n && ok; ++i2)
            for (int i3 = 0; i3 < n && ok; ++i3)
                for (int i4 = i3; i4 < n && ok; ++i4) {
                    Series s12 = channel(i1, i2, i3, i4);
                    Series s13 = channel(i1, i3, i2, i4);
                    Series s14 = channel(i1, i4, i2, i3);
                    Series d1 = s12 - s13, d2 = s12 - s14;
                    if (!d1.is_zero() || !d2.is_zero()) {
                        ok = false;
                        std::ostringstream os;
                        os << "(" << i1 << "," << i2 << "," << i3 << "," << i4
                           << ")";
                        wit = os.str();
                        mono = (!d1.is_zero() ? d1 : d2).leading_monomial_string();
                    }
                }
    rep.add(ok ? CheckResult::pass("WDVV (PDE route)", D)
               : CheckResult::fail("WDVV (PDE route)", wit, mono, D));
    return rep;
}

Report check_wdvv_graph(const CHAlgebra& a, const std::array<int, 4>& quad,
                        int D) {
    Report rep;
    auto h = compute_operators(a, D);
    std::array<SuperVector, 4> w = {
        h.Ol.apply(a.basis_vector(a.h0()[quad[0]]), D),
        h.Ol.apply(a.basis_vector(a.h0()[quad[1]]), D),
        h.Ol.apply(a.basis_vector(a.h0()[quad[2]]), D),
        h.Ol.apply(a.basis_vector(a.h0()[quad[3]]), D)};
    // reduced form: int OlA OlB OlC OlD
    Series reduced = a.integrate(
        a.mul(a.mul(w[0], w[1], D), a.mul(w[2], w[3], D), D)).truncated(D);
    auto channel = [&](int x, int y, int z, int u) {
        // int (Ol x . Ol y) O0(Ol z . Ol u)
        return a.integrate(a.mul(a.mul(w[x], w[y], D),
                                 h.O0.apply(a.mul(w[z], w[u], D), D), D))
            .truncated(D);
    };
    struct Ch {
        const char* name;
        int x, y, z, u;
    };
    const Ch chans[] = {{"ab|cd", 0, 1, 2, 3}, {"ac|bd", 0, 2, 1, 3},
                        {"ad|bc", 0, 3, 1, 2}};
    for (const auto& ch : chans) {
        Series diff = channel(ch.x, ch.y, ch.z, ch.u) - reduced;
        rep.add(diff.is_zero()
                    ? CheckResult::pass(std::string("WDVV graph channel ") +
                                            ch.name + " equals 4-point form",
                                        D)
                    : CheckResult::fail(std::string("WDVV graph channel ") +
                                            ch.name + " equals 4-point form",
                                        "", diff.leading_monomial_string(), D));
    }
    return rep;
}

Report decompose_in_p_basis(const CHAlgebra& a, const std::array<int, 4>& quad,
                            int D) {
    Report rep;
    {
        Report ax = validate_algebra(a, true);
        bool twelfth = true;
        for (const auto& c : ax.checks)
            if (c.check == "1/12 axiom" && c.status != "pass") twelfth = false;
        if (!twelfth) {
            rep.add(CheckResult::skipped("P-basis decomposition",
                                         "the 1/12 axiom fails on this algebra"));
            return rep;
        }
    }
    auto deltas = evaluate_delta_cycles(a, quad, D, DeltaMode::Simplest);
    SuperVector leaf = quad_vector(a, quad);
    auto ops = EdgeOperatorSet::standard(a, D);
    std::array<Series, 9> pval;
    for (int j = 0; j < 9; ++j) {
        const auto& pg = p_graphs()[j];
        std::vector<SuperVector> lv(pg.graph.leaves.size(), leaf);
        pval[j] = evaluate_graph(a, pg.graph, pg.marks, lv, D, ops,
                                 /*include_aut_weight=*/false);
    }
    const auto& table = p_decomposition_table();
    for (Stratum s : kAllStrata) {
        Series rhs(a.vars());
        for (int j = 0; j < 9; ++j)
            rhs += pval[j].scaled(table.at(s)[j]);
        Series diff = deltas.at(s) - rhs;
        std::string name = std::string(stratum_name(s)) + " equals its P-combination";
        rep.add(diff.is_zero()
                    ? CheckResult::pass(name, D)
                    : CheckResult::fail(name, "", diff.leading_monomial_string(),
                                        D));
    }
    rep.merge(check_p_table_cancellation());
    return rep;
}

Report check_getzler(const CHAlgebra& a, int D, GetzlerRoute route) {
    Report rep;
    std::array<int, 4> quad{};
    const int n = static_cast<int>(a.h0().size());
    for (int i = 0; i < 4; ++i) quad[i] = i % n;

    if (route == GetzlerRoute::Pde) {
        for (int i : a.h0())
            if (a.parity(i)) {
                rep.add(CheckResult::skipped("Getzler (PDE route)",
                                             "odd H0 present"));
                return rep;
            }
        if (!a.eta_inverse()) {
            rep.add(CheckResult::skipped("Getzler (PDE route)",
                                         "eta degenerate"));
            return rep;
        }
        Series F0 = compute_potential(a, 0, D + 5);
        Series F1 = compute_potential(a, 1, D + 4);
        Series resid(a.vars());
        for (Stratum s : kAllStrata)
            resid += stratum_to_pde(a, s, F0, F1, quad, D + 4)
                         .scaled(getzler_coefficient(s));
        resid = resid.truncated(D + 4);
        rep.add(resid.is_zero()
                    ? CheckResult::pass("Getzler relation (PDE route)", D)
                    : CheckResult::fail("Getzler relation (PDE route)", "",
                                        resid.leading_monomial_string(), D));
    } else {
        auto deltas = evaluate_delta_cycles(a, quad, D + 4, DeltaMode::General);
        Series resid(a.vars());
        for (Stratum s : kAllStrata)
            resid += deltas.at(s).scaled(getzler_coefficient(s));
        resid = resid.truncated(D + 4);
        rep.add(resid.is_zero()
                    ? CheckResult::pass("Getzler relation (graph route)", D)
                    : CheckResult::fail("Getzler relation (graph route)", "",
                                        resid.leading_monomial_string(), D));
    }
    return rep;
}

Report check_route_agreement(const CHAlgebra& a, const std::array<int, 4>& quad,
                             int D) {
    Report rep;
    for (int i : a.h0())
        if (a.parity(i)) {
            rep.add(CheckResult::skipped("route agreement", "odd H0 present"));
            return rep;
        }
    if (!a.eta_inverse()) {
        rep.add(CheckResult::skipped("route agreement", "eta degenerate"));
        return rep;
    }
    Series F0 = compute_potential(a, 0, D + 5);
    Series F1 = compute_potential(a, 1, D + 4);
    auto deltas = evaluate_delta_cycles(a, quad, D + 4, DeltaMode::General);
    for (Stratum s : kAllStrata) {
        Series pde = stratum_to_pde(a, s, F0, F1, quad, D + 4);
        Series diff = (deltas.at(s) - pde).truncated(D + 4);
        std::string name =
            std::string(stratum_name(s)) + ": graph route equals PDE route";
        rep.add(diff.is_zero()
                    ? CheckResult::pass(name, D)
                    : CheckResult::fail(name, "", diff.leading_monomial_string(),
                                        D));
    }
    return rep;
}

}  // namespace chgraph
