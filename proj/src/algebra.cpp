#include "chgraph/algebra.hpp"

#include <fstream>
#include <sstream>

#include "chgraph/vendor_json.hpp"

namespace chgraph {

namespace {

RationalMatrix sparse_to_matrix(
    const std::vector<std::tuple<int, int, Rational>>& entries, int n,
    const char* what) {
    auto m = rmat_zero(n);
    for (const auto& [i, j, c] : entries) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw ShapeError(std::string(what) + ": index out of range");
        m[i][j] += c;
    }
    return m;
}

}  // namespace

CHAlgebra::CHAlgebra(const Data& d) {
    const int n = static_cast<int>(d.parity.size());
    if (n <= 0) throw ShapeError("dimension must be >= 1");
    for (int p : d.parity)
        if (p != 0 && p != 1) throw ShapeError("parities must be 0 or 1");
    if (!d.label.empty() && static_cast<int>(d.label.size()) != n)
        throw ShapeError("labels size mismatch");
    if (static_cast<int>(d.integral.size()) != n)
        throw ShapeError("integral size mismatch");

    space_ = SuperSpace::make(d.parity, d.label);
    std::vector<int> tpar;
    std::vector<std::string> tnames;
    for (std::size_t t = 0; t < d.h0.size(); ++t) {
        int i = d.h0[t];
        if (i < 0 || i >= n) throw ShapeError("h0 index out of range");
        tpar.push_back(d.parity[i]);
        tnames.push_back("T" + std::to_string(t + 1));
    }
    vars_ = GradedVariables::make(tpar, tnames);
    h0_ = d.h0;
    blocks_ = d.blocks;
    integral_ = d.integral;

    // integral must be even
    for (int i = 0; i < n; ++i)
        if (integral_[i] != 0 && d.parity[i] == 1)
            throw ShapeError("integral supported on an odd basis vector");

    // block indices: in range, disjoint from h0 and each other, all of H4
    std::vector<int> seen(n, 0);
    for (int i : h0_) {
        if (seen[i]++) throw ShapeError("repeated h0 index");
    }
    for (const auto& b : blocks_) {
        for (int i : {b.e, b.qe, b.gme, b.qgme}) {
            if (i < 0 || i >= n) throw ShapeError("block index out of range");
            if (seen[i]++) throw ShapeError("block indices overlap");
        }
        if (d.parity[b.qe] != (d.parity[b.e] ^ 1) ||
            d.parity[b.gme] != (d.parity[b.e] ^ 1) ||
            d.parity[b.qgme] != d.parity[b.e])
            throw ShapeError("block parities inconsistent");
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i]) throw ShapeError("basis vector in neither h0 nor a block");

    // multiplication table (stored both ways via supercommutativity)
    mul_.assign(n, std::vector<std::vector<std::pair<int, Rational>>>(n));
    auto add_entry = [&](int i, int j, int k, const Rational& c) {
        if ((d.parity[i] + d.parity[j]) % 2 != d.parity[k])
            throw ShapeError("multiplication entry violates parity");
        mul_[i][j].emplace_back(k, c);
    };
    for (const auto& [i, j, k, c] : d.mul) {
        if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
            throw ShapeError("multiplication index out of range");
        if (i > j) throw ShapeError("multiplication entries must have i <= j");
        add_entry(i, j, k, c);
        if (i != j) {
            Rational s = (d.parity[i] && d.parity[j]) ? -c : c;
            add_entry(j, i, k, s);
        }
    }

    Q_ = sparse_to_matrix(d.Q, n, "Q");
    Gm_ = sparse_to_matrix(d.Gm, n, "Gminus");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (Q_[i][j] != 0 && (d.parity[i] ^ d.parity[j]) != 1)
                throw ShapeError("Q entry violates parity");
            if (Gm_[i][j] != 0 && (d.parity[i] ^ d.parity[j]) != 1)
                throw ShapeError("Gminus entry violates parity");
        }

    // G+ from the Hodge decomposition: G+ e = G+ G-e = 0, G+ Qe = e,
    // G+ QG-e = G-e
    Gp_ = rmat_zero(n);
    for (const auto& b : blocks_) {
        Gp_[b.e][b.qe] = 1;
        Gp_[b.gme][b.qgme] = 1;
    }
    J_ = rmat_zero(n);
    for (int i = 0; i < n; ++i) J_[i][i] = d.parity[i] ? -1 : 1;
    Pi0_ = rmat_zero(n);
    for (int i : h0_) Pi0_[i][i] = 1;
    Pi4_ = rmat_identity(n);
    for (int i : h0_) Pi4_[i][i] = 0;
    K_ = rmat_mul(Gm_, Gp_);

    g_ = rmat_zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational s(0);
            for (const auto& [k, c] : mul_[i][j]) s += c * integral_[k];
            g_[i][j] = s;
        }
    ginv_ = rmat_inverse(g_);

    const int nh = static_cast<int>(h0_.size());
    eta_ = RationalMatrix(nh, std::vector<Rational>(nh, Rational(0)));
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b) eta_[a][b] = g_[h0_[a]][h0_[b]];
    etainv_ = rmat_inverse(eta_);

    opQ_ = op(Q_, 1);
    opGm_ = op(Gm_, 1);
    opGp_ = op(Gp_, 1);
    opK_ = op(K_, 0);
    opJ_ = op(J_, 0);
    opPi0_ = op(Pi0_, 0);
    opId_ = SuperOperator::identity(space_, vars_);
}

SuperOperator CHAlgebra::op(const RationalMatrix& m, int parity) const {
    return SuperOperator::from_rational(space_, vars_, m, parity);
}

SuperVector CHAlgebra::mul(const SuperVector& x, const SuperVector& y,
                           int D) const {
    SuperVector r(space_, vars_);
    const int n = dim();
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        // y_j crosses b_i
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Series prod = series_mul(x[i], y[j].parity_twisted(parity(i)), D);
            if (prod.is_zero()) continue;
            for (const auto& [k, c] : mul_[i][j]) r[k] += prod.scaled(c);
        }
    }
    return r;
}

SuperOperator CHAlgebra::mul_operator(const SuperVector& x, int D) const {
    auto p = x.parity_of();
    SuperOperator m(space_, vars_, p ? *p : 0);
    const int n = dim();
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : mul_[i][j])
                m.entry(k, j) += x[i].truncated(D).scaled(c);
    }
    return m;
}

Series CHAlgebra::integrate(const SuperVector& v) const {
    Series s(vars_);
    for (int i = 0; i < dim(); ++i)
        if (integral_[i] != 0) s += v[i].scaled(integral_[i]);
    return s;
}

Series CHAlgebra::pair(const SuperVector& x, const SuperVector& y, int D) const {
    return integrate(mul(x, y, D));
}

SuperVector CHAlgebra::basis_vector(int i) const {
    return SuperVector::basis(space_, vars_, i);
}

SuperVector CHAlgebra::euler_vector() const {
    SuperVector e(space_, vars_);
    for (std::size_t t = 0; t < h0_.size(); ++t)
        e[h0_[t]] = Series::variable(vars_, static_cast<int>(t));
    return e;
}

// ---------------------------------------------------------------- loading --

namespace {

Rational parse_rat_or_throw(const nlohmann::json& j, const char* where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        auto r = parse_rational(j.get<std::string>());
        if (r) return *r;
    }
    throw ParseError(std::string("bad rational in ") + where);
}

}  // namespace

CHAlgebra load_algebra(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    CHAlgebra::Data d;
    try {
        int n = j.at("dimension").get<int>();
        d.parity = j.at("parities").get<std::vector<int>>();
        if (static_cast<int>(d.parity.size()) != n)
            throw ParseError("parities length != dimension");
        if (j.contains("labels"))
            d.label = j.at("labels").get<std::vector<std::string>>();
        for (const auto& e : j.at("multiplication")) {
            if (!e.is_array() || e.size() != 4)
                throw ParseError("multiplication entry must be [i,j,k,c]");
            d.mul.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                               parse_rat_or_throw(e[3], "multiplication"));
        }
        for (const char* key : {"Q", "Gminus"}) {
            auto& dst = std::string(key) == "Q" ? d.Q : d.Gm;
            for (const auto& e : j.at(key)) {
                if (!e.is_array() || e.size() != 3)
                    throw ParseError(std::string(key) + " entry must be [i,j,c]");
                dst.emplace_back(e[0].get<int>(), e[1].get<int>(),
                                 parse_rat_or_throw(e[2], key));
            }
        }
        d.h0 = j.at("h0").get<std::vector<int>>();
        for (const auto& e : j.at("blocks")) {
            if (!e.is_array() || e.size() != 4)
                throw ParseError("block entry must be [e,Qe,Gme,QGme]");
            d.blocks.push_back(HodgeBlock{e[0].get<int>(), e[1].get<int>(),
                                          e[2].get<int>(), e[3].get<int>()});
        }
        for (const auto& e : j.at("integral"))
            d.integral.push_back(parse_rat_or_throw(e, "integral"));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("algebra spec: ") + e.what());
    }
    return CHAlgebra(d);
}

CHAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_algebra(ss.str());
}

std::string algebra_to_json(const CHAlgebra& a) {
    nlohmann::json j;
    const int n = a.dim();
    j["dimension"] = n;
    j["parities"] = a.space()->parity;
    j["labels"] = a.space()->label;
    auto mul = nlohmann::json::array();
    for (int i = 0; i < n; ++i)
        for (int jj = i; jj < n; ++jj)
            for (const auto& [k, c] : a.product(i, jj))
                mul.push_back({i, jj, k, to_string(c)});
    j["multiplication"] = std::move(mul);
    auto sparse = [&](const RationalMatrix& m) {
        auto arr = nlohmann::json::array();
        for (int i = 0; i < n; ++i)
            for (int jj = 0; jj < n; ++jj)
                if (m[i][jj] != 0) arr.push_back({i, jj, to_string(m[i][jj])});
        return arr;
    };
    j["Q"] = sparse(a.Q());
    j["Gminus"] = sparse(a.Gm());
    j["h0"] = a.h0();
    auto blocks = nlohmann::json::array();
    for (const auto& b : a.blocks())
        blocks.push_back({b.e, b.qe, b.gme, b.qgme});
    j["blocks"] = std::move(blocks);
    auto integral = nlohmann::json::array();
    for (const auto& c : a.integral()) integral.push_back(to_string(c));
    j["integral"] = std::move(integral);
    return j.dump(2);
}

// ------------------------------------------------------------- validation --

namespace {

std::string idx_witness(std::initializer_list<int> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int i : idx) {
        if (!first) os << ",";
        first = false;
        os << i;
    }
    os << ")";
    return os.str();
}

}  // namespace

Report validate_algebra(const CHAlgebra& a, bool check_one_twelfth) {
    Report rep;
    const int n = a.dim();
    const int D = 0;
    auto bv = [&](int i) { return a.basis_vector(i); };

    auto mat_check = [&](const std::string& name, const RationalMatrix& m) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[i][j] != 0) {
                    rep.add(CheckResult::fail(name, idx_witness({i, j}),
                                              to_string(m[i][j])));
                    return;
                }
        rep.add(CheckResult::pass(name));
    };

    auto msub = [&](const RationalMatrix& x, const RationalMatrix& y) {
        auto r = x;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i][j] -= y[i][j];
        return r;
    };
    auto madd = [&](const RationalMatrix& x, const RationalMatrix& y) {
        auto r = x;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i][j] += y[i][j];
        return r;
    };

    mat_check("Q^2 = 0", rmat_mul(a.Q(), a.Q()));
    mat_check("Gm^2 = 0", rmat_mul(a.Gm(), a.Gm()));
    mat_check("QGm + GmQ = 0",
              madd(rmat_mul(a.Q(), a.Gm()), rmat_mul(a.Gm(), a.Q())));

    // Hodge decomposition: Q, Gm vanish on H0 and act exactly on blocks
    {
        bool ok = true;
        std::string wit;
        for (int i : a.h0())
            for (int r = 0; r < n && ok; ++r)
                if (a.Q()[r][i] != 0 || a.Gm()[r][i] != 0) {
                    ok = false;
                    wit = "H0 index " + std::to_string(i);
                }
        auto col_is = [&](const RationalMatrix& m, int j, int target,
                          const Rational& c) {
            for (int r = 0; r < n; ++r)
                if (m[r][j] != ((r == target) ? c : Rational(0))) return false;
            return true;
        };
        auto col_zero = [&](const RationalMatrix& m, int j) {
            for (int r = 0; r < n; ++r)
                if (m[r][j] != 0) return false;
            return true;
        };
        for (const auto& b : a.blocks()) {
            if (!ok) break;
            bool good = col_is(a.Q(), b.e, b.qe, Rational(1)) &&
                        col_is(a.Gm(), b.e, b.gme, Rational(1)) &&
                        col_is(a.Q(), b.gme, b.qgme, Rational(1)) &&
                        col_is(a.Gm(), b.qe, b.qgme, Rational(-1)) &&
                        col_zero(a.Q(), b.qe) && col_zero(a.Q(), b.qgme) &&
                        col_zero(a.Gm(), b.gme) && col_zero(a.Gm(), b.qgme);
            if (!good) {
                ok = false;
                wit = "block at e=" + std::to_string(b.e);
            }
        }
        rep.add(ok ? CheckResult::pass("Hodge decomposition")
                   : CheckResult::fail("Hodge decomposition", wit));
    }

    // supercommutativity and unit (index 0 is required to be the unit)
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                auto lhs = a.mul(bv(i), bv(j), D);
                auto rhs = a.mul(bv(j), bv(i), D);
                Rational s = (a.parity(i) && a.parity(j)) ? -1 : 1;
                if (!(lhs - rhs.scaled(s)).is_zero()) {
                    ok = false;
                    wit = idx_witness({i, j});
                }
            }
        rep.add(ok ? CheckResult::pass("supercommutativity")
                   : CheckResult::fail("supercommutativity", wit));
        ok = true;
        for (int j = 0; j < n && ok; ++j)
            if (!(a.mul(bv(0), bv(j), D) - bv(j)).is_zero()) {
                ok = false;
                wit = idx_witness({j});
            }
        rep.add(ok ? CheckResult::pass("unit element")
                   : CheckResult::fail("unit element", wit));
    }

    // associativity
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k) {
                    auto l = a.mul(a.mul(bv(i), bv(j), D), bv(k), D);
                    auto r = a.mul(bv(i), a.mul(bv(j), bv(k), D), D);
                    if (!(l - r).is_zero()) {
                        ok = false;
                        wit = idx_witness({i, j, k});
                    }
                }
        rep.add(ok ? CheckResult::pass("associativity")
                   : CheckResult::fail("associativity", wit));
    }

    // Q is a derivation
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                auto l = a.opQ().apply(a.mul(bv(i), bv(j), D), D);
                auto r = a.mul(a.opQ().apply(bv(i), D), bv(j), D) +
                         a.mul(bv(i), a.opQ().apply(bv(j), D), D)
                             .scaled(a.parity(i) ? -1 : 1);
                if (!(l - r).is_zero()) {
                    ok = false;
                    wit = idx_witness({i, j});
                }
            }
        rep.add(ok ? CheckResult::pass("Q derivation")
                   : CheckResult::fail("Q derivation", wit));
    }

    // 7-term relation for Gm
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k) {
                    int pa = a.parity(i), pb = a.parity(j);
                    auto gm = [&](const SuperVector& v) {
                        return a.opGm().apply(v, D);
                    };
                    auto m2 = [&](const SuperVector& x, const SuperVector& y) {
                        return a.mul(x, y, D);
                    };
                    auto A = bv(i), B = bv(j), C = bv(k);
                    auto lhs = gm(m2(m2(A, B), C));
                    auto rhs = m2(gm(m2(A, B)), C) +
                               m2(B, gm(m2(A, C))).scaled((pb * (pa + 1)) % 2 ? -1 : 1) +
                               m2(A, gm(m2(B, C))).scaled(pa ? -1 : 1) -
                               m2(gm(A), m2(B, C)) -
                               m2(A, m2(gm(B), C)).scaled(pa ? -1 : 1) -
                               m2(m2(A, B), gm(C)).scaled((pa + pb) % 2 ? -1 : 1);
                    if (!(lhs - rhs).is_zero()) {
                        ok = false;
                        wit = idx_witness({i, j, k});
                    }
                }
        rep.add(ok ? CheckResult::pass("7-term relation")
                   : CheckResult::fail("7-term relation", wit));
    }

    // integral invariances
    {
        struct Inv {
            const char* name;
            const SuperOperator* op;
            int sign_shift;  // sign is (-1)^(par(a)+shift)
        };
        const Inv invs[] = {{"integral Q-invariance", &a.opQ(), 1},
                            {"integral Gm-invariance", &a.opGm(), 0},
                            {"integral Gp-invariance", &a.opGp(), 0}};
        for (const auto& inv : invs) {
            bool ok = true;
            std::string wit;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) {
                    auto l = a.integrate(a.mul(inv.op->apply(bv(i), D), bv(j), D));
                    Rational s = ((a.parity(i) + inv.sign_shift) % 2) ? -1 : 1;
                    auto r = a.integrate(a.mul(bv(i), inv.op->apply(bv(j), D), D))
                                 .scaled(s);
                    if (!(l - r).is_zero()) {
                        ok = false;
                        wit = idx_witness({i, j});
                    }
                }
            rep.add(ok ? CheckResult::pass(inv.name)
                       : CheckResult::fail(inv.name, wit));
        }
    }

    // nondegeneracy (exact determinant of the Gram matrix)
    {
        Rational det = rmat_det(a.pairing());
        rep.add(det != 0 ? CheckResult::pass("nondegenerate pairing")
                         : CheckResult::fail("nondegenerate pairing",
                                             "det = 0"));
    }

    // H0 orthogonal to H4
    {
        bool ok = true;
        std::string wit;
        for (int i : a.h0())
            for (int j = 0; j < n && ok; ++j) {
                bool in_h4 = true;
                for (int h : a.h0())
                    if (h == j) in_h4 = false;
                if (in_h4 && a.pairing()[i][j] != 0) {
                    ok = false;
                    wit = idx_witness({i, j});
                }
            }
        rep.add(ok ? CheckResult::pass("H0 orthogonal to H4")
                   : CheckResult::fail("H0 orthogonal to H4", wit));
    }

    if (check_one_twelfth) {
        // str(Gm o h.) = 1/12 str(Gm(h).) for every basis h
        bool ok = true;
        std::string wit, res;
        for (int h = 0; h < n && ok; ++h) {
            auto Mh = a.mul_operator(bv(h), D);
            auto lhs = supertrace(a.opGm().compose(Mh, D));
            auto rhs = supertrace(
                a.mul_operator(a.opGm().apply(bv(h), D), D));
            auto diff = lhs - rhs.scaled(Rational(1, 12));
            if (!diff.is_zero()) {
                ok = false;
                wit = "h = " + std::to_string(h);
                res = to_string(diff.constant_term());
            }
        }
        rep.add(ok ? CheckResult::pass("1/12 axiom")
                   : CheckResult::fail("1/12 axiom", wit, res));
    }

    return rep;
}

Report check_three_q(const CHAlgebra& a) {
    Report rep;
    const int n = a.dim();
    const int D = 0;
    bool ok = true;
    std::string wit;
    auto bv = [&](int i) { return a.basis_vector(i); };
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            for (int k = 0; k < n && ok; ++k) {
                auto qa = a.opQ().apply(bv(i), D);
                auto qb = a.opQ().apply(bv(j), D);
                auto qc = a.opQ().apply(bv(k), D);
                Rational s1 = a.parity(i) ? -1 : 1;
                Rational s2 = ((a.parity(i) + a.parity(j)) % 2) ? -1 : 1;
                Series total =
                    a.integrate(a.mul(a.mul(qa, bv(j), D), bv(k), D)) +
                    a.integrate(a.mul(a.mul(bv(i), qb, D), bv(k), D)).scaled(s1) +
                    a.integrate(a.mul(a.mul(bv(i), bv(j), D), qc, D)).scaled(s2);
                if (!total.is_zero()) {
                    ok = false;
                    wit = "(" + std::to_string(i) + "," + std::to_string(j) +
                          "," + std::to_string(k) + ")";
                }
            }
    rep.add(ok ? CheckResult::pass("three-Q vertex identity")
               : CheckResult::fail("three-Q vertex identity", wit));
    return rep;
}

}  // namespace chgraph
