#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chgraph/series.hpp"
#include "chgraph/superspace.hpp"

using namespace chgraph;

namespace {

VarsPtr even_vars(int n) { return GradedVariables::make(std::vector<int>(n, 0)); }

Series rand_series(VarsPtr vars, std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> coef(-4, 4), exp(0, 2);
    Series s(vars);
    for (int t = 0; t < 5; ++t) {
        Monomial m(vars->parity.size(), 0);
        int deg = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            int e = exp(rng);
            if (vars->parity[i]) e = e % 2;
            if (deg + e > maxdeg) e = 0;
            m[i] = static_cast<std::uint8_t>(e);
            deg += e;
        }
        s += Series::monomial(vars, m, Rational(coef(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("rational parsing round trips") {
    CHECK(*parse_rational("3/4") == Rational(3, 4));
    CHECK(*parse_rational("-7") == Rational(-7));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("x").has_value());
    CHECK(to_string(Rational(-3, 7)) == "-3/7");
    CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("koszul sign basics") {
    CHECK(koszul_sign({0, 1, 2}, {1, 1, 1}) == 1);
    CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
    CHECK(koszul_sign({1, 0}, {1, 0}) == 1);
    CHECK_THROWS_AS(koszul_sign({0, 0}, {1, 1}), std::invalid_argument);
}

TEST_CASE("koszul sign is multiplicative under composition") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 2 + int(rng() % 4);
        std::vector<int> p1(k), p2(k), par(k);
        for (int i = 0; i < k; ++i) {
            p1[i] = i;
            p2[i] = i;
            par[i] = int(rng() % 2);
        }
        std::shuffle(p1.begin(), p1.end(), rng);
        std::shuffle(p2.begin(), p2.end(), rng);
        // compose: slots first permuted by p1, then by p2; parities travel
        std::vector<int> comp(k), par_after(k);
        for (int i = 0; i < k; ++i) comp[i] = p2[p1[i]];
        for (int i = 0; i < k; ++i) par_after[p1[i]] = par[i];
        int s1 = koszul_sign(p1, par);
        int s2 = koszul_sign(p2, par_after);
        CHECK(koszul_sign(comp, par) == s1 * s2);
    }
}

TEST_CASE("series identities") {
    auto vars = GradedVariables::make({0, 1, 1});
    Series one = Series::constant(vars, 1);
    Series t1 = Series::variable(vars, 0);
    Series t2 = Series::variable(vars, 1);
    Series t3 = Series::variable(vars, 2);

    CHECK(series_mul(one, t2, 4) == t2);
    CHECK(series_mul(t2, t2, 4).is_zero());  // odd square
    // graded commutativity: t2 t3 = -t3 t2
    CHECK(series_mul(t2, t3, 4) == series_mul(t3, t2, 4).scaled(-1));
    // (t1 + t2)^2 = t1^2 + 2 t1 t2
    Series s = t1 + t2;
    Series sq = series_mul(s, s, 4);
    Series expect = series_mul(t1, t1, 4) + series_mul(t1, t2, 4).scaled(2);
    CHECK(sq == expect);
}

TEST_CASE("binomial example with even variables") {
    auto vars = even_vars(2);
    Series t1 = Series::variable(vars, 0), t2 = Series::variable(vars, 1);
    Series s = t1 + t2;
    Series sq = series_mul(s, s, 2);
    Series expect = series_mul(t1, t1, 2) + series_mul(t1, t2, 2).scaled(2) +
                    series_mul(t2, t2, 2);
    CHECK(sq == expect);
}

TEST_CASE("series product associative and graded commutative (randomized)") {
    auto vars = GradedVariables::make({0, 1, 0, 1});
    std::mt19937 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        Series a = rand_series(vars, rng, 3);
        Series b = rand_series(vars, rng, 3);
        Series c = rand_series(vars, rng, 3);
        const int D = 5;
        CHECK(series_mul(series_mul(a, b, D), c, D) ==
              series_mul(a, series_mul(b, c, D), D));
        // graded commutativity on homogeneous-parity parts: check via
        // splitting b into even and odd monomial parts
        Series be(vars), bo(vars);
        for (const auto& [m, coef] : b.terms()) {
            if (monomial_parity(m, *vars))
                bo += Series::monomial(vars, m, coef);
            else
                be += Series::monomial(vars, m, coef);
        }
        Series ae(vars), ao(vars);
        for (const auto& [m, coef] : a.terms()) {
            if (monomial_parity(m, *vars))
                ao += Series::monomial(vars, m, coef);
            else
                ae += Series::monomial(vars, m, coef);
        }
        CHECK(series_mul(ae, b, D) == series_mul(b, ae, D));
        CHECK(series_mul(ao, bo, D) == series_mul(bo, ao, D).scaled(-1));
    }
}

TEST_CASE("truncation discipline") {
    auto vars = even_vars(1);
    Series t = Series::variable(vars, 0);
    Series t2 = series_mul(t, t, 10);
    CHECK(series_mul(t2, t2, 3).is_zero());
    CHECK(series_mul(t2, t2, 4) == series_mul(series_mul(t2, t, 4), t, 4));
}

TEST_CASE("derivative") {
    auto vars = even_vars(2);
    Series t1 = Series::variable(vars, 0), t2 = Series::variable(vars, 1);
    Series f = series_mul(series_mul(t1, t1, 5), t2, 5);  // t1^2 t2
    CHECK(f.derivative(0) == series_mul(t1, t2, 5).scaled(2));
    CHECK(f.derivative(1) == series_mul(t1, t1, 5));
}

TEST_CASE("supertrace of identity and J") {
    auto sp = SuperSpace::make({0, 0, 1});
    auto vars = even_vars(1);
    auto id = SuperOperator::identity(sp, vars);
    CHECK(supertrace(id).constant_term() == Rational(1));  // 2 even - 1 odd
    RationalMatrix j = rmat_identity(3);
    j[2][2] = -1;
    auto J = SuperOperator::from_rational(sp, vars, j, 0);
    CHECK(supertrace(J).constant_term() == Rational(3));  // J J = Id
    CHECK(trace(J).constant_term() == Rational(1));
}

TEST_CASE("operator compose/apply consistency on graded data") {
    auto sp = SuperSpace::make({0, 1, 1, 0});
    auto vars = GradedVariables::make({0, 1});
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto rand_op = [&](int parity) {
        SuperOperator A(sp, vars, parity);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                // entry parity must be p_i + p_j + parity (mod 2) in the
                // T-monomial for homogeneous operators
                int need = (sp->parity[i] + sp->parity[j] + parity) & 1;
                Monomial m(2, 0);
                if (need) m[1] = 1;
                else if (rng() % 2) m[0] = 1;
                A.entry(i, j) = Series::monomial(vars, m, Rational(coef(rng)));
            }
        return A;
    };
    for (int trial = 0; trial < 50; ++trial) {
        auto A = rand_op(trial % 2), B = rand_op((trial / 2) % 2);
        SuperVector v(sp, vars);
        for (int i = 0; i < 4; ++i) {
            Monomial m(2, 0);
            m[0] = static_cast<std::uint8_t>(rng() % 2);
            m[1] = static_cast<std::uint8_t>(rng() % 2);
            v[i] = Series::monomial(vars, m, Rational(coef(rng)));
        }
        const int D = 4;
        auto lhs = A.compose(B, D).apply(v, D);
        auto rhs = A.apply(B.apply(v, D), D);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("graded cyclicity of the supertrace") {
    // str(AB) = (-1)^{|A||B|} str(BA) for homogeneous operators
    auto sp = SuperSpace::make({0, 1});
    auto vars = even_vars(1);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto rand_op = [&](int parity) {
        SuperOperator A(sp, vars, parity);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (((sp->parity[i] + sp->parity[j]) & 1) == parity)
                    A.entry(i, j) = Series::constant(vars, Rational(coef(rng)));
        return A;
    };
    for (int trial = 0; trial < 100; ++trial) {
        int pa = trial % 2, pb = (trial / 2) % 2;
        auto A = rand_op(pa), B = rand_op(pb);
        Series lhs = supertrace(A.compose(B, 2));
        Series rhs = supertrace(B.compose(A, 2));
        if (pa && pb) rhs = rhs.scaled(-1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("operator_to_bivector: defining contraction identity") {
    // pairing g on a 3-dim superspace (1 even self-paired, odd pair)
    auto sp = SuperSpace::make({0, 1, 1});
    auto vars = even_vars(1);
    RationalMatrix g = rmat_zero(3);
    g[0][0] = 1;
    g[1][2] = 1;
    g[2][1] = -1;
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    SuperOperator A(sp, vars, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (sp->parity[i] == sp->parity[j])
                A.entry(i, j) = Series::constant(vars, Rational(coef(rng)));
    Bivector b = operator_to_bivector(A, g);
    // contracting the second slot against u through g returns A(u):
    // sum_l b.coeff[k][l] g[l][u] = A[k][u]
    for (int u = 0; u < 3; ++u)
        for (int k = 0; k < 3; ++k) {
            Rational acc = 0;
            for (int l = 0; l < 3; ++l)
                acc += b.coeff[k][l].constant_term() * g[l][u];
            CHECK(acc == A.entry(k, u).constant_term());
        }
    // linearity in A and zero map
    SuperOperator Z(sp, vars, 0);
    CHECK(operator_to_bivector(Z, g).is_zero());
}

TEST_CASE("bivector of the identity is the inverse pairing") {
    auto sp = SuperSpace::make({0, 0});
    auto vars = even_vars(1);
    RationalMatrix g = {{Rational(0), Rational(1)}, {Rational(1), Rational(2)}};
    auto id = SuperOperator::identity(sp, vars);
    Bivector b = operator_to_bivector(id, g);
    auto ginv = *rmat_inverse(g);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(b.coeff[i][j].constant_term() == ginv[i][j]);
}
