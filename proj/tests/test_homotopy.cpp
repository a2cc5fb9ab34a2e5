#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "chgraph/homotopy.hpp"

using namespace chgraph;

namespace {

std::string fixture_path(const std::string& name) {
    const char* dir = std::getenv("CHGRAPH_FIXTURES");
    if (!dir) dir = CHGRAPH_FIXTURES_DIR;
    return std::string(dir) + "/" + name;
}

CHAlgebra frobenius() {
    return load_algebra_file(fixture_path("frobenius2.json"));
}

}  // namespace

TEST_CASE("gamma equals E when the propagator vanishes") {
    CHAlgebra a = frobenius();
    SuperVector g = compute_gamma(a, 5);
    CHECK(g == a.euler_vector());
    CHECK(gamma_tree_sum(a, 5) == a.euler_vector());
}

TEST_CASE("maurer-cartan residuals vanish trivially on frobenius") {
    CHAlgebra a = frobenius();
    CHECK(check_maurer_cartan(a, 5).all_passed());
}

TEST_CASE("operators reduce to projections on frobenius") {
    CHAlgebra a = frobenius();
    auto h = compute_operators(a, 4);
    CHECK(h.Ol == SuperOperator::identity(a.space(), a.vars()));
    CHECK(h.Or == SuperOperator::identity(a.space(), a.vars()));
    CHECK(h.Oc.is_zero());
    CHECK(h.O0 == a.opPi0());
    CHECK(check_operator_identities(a, 4).all_passed());
}

TEST_CASE("degree-0 slice of O0 is Pi0 = Id - QG+ - G+Q") {
    CHAlgebra a = frobenius();
    auto h = compute_operators(a, 3);
    auto c = h.O0.constant_part();
    auto rhs = rmat_identity(a.dim());
    auto qg = rmat_mul(a.Q(), a.Gp());
    auto gq = rmat_mul(a.Gp(), a.Q());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            rhs[i][j] -= qg[i][j] + gq[i][j];
    CHECK(c == rhs);
}
