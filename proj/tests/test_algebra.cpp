#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "chgraph/algebra.hpp"
#include "chgraph/solver.hpp"

using namespace chgraph;

namespace {

std::string fixture_path(const std::string& name) {
    const char* dir = std::getenv("CHGRAPH_FIXTURES");
    if (!dir) dir = CHGRAPH_FIXTURES_DIR;
    return std::string(dir) + "/" + name;
}

bool check_named(const Report& r, const std::string& name, const char* status) {
    for (const auto& c : r.checks)
        if (c.check == name) return c.status == status;
    return false;
}

}  // namespace

TEST_CASE("frobenius fixture loads and passes the axiom suite") {
    CHAlgebra a = load_algebra_file(fixture_path("frobenius2.json"));
    CHECK(a.dim() == 2);
    Report r = validate_algebra(a, true);
    CHECK(r.all_passed());
    // G+ = 0, Pi0 = Id for a blockless algebra
    CHECK(a.Gp() == rmat_zero(2));
    CHECK(a.Pi0() == rmat_identity(2));
    CHECK(check_named(r, "1/12 axiom", "pass"));
    CHECK(check_three_q(a).all_passed());
}

TEST_CASE("degenerate integral fails nondegeneracy but still loads") {
    CHAlgebra a = load_algebra(R"({
      "dimension": 2, "parities": [0,0],
      "multiplication": [[0,0,0,"1"],[0,1,1,"1"]],
      "Q": [], "Gminus": [], "h0": [0,1], "blocks": [],
      "integral": ["0","0"]})");
    Report r = validate_algebra(a, false);
    CHECK(!r.all_passed());
    CHECK(check_named(r, "nondegenerate pairing", "fail"));
}

TEST_CASE("malformed json is a parse error") {
    CHECK_THROWS_AS(load_algebra("{"), ParseError);
    CHECK_THROWS_AS(load_algebra(R"({"dimension": 1})"), ParseError);
    CHECK_THROWS_AS(load_algebra(R"({
      "dimension": 1, "parities": [0],
      "multiplication": [[0,0,0,"1/0"]],
      "Q": [], "Gminus": [], "h0": [0], "blocks": [], "integral": ["1"]})"),
                    ParseError);
}

TEST_CASE("parity-inconsistent data is a shape error") {
    // product of two evens landing on an odd vector
    CHECK_THROWS_AS(load_algebra(R"({
      "dimension": 2, "parities": [0,1],
      "multiplication": [[0,0,1,"1"],[0,1,1,"1"]],
      "Q": [], "Gminus": [], "h0": [0,1], "blocks": [],
      "integral": ["1","0"]})"),
                    ShapeError);
    // integral supported on an odd vector
    CHECK_THROWS_AS(load_algebra(R"({
      "dimension": 2, "parities": [0,1],
      "multiplication": [[0,1,1,"1"]],
      "Q": [], "Gminus": [], "h0": [0,1], "blocks": [],
      "integral": ["0","1"]})"),
                    ShapeError);
    // basis vector in neither h0 nor a block
    CHECK_THROWS_AS(load_algebra(R"({
      "dimension": 2, "parities": [0,0],
      "multiplication": [[0,1,1,"1"]],
      "Q": [], "Gminus": [], "h0": [0], "blocks": [],
      "integral": ["0","1"]})"),
                    ShapeError);
}

TEST_CASE("round trip through algebra_to_json") {
    CHAlgebra a = load_algebra_file(fixture_path("frobenius2.json"));
    CHAlgebra b = load_algebra(algebra_to_json(a));
    CHECK(b.dim() == a.dim());
    CHECK(b.pairing() == a.pairing());
    CHECK(validate_algebra(b, true).all_passed());
}

TEST_CASE("search_fixture: Frobenius stage succeeds immediately") {
    FixtureProfile p;
    p.h0_dim = 3;
    p.blocks = 0;
    auto a = search_fixture(p);
    REQUIRE(a.has_value());
    CHECK(validate_algebra(*a, true).all_passed());
    CHECK(a->h0().size() == 3);
}

TEST_CASE("euler vector and multiplication") {
    CHAlgebra a = load_algebra_file(fixture_path("frobenius2.json"));
    auto E = a.euler_vector();
    // E = 1*T1 + lam*T2 ; int E^3 = 3 T1^2 T2 (lam^2 = 0, int lam = 1)
    auto E3 = a.mul(a.mul(E, E, 4), E, 4);
    Series s = a.integrate(E3);
    Monomial m(2, 0);
    m[0] = 2;
    m[1] = 1;
    CHECK(s.coeff(m) == Rational(3));
    CHECK(s.terms().size() == 1);
}
