#pragma once

#include <optional>

#include "chgraph/algebra.hpp"

namespace chgraph {

struct FixtureProfile {
    int h0_dim = 2;
    int blocks = 0;
    bool require_one_twelfth = true;
    bool want_interaction = true;  // H0*H0 meets H4 (trees contribute)
};

// Staged search for a cH algebra matching the profile, certified by
// validate_algebra. Stage one: Frobenius H = H0 (truncated polynomial
// algebra). Stage two: graded two-block ansatz solved over small rationals.
// Returns nullopt when the budget is exhausted.
std::optional<CHAlgebra> search_fixture(const FixtureProfile& profile,
                                        long budget = 100000);

}  // namespace chgraph
