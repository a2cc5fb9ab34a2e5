#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chgraph/rational.hpp"

namespace chgraph {

// The variables T_1..T_n attached to a basis of H0. Parity of T_i equals the
// parity of the basis vector it multiplies.
struct GradedVariables {
    std::vector<int> parity;            // 0 even, 1 odd
    std::vector<std::string> name;

    int count() const { return static_cast<int>(parity.size()); }

    static std::shared_ptr<const GradedVariables>
    make(std::vector<int> parities, std::vector<std::string> names = {});
};

using VarsPtr = std::shared_ptr<const GradedVariables>;

// Exponent vector in canonical variable order.
using Monomial = std::vector<std::uint8_t>;

int monomial_degree(const Monomial& m);
int monomial_parity(const Monomial& m, const GradedVariables& vars);
std::string monomial_to_string(const Monomial& m, const GradedVariables& vars);

// Truncated formal power series with exact rational coefficients. Odd
// variables square to zero; monomials are kept in a single canonical order
// and reordering signs are applied during multiplication.
class Series {
public:
    Series() = default;
    explicit Series(VarsPtr vars) : vars_(std::move(vars)) {}

    static Series zero(VarsPtr vars) { return Series(std::move(vars)); }
    static Series constant(VarsPtr vars, const Rational& c);
    static Series variable(VarsPtr vars, int i);
    static Series monomial(VarsPtr vars, Monomial m, const Rational& c);

    const VarsPtr& vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;                         // max total degree, -1 if zero
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;
    Rational constant_term() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    bool operator==(const Series& o) const { return terms_ == o.terms_; }

    Series scaled(const Rational& c) const;
    Series truncated(int max_degree) const;

    // Signs every monomial m by (-1)^(p * parity(m)); the Koszul twist used
    // when a series crosses an odd object of parity p.
    Series parity_twisted(int p) const;

    // Partial derivative. Only defined for even variables.
    Series derivative(int var) const;

    // Lexicographically first monomial of lowest total degree, for reports.
    std::string leading_monomial_string() const;

    std::string to_string() const;

private:
    friend Series series_mul(const Series& a, const Series& b, int D);
    void add_term(const Monomial& m, const Rational& c);

    VarsPtr vars_;
    std::map<Monomial, Rational> terms_;
};

// Truncated graded-commutative product. Throws on variable-set mismatch.
Series series_mul(const Series& a, const Series& b, int D);

// Sign accumulated by sorting `perm` (a permutation of 0..k-1, read as the
// positions the slots move to) with the given per-slot parities: each
// transposition of adjacent odd-odd slots contributes -1.
// Throws std::invalid_argument on a malformed permutation.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities);

}  // namespace chgraph
