#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chgraph/series.hpp"

namespace chgraph {

// Finite-dimensional parity-graded space with a chosen basis.
struct SuperSpace {
    std::vector<int> parity;
    std::vector<std::string> label;

    int dim() const { return static_cast<int>(parity.size()); }

    static std::shared_ptr<const SuperSpace>
    make(std::vector<int> parities, std::vector<std::string> labels = {});
};

using SpacePtr = std::shared_ptr<const SuperSpace>;

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix rmat_zero(int n);
RationalMatrix rmat_identity(int n);
RationalMatrix rmat_mul(const RationalMatrix& a, const RationalMatrix& b);
Rational rmat_det(RationalMatrix a);
// Inverse by exact Gaussian elimination; nullopt if singular.
std::optional<RationalMatrix> rmat_inverse(const RationalMatrix& a);

// Element of H tensor Q[[T]]: one Series coefficient per basis vector.
class SuperVector {
public:
    SuperVector() = default;
    SuperVector(SpacePtr space, VarsPtr vars);

    static SuperVector basis(SpacePtr space, VarsPtr vars, int i);

    const SpacePtr& space() const { return space_; }
    const VarsPtr& vars() const { return vars_; }
    Series& operator[](int i) { return coeff_[i]; }
    const Series& operator[](int i) const { return coeff_[i]; }
    int dim() const { return static_cast<int>(coeff_.size()); }

    bool is_zero() const;
    SuperVector operator+(const SuperVector& o) const;
    SuperVector operator-(const SuperVector& o) const;
    SuperVector scaled(const Rational& c) const;
    SuperVector truncated(int D) const;
    bool operator==(const SuperVector& o) const { return coeff_ == o.coeff_; }

    // Total parity (basis parity + T-monomial parity) if homogeneous;
    // nullopt when the vector mixes parities.
    std::optional<int> parity_of() const;

    std::string to_string() const;

private:
    SpacePtr space_;
    VarsPtr vars_;
    std::vector<Series> coeff_;
};

// Parity-graded linear map with Series entries; entry(i,j) is the
// coefficient of basis_i in the image of basis_j.
class SuperOperator {
public:
    SuperOperator() = default;
    SuperOperator(SpacePtr space, VarsPtr vars, int parity);

    static SuperOperator identity(SpacePtr space, VarsPtr vars);
    static SuperOperator from_rational(SpacePtr space, VarsPtr vars,
                                       const RationalMatrix& m, int parity);

    const SpacePtr& space() const { return space_; }
    const VarsPtr& vars() const { return vars_; }
    int parity() const { return parity_; }
    int dim() const { return space_ ? space_->dim() : 0; }
    Series& entry(int i, int j) { return mat_[i][j]; }
    const Series& entry(int i, int j) const { return mat_[i][j]; }

    bool is_zero() const;
    SuperOperator operator+(const SuperOperator& o) const;
    SuperOperator operator-(const SuperOperator& o) const;
    SuperOperator scaled(const Rational& c) const;
    SuperOperator truncated(int D) const;
    bool operator==(const SuperOperator& o) const { return mat_ == o.mat_; }

    SuperVector apply(const SuperVector& v, int D) const;
    SuperOperator compose(const SuperOperator& o, int D) const;  // this o other

    // Degree-d slice as a rational matrix in the given monomial, or the
    // constant part when mono is empty.
    RationalMatrix constant_part() const;

    std::string to_string() const;

private:
    SpacePtr space_;
    VarsPtr vars_;
    int parity_ = 0;
    std::vector<std::vector<Series>> mat_;
};

// str(A) = tr(J A): the parity-signed trace, as a Series.
Series supertrace(const SuperOperator& a);
// Plain matrix trace.
Series trace(const SuperOperator& a);

// Element of H tensor H: matrix of Series coefficients c[k][l] meaning
// sum c^{kl} b_k (x) b_l.
struct Bivector {
    SpacePtr space;
    VarsPtr vars;
    std::vector<std::vector<Series>> coeff;

    static Bivector zero(SpacePtr space, VarsPtr vars);
    bool is_zero() const;
    Bivector operator+(const Bivector& o) const;
    Bivector scaled(const Rational& c) const;
    bool operator==(const Bivector& o) const { return coeff == o.coeff; }
};

// [A] = sum_j (A b^j) (x) b_j where {b^j} is the dual basis of the pairing g.
// Contracting the second slot against u with g reproduces A(u).
// Throws std::invalid_argument if g is degenerate.
Bivector operator_to_bivector(const SuperOperator& a, const RationalMatrix& g);

}  // namespace chgraph
