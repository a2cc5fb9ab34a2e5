#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chgraph/report.hpp"
#include "chgraph/superspace.hpp"

namespace chgraph {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HodgeBlock {
    int e, qe, gme, qgme;
};

// A cyclic Hodge dGBV algebra: supercommutative multiplication, odd
// operators Q and G-, a Hodge decomposition H = H0 (+) H4 into zero modes
// and 4-dimensional blocks <e, Qe, G-e, QG-e>, and an integral whose
// pairing (a,b) = int ab is expected to be nondegenerate.
class CHAlgebra {
public:
    struct Data {
        std::vector<int> parity;
        std::vector<std::string> label;
        // sparse triples (i, j, k, c): b_i * b_j contains c * b_k, i <= j
        std::vector<std::tuple<int, int, int, Rational>> mul;
        // sparse (i, j, c): Op(b_j) contains c * b_i
        std::vector<std::tuple<int, int, Rational>> Q, Gm;
        std::vector<int> h0;
        std::vector<HodgeBlock> blocks;
        std::vector<Rational> integral;
    };

    // Shape-checks and builds derived operators. Axiom violations are left
    // to validate(); genuinely malformed data throws ShapeError.
    explicit CHAlgebra(const Data& d);

    int dim() const { return space_->dim(); }
    const SpacePtr& space() const { return space_; }
    const VarsPtr& vars() const { return vars_; }
    int parity(int i) const { return space_->parity[i]; }
    const std::vector<int>& h0() const { return h0_; }
    const std::vector<HodgeBlock>& blocks() const { return blocks_; }
    const std::vector<Rational>& integral() const { return integral_; }

    const RationalMatrix& Q() const { return Q_; }
    const RationalMatrix& Gm() const { return Gm_; }
    const RationalMatrix& Gp() const { return Gp_; }
    const RationalMatrix& K() const { return K_; }      // G- G+
    const RationalMatrix& Jmat() const { return J_; }
    const RationalMatrix& Pi0() const { return Pi0_; }
    const RationalMatrix& Pi4() const { return Pi4_; }
    const RationalMatrix& pairing() const { return g_; }
    const std::optional<RationalMatrix>& pairing_inverse() const { return ginv_; }
    // metric on H0 (indexed by position in h0()) and its inverse
    const RationalMatrix& eta() const { return eta_; }
    const std::optional<RationalMatrix>& eta_inverse() const { return etainv_; }

    SuperOperator op(const RationalMatrix& m, int parity) const;
    const SuperOperator& opQ() const { return opQ_; }
    const SuperOperator& opGm() const { return opGm_; }
    const SuperOperator& opGp() const { return opGp_; }
    const SuperOperator& opK() const { return opK_; }
    const SuperOperator& opJ() const { return opJ_; }
    const SuperOperator& opPi0() const { return opPi0_; }
    const SuperOperator& opId() const { return opId_; }

    // supercommutative product of H-valued series vectors
    SuperVector mul(const SuperVector& x, const SuperVector& y, int D) const;
    // multiplication operator h -> x*h
    SuperOperator mul_operator(const SuperVector& x, int D) const;
    // the integral, extended Q[[T]]-linearly
    Series integrate(const SuperVector& v) const;
    Series pair(const SuperVector& x, const SuperVector& y, int D) const;

    SuperVector basis_vector(int i) const;
    // E = sum_i e_i T_i over the H0 basis
    SuperVector euler_vector() const;

    // structure constants of b_i * b_j
    const std::vector<std::pair<int, Rational>>& product(int i, int j) const {
        return mul_[i][j];
    }

private:
    SpacePtr space_;
    VarsPtr vars_;
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> mul_;
    RationalMatrix Q_, Gm_, Gp_, K_, J_, Pi0_, Pi4_, g_;
    RationalMatrix eta_;
    std::optional<RationalMatrix> ginv_, etainv_;
    std::vector<int> h0_;
    std::vector<HodgeBlock> blocks_;
    std::vector<Rational> integral_;
    SuperOperator opQ_, opGm_, opGp_, opK_, opJ_, opPi0_, opId_;
};

// Parses the AlgebraSpec JSON document (see docs/algebra-spec.md).
// Throws ParseError on malformed input, ShapeError on inconsistent data.
CHAlgebra load_algebra(const std::string& json_text);
CHAlgebra load_algebra_file(const std::string& path);
std::string algebra_to_json(const CHAlgebra& a);

// One named check per axiom; violations are reported, not thrown.
Report validate_algebra(const CHAlgebra& a, bool check_one_twelfth);

// The signed three-term vertex identity over all basis triples:
//   int Q(a)bc + (-1)^a int aQ(b)c + (-1)^(a+b) int abQ(c) = 0.
Report check_three_q(const CHAlgebra& a);

}  // namespace chgraph
