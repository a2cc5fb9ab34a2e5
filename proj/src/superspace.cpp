#include "chgraph/superspace.hpp"

#include <sstream>

namespace chgraph {

std::shared_ptr<const SuperSpace>
SuperSpace::make(std::vector<int> parities, std::vector<std::string> labels) {
    auto s = std::make_shared<SuperSpace>();
    s->parity = std::move(parities);
    if (labels.empty())
        for (std::size_t i = 0; i < s->parity.size(); ++i)
            labels.push_back("b" + std::to_string(i));
    if (labels.size() != s->parity.size())
        throw std::invalid_argument("SuperSpace: label/parity size mismatch");
    s->label = std::move(labels);
    return s;
}

RationalMatrix rmat_zero(int n) {
    return RationalMatrix(n, std::vector<Rational>(n, Rational(0)));
}

RationalMatrix rmat_identity(int n) {
    auto m = rmat_zero(n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RationalMatrix rmat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    const int n = static_cast<int>(a.size());
    auto c = rmat_zero(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Rational rmat_det(RationalMatrix a) {
    const int n = static_cast<int>(a.size());
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) { p = r; break; }
        if (p < 0) return Rational(0);
        if (p != c) { std::swap(a[p], a[c]); det = -det; }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

std::optional<RationalMatrix> rmat_inverse(const RationalMatrix& a0) {
    const int n = static_cast<int>(a0.size());
    auto a = a0;
    auto inv = rmat_identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) { p = r; break; }
        if (p < 0) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational pivot = a[c][c];
        for (int j = 0; j < n; ++j) { a[c][j] /= pivot; inv[c][j] /= pivot; }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

SuperVector::SuperVector(SpacePtr space, VarsPtr vars)
    : space_(std::move(space)), vars_(std::move(vars)),
      coeff_(space_->dim(), Series(vars_)) {}

SuperVector SuperVector::basis(SpacePtr space, VarsPtr vars, int i) {
    SuperVector v(space, vars);
    v.coeff_.at(i) = Series::constant(vars, Rational(1));
    return v;
}

bool SuperVector::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

SuperVector SuperVector::operator+(const SuperVector& o) const {
    SuperVector r = *this;
    for (int i = 0; i < r.dim(); ++i) r.coeff_[i] += o.coeff_[i];
    return r;
}

SuperVector SuperVector::operator-(const SuperVector& o) const {
    SuperVector r = *this;
    for (int i = 0; i < r.dim(); ++i) r.coeff_[i] -= o.coeff_[i];
    return r;
}

SuperVector SuperVector::scaled(const Rational& c) const {
    SuperVector r = *this;
    for (auto& x : r.coeff_) x = x.scaled(c);
    return r;
}

SuperVector SuperVector::truncated(int D) const {
    SuperVector r = *this;
    for (auto& x : r.coeff_) x = x.truncated(D);
    return r;
}

std::optional<int> SuperVector::parity_of() const {
    std::optional<int> p;
    for (int i = 0; i < dim(); ++i) {
        for (const auto& [m, c] : coeff_[i].terms()) {
            int q = (space_->parity[i] + monomial_parity(m, *vars_)) & 1;
            if (!p) p = q;
            else if (*p != q) return std::nullopt;
        }
    }
    return p ? p : std::optional<int>(0);
}

std::string SuperVector::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim(); ++i) {
        if (coeff_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << coeff_[i].to_string() << "]*" << space_->label[i];
    }
    if (first) os << "0";
    return os.str();
}

SuperOperator::SuperOperator(SpacePtr space, VarsPtr vars, int parity)
    : space_(std::move(space)), vars_(std::move(vars)), parity_(parity & 1),
      mat_(space_->dim(), std::vector<Series>(space_->dim(), Series(vars_))) {}

SuperOperator SuperOperator::identity(SpacePtr space, VarsPtr vars) {
    SuperOperator a(space, vars, 0);
    for (int i = 0; i < a.dim(); ++i)
        a.mat_[i][i] = Series::constant(vars, Rational(1));
    return a;
}

SuperOperator SuperOperator::from_rational(SpacePtr space, VarsPtr vars,
                                           const RationalMatrix& m, int parity) {
    SuperOperator a(space, vars, parity);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (m[i][j] != 0) a.mat_[i][j] = Series::constant(vars, m[i][j]);
    return a;
}

bool SuperOperator::is_zero() const {
    for (const auto& row : mat_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

SuperOperator SuperOperator::operator+(const SuperOperator& o) const {
    SuperOperator r = *this;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) r.mat_[i][j] += o.mat_[i][j];
    return r;
}

SuperOperator SuperOperator::operator-(const SuperOperator& o) const {
    SuperOperator r = *this;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) r.mat_[i][j] -= o.mat_[i][j];
    return r;
}

SuperOperator SuperOperator::scaled(const Rational& c) const {
    SuperOperator r = *this;
    for (auto& row : r.mat_)
        for (auto& e : row) e = e.scaled(c);
    return r;
}

SuperOperator SuperOperator::truncated(int D) const {
    SuperOperator r = *this;
    for (auto& row : r.mat_)
        for (auto& e : row) e = e.truncated(D);
    return r;
}

SuperVector SuperOperator::apply(const SuperVector& v, int D) const {
    SuperVector r(space_, vars_);
    for (int i = 0; i < dim(); ++i) {
        Series acc(vars_);
        for (int j = 0; j < dim(); ++j) {
            if (mat_[i][j].is_zero() || v[j].is_zero()) continue;
            // the matrix unit E_ij has parity p_i + p_j; v_j's monomials
            // cross it
            int cross = (space_->parity[i] + space_->parity[j]) & 1;
            acc += series_mul(mat_[i][j], v[j].parity_twisted(cross), D);
        }
        r[i] = acc;
    }
    return r;
}

SuperOperator SuperOperator::compose(const SuperOperator& o, int D) const {
    SuperOperator r(space_, vars_, (parity_ + o.parity_) & 1);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            Series acc(vars_);
            for (int k = 0; k < dim(); ++k) {
                if (mat_[i][k].is_zero() || o.mat_[k][j].is_zero()) continue;
                int cross = (space_->parity[i] + space_->parity[k]) & 1;
                acc += series_mul(mat_[i][k],
                                  o.mat_[k][j].parity_twisted(cross), D);
            }
            r.mat_[i][j] = acc;
        }
    return r;
}

RationalMatrix SuperOperator::constant_part() const {
    auto m = rmat_zero(dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) m[i][j] = mat_[i][j].constant_term();
    return m;
}

std::string SuperOperator::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (!mat_[i][j].is_zero())
                os << "(" << i << "," << j << "): " << mat_[i][j].to_string()
                   << "\n";
    return os.str();
}

Series supertrace(const SuperOperator& a) {
    Series s(a.vars());
    for (int i = 0; i < a.dim(); ++i) {
        if (a.space()->parity[i])
            s -= a.entry(i, i);
        else
            s += a.entry(i, i);
    }
    return s;
}

Series trace(const SuperOperator& a) {
    Series s(a.vars());
    for (int i = 0; i < a.dim(); ++i) s += a.entry(i, i);
    return s;
}

Bivector Bivector::zero(SpacePtr space, VarsPtr vars) {
    Bivector b;
    b.space = space;
    b.vars = vars;
    b.coeff.assign(space->dim(), std::vector<Series>(space->dim(), Series(vars)));
    return b;
}

bool Bivector::is_zero() const {
    for (const auto& row : coeff)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

Bivector Bivector::operator+(const Bivector& o) const {
    Bivector r = *this;
    for (std::size_t i = 0; i < coeff.size(); ++i)
        for (std::size_t j = 0; j < coeff.size(); ++j)
            r.coeff[i][j] += o.coeff[i][j];
    return r;
}

Bivector Bivector::scaled(const Rational& c) const {
    Bivector r = *this;
    for (auto& row : r.coeff)
        for (auto& e : row) e = e.scaled(c);
    return r;
}

Bivector operator_to_bivector(const SuperOperator& a, const RationalMatrix& g) {
    auto ginv = rmat_inverse(g);
    if (!ginv) throw std::invalid_argument("operator_to_bivector: degenerate pairing");
    // [A] = sum_j (A b_j) (x) b^j, i.e. coefficients A g^{-1}; pairing the
    // second slot against u through g reproduces A(u) for any grading.
    auto b = Bivector::zero(a.space(), a.vars());
    const int n = a.dim();
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Series acc(a.vars());
            for (int j = 0; j < n; ++j)
                if ((*ginv)[j][l] != 0) acc += a.entry(k, j).scaled((*ginv)[j][l]);
            b.coeff[k][l] = acc;
        }
    return b;
}

}  // namespace chgraph
