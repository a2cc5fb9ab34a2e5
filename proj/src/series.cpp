#include "chgraph/series.hpp"

#include <algorithm>
#include <sstream>

namespace chgraph {

std::shared_ptr<const GradedVariables>
GradedVariables::make(std::vector<int> parities, std::vector<std::string> names) {
    auto v = std::make_shared<GradedVariables>();
    v->parity = std::move(parities);
    if (names.empty()) {
        for (std::size_t i = 0; i < v->parity.size(); ++i)
            names.push_back("T" + std::to_string(i + 1));
    }
    if (names.size() != v->parity.size())
        throw std::invalid_argument("GradedVariables: name/parity size mismatch");
    v->name = std::move(names);
    return v;
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

int monomial_parity(const Monomial& m, const GradedVariables& vars) {
    int p = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (vars.parity[i]) p += m[i];
    return p & 1;
}

std::string monomial_to_string(const Monomial& m, const GradedVariables& vars) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!first) os << "*";
        first = false;
        os << vars.name[i];
        if (m[i] > 1) os << "^" << int(m[i]);
    }
    if (first) os << "1";
    return os.str();
}

Series Series::constant(VarsPtr vars, const Rational& c) {
    Series s(vars);
    if (c != 0) s.terms_[Monomial(vars->parity.size(), 0)] = c;
    return s;
}

Series Series::variable(VarsPtr vars, int i) {
    Series s(vars);
    Monomial m(vars->parity.size(), 0);
    m.at(i) = 1;
    s.terms_[m] = Rational(1);
    return s;
}

Series Series::monomial(VarsPtr vars, Monomial m, const Rational& c) {
    Series s(vars);
    if (c != 0) s.terms_[std::move(m)] = c;
    return s;
}

int Series::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

Rational Series::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const {
    if (!vars_) return Rational(0);
    return coeff(Monomial(vars_->parity.size(), 0));
}

void Series::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Series& Series::operator+=(const Series& o) {
    if (!vars_) vars_ = o.vars_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (!vars_) vars_ = o.vars_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Series Series::operator+(const Series& o) const {
    Series r = *this;
    r += o;
    return r;
}

Series Series::operator-(const Series& o) const {
    Series r = *this;
    r -= o;
    return r;
}

Series Series::operator-() const { return scaled(Rational(-1)); }

Series Series::scaled(const Rational& c) const {
    Series r(vars_);
    if (c == 0) return r;
    for (const auto& [m, x] : terms_) r.terms_[m] = x * c;
    return r;
}

Series Series::truncated(int max_degree) const {
    Series r(vars_);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) <= max_degree) r.terms_[m] = c;
    return r;
}

Series Series::parity_twisted(int p) const {
    if ((p & 1) == 0) return *this;
    Series r(vars_);
    for (const auto& [m, c] : terms_)
        r.terms_[m] = monomial_parity(m, *vars_) ? -c : c;
    return r;
}

Series Series::derivative(int var) const {
    if (vars_->parity.at(var) != 0)
        throw std::invalid_argument("derivative along an odd variable");
    Series r(vars_);
    for (const auto& [m, c] : terms_) {
        if (!m[var]) continue;
        Monomial mm = m;
        --mm[var];
        r.add_term(mm, c * int(m[var]));
    }
    return r;
}

std::string Series::leading_monomial_string() const {
    if (terms_.empty()) return "0";
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (monomial_degree(it->first) < monomial_degree(best->first)) best = it;
    return monomial_to_string(best->first, *vars_);
}

std::string Series::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << chgraph::to_string(c) << ")*" << monomial_to_string(m, *vars_);
    }
    return os.str();
}

Series series_mul(const Series& a, const Series& b, int D) {
    if (a.vars() && b.vars() && a.vars()->parity != b.vars()->parity)
        throw std::invalid_argument("series_mul: variable sets differ");
    Series r(a.vars() ? a.vars() : b.vars());
    if (!r.vars()) return r;
    const auto& vars = *r.vars();
    const int n = vars.count();
    for (const auto& [ma, ca] : a.terms()) {
        const int da = monomial_degree(ma);
        if (da > D) continue;
        for (const auto& [mb, cb] : b.terms()) {
            if (da + monomial_degree(mb) > D) continue;
            // odd squares vanish; count odd-odd crossings for the sign
            bool dead = false;
            long crossings = 0;
            int odd_above = 0;  // odd letters of ma with index > i, scanned high to low
            Monomial m(n, 0);
            for (int i = n - 1; i >= 0; --i) {
                if (vars.parity[i] && mb[i]) crossings += odd_above;
                if (vars.parity[i] && ma[i] && mb[i]) { dead = true; break; }
                if (vars.parity[i] && ma[i]) ++odd_above;
                m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
            }
            if (dead) continue;
            Rational c = ca * cb;
            if (crossings & 1) c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities) {
    const std::size_t k = perm.size();
    if (parities.size() != k)
        throw std::invalid_argument("koszul_sign: size mismatch");
    std::vector<bool> seen(k, false);
    for (int p : perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= k || seen[p])
            throw std::invalid_argument("koszul_sign: not a permutation");
        seen[p] = true;
    }
    // sign = (-1)^{# inversions between odd slots}
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (perm[i] > perm[j] && parities[i] && parities[j]) sign = -sign;
    return sign;
}

}  // namespace chgraph
