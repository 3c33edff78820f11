#include "gwlines/poly.hpp"

#include <numeric>
#include <sstream>

namespace gwlines {

Poly Poly::constant(FieldPtr f, unsigned nvars, const FieldElem& c) {
    Poly r(std::move(f), nvars);
    if (!c.is_zero()) r.t_.emplace(Exp(nvars, 0), c);
    return r;
}

Poly Poly::variable(FieldPtr f, unsigned nvars, unsigned i) {
    if (i >= nvars) fail(errc::internal_inconsistency, "variable index out of range");
    Exp e(nvars, 0);
    e[i] = 1;
    return monomial(std::move(f), nvars, std::move(e), FieldElem(f, 1));
}

Poly Poly::monomial(FieldPtr f, unsigned nvars, Exp e, const FieldElem& c) {
    Poly r(std::move(f), nvars);
    if (e.size() != nvars) fail(errc::internal_inconsistency, "exponent vector length mismatch");
    if (!c.is_zero()) r.t_.emplace(std::move(e), c);
    return r;
}

void Poly::add_term(const Exp& e, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

FieldElem Poly::coeff(const Exp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? FieldElem(f_, 0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(f_, nvars_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(f_, nvars_);
    for (const auto& [e1, c1] : t_) {
        for (const auto& [e2, c2] : o.t_) {
            Exp e(nvars_);
            for (unsigned i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Poly Poly::operator*(const FieldElem& s) const {
    Poly r(f_, nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c * s);
    return r;
}

Poly Poly::derivative(unsigned var) const {
    Poly r(f_, nvars_);
    for (const auto& [e, c] : t_) {
        if (e[var] == 0) continue;
        Exp d = e;
        d[var] -= 1;
        r.add_term(d, c * FieldElem(f_, static_cast<std::int64_t>(e[var])));
    }
    return r;
}

Poly Poly::directional_derivative(const std::vector<FieldElem>& v) const {
    Poly r(f_, nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        if (v[i].is_zero()) continue;
        r += derivative(i) * v[i];
    }
    return r;
}

FieldElem Poly::eval(const std::vector<FieldElem>& point) const {
    FieldElem acc(f_, 0);
    for (const auto& [e, c] : t_) {
        FieldElem term = c;
        for (unsigned i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        }
        acc += term;
    }
    return acc;
}

Poly Poly::substitute_linear(const std::vector<std::vector<FieldElem>>& M) const {
    unsigned new_nvars = M.empty() ? 0 : static_cast<unsigned>(M[0].size());
    std::vector<Poly> images;
    images.reserve(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        Poly img(f_, new_nvars);
        for (unsigned j = 0; j < new_nvars; ++j) {
            if (M[i][j].is_zero()) continue;
            img += Poly::variable(f_, new_nvars, j) * M[i][j];
        }
        images.push_back(std::move(img));
    }
    Poly r(f_, new_nvars);
    for (const auto& [e, c] : t_) {
        Poly term = Poly::constant(f_, new_nvars, c);
        for (unsigned i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) term = term * images[i];
        }
        r += term;
    }
    return r;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

bool Poly::is_homogeneous(unsigned deg) const {
    for (const auto& [e, c] : t_) {
        if (std::accumulate(e.begin(), e.end(), 0u) != deg) return false;
    }
    return true;
}

bool Poly::has_zero_constant_term() const { return coeff(Exp(nvars_, 0)).is_zero(); }

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*";
            if (i < var_names.size())
                os << var_names[i];
            else
                os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Poly embed_poly(const Poly& p, const FieldPtr& target) {
    return p.map_coeffs(target, [&](const FieldElem& c) { return embed(c, target); });
}

} // namespace gwlines
