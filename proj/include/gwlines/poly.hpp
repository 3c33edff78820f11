#ifndef GWLINES_POLY_HPP
#define GWLINES_POLY_HPP

#include "gwlines/field.hpp"

#include <map>
#include <vector>

namespace gwlines {

using Exp = std::vector<unsigned>; // exponent vector, uniform length

/// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
class Poly {
public:
    Poly() = default;
    Poly(FieldPtr f, unsigned nvars) : f_(std::move(f)), nvars_(nvars) {}

    static Poly constant(FieldPtr f, unsigned nvars, const FieldElem& c);
    static Poly variable(FieldPtr f, unsigned nvars, unsigned i);
    static Poly monomial(FieldPtr f, unsigned nvars, Exp e, const FieldElem& c);

    const FieldPtr& field() const { return f_; }
    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Exp, FieldElem>& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }

    void add_term(const Exp& e, const FieldElem& c);
    FieldElem coeff(const Exp& e) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const FieldElem& s) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }

    Poly derivative(unsigned var) const;
    /// Directional derivative along v: sum_i v_i df/dx_i.
    Poly directional_derivative(const std::vector<FieldElem>& v) const;

    FieldElem eval(const std::vector<FieldElem>& point) const;

    /// Substitute x_i = sum_j M[i][j] y_j; M has nvars rows, the result
    /// lives in as many variables as M has columns.
    Poly substitute_linear(const std::vector<std::vector<FieldElem>>& M) const;

    template <typename Fn> Poly map_coeffs(FieldPtr target, Fn&& fn) const {
        Poly r(std::move(target), nvars_);
        for (const auto& [e, c] : t_) {
            FieldElem mc = fn(c);
            if (!mc.is_zero()) r.t_.emplace(e, mc);
        }
        return r;
    }

    unsigned total_degree() const; // 0 for the zero polynomial
    bool is_homogeneous(unsigned deg) const;
    bool has_zero_constant_term() const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    FieldPtr f_;
    unsigned nvars_ = 0;
    std::map<Exp, FieldElem> t_;
};

/// Embed every coefficient into an extension of the coefficient field.
Poly embed_poly(const Poly& p, const FieldPtr& target);

} // namespace gwlines

#endif
