#include "gwlines/ekl.hpp"

#include <functional>
#include <numeric>

namespace gwlines {

PolySystem::PolySystem(FieldPtr f, std::vector<std::string> var_names, std::vector<Poly> ps)
    : field(std::move(f)), vars(std::move(var_names)), polys(std::move(ps)) {
    if (polys.size() != vars.size())
        fail(errc::inconsistent_system, "system is not square");
    for (const auto& p : polys) {
        if (p.nvars() != vars.size()) fail(errc::inconsistent_system, "variable count mismatch");
        if (!p.has_zero_constant_term()) fail(errc::inconsistent_system, "polynomial does not vanish at the origin");
    }
}

LocalAlgebra::LocalAlgebra(std::vector<Poly> gb, std::vector<Exp> basis, FieldPtr f, unsigned nvars)
    : gb_(std::move(gb)), basis_(std::move(basis)), f_(std::move(f)), nvars_(nvars) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

Poly LocalAlgebra::normal_form(const Poly& p) const {
    return gwlines::normal_form(p, gb_, MonomialOrder::DegRevLex);
}

std::vector<FieldElem> LocalAlgebra::coords(const Poly& p) const {
    Poly nf = normal_form(p);
    std::vector<FieldElem> v(basis_.size(), FieldElem(f_, 0));
    for (const auto& [e, c] : nf.terms()) {
        auto it = index_.find(e);
        if (it == index_.end()) fail(errc::internal_inconsistency, "normal form off the basis");
        v[it->second] = c;
    }
    return v;
}

LocalAlgebra local_algebra(const PolySystem& sys) {
    auto gb = groebner_basis(sys.polys, MonomialOrder::DegRevLex);
    auto qb = quotient_basis(gb, MonomialOrder::DegRevLex);
    if (!qb) fail(errc::not_isolated, "the quotient is infinite-dimensional");
    if (qb->empty()) fail(errc::inconsistent_system, "unit ideal from a system vanishing at the origin");
    LocalAlgebra A(gb, *qb, sys.field, sys.r());
    // the origin must be the only zero over the closure: variables nilpotent
    for (unsigned v = 0; v < sys.r(); ++v) {
        Poly x = Poly::variable(sys.field, sys.r(), v);
        Poly t = A.normal_form(x);
        bool nilpotent = t.is_zero();
        for (unsigned k = 1; k < A.dim() && !nilpotent; ++k) {
            t = A.normal_form(t * x);
            nilpotent = t.is_zero();
        }
        if (!nilpotent)
            fail(errc::zero_not_unique, "variable " + sys.vars[v] + " is not nilpotent in the quotient");
    }
    return A;
}

Poly socle_element(const PolySystem& sys, const LocalAlgebra& A, SocleAssign assign) {
    unsigned r = sys.r();
    std::vector<std::vector<Poly>> a(r, std::vector<Poly>(r, Poly(sys.field, r)));
    for (unsigned i = 0; i < r; ++i) {
        for (const auto& [e, c] : sys.polys[i].terms()) {
            unsigned j = r;
            if (assign == SocleAssign::LeastIndex) {
                for (unsigned k = 0; k < r; ++k)
                    if (e[k] > 0) {
                        j = k;
                        break;
                    }
            } else {
                for (unsigned k = r; k-- > 0;)
                    if (e[k] > 0) {
                        j = k;
                        break;
                    }
            }
            if (j == r) fail(errc::internal_inconsistency, "constant term in a vanishing system");
            Exp q = e;
            q[j] -= 1;
            a[i][j].add_term(q, c);
        }
    }
    // determinant by cofactor expansion (r <= 4 in practice)
    std::vector<unsigned> cols(r);
    std::iota(cols.begin(), cols.end(), 0u);
    std::function<Poly(unsigned, std::vector<unsigned>&)> det = [&](unsigned row,
                                                                    std::vector<unsigned>& cs) -> Poly {
        if (cs.empty()) return Poly::constant(sys.field, r, FieldElem(sys.field, 1));
        Poly acc(sys.field, r);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            unsigned c = cs[k];
            if (a[row][c].is_zero()) continue;
            std::vector<unsigned> rest;
            for (std::size_t l = 0; l < cs.size(); ++l)
                if (l != k) rest.push_back(cs[l]);
            Poly minor = det(row + 1, rest);
            Poly term = a[row][c] * minor;
            if (k % 2) term = -term;
            acc += term;
        }
        return acc;
    };
    Poly E = A.normal_form(det(0, cols));
    if (E.is_zero()) fail(errc::inconsistent_system, "socle element reduces to zero");
    return E;
}

EKLForm ekl_form(const PolySystem& sys, const EklOptions& opts) {
    const auto& F = sys.field;
    if (F->finite() && F->characteristic() == 2) fail(errc::unsupported_characteristic, "characteristic 2");
    LocalAlgebra A = local_algebra(sys);
    Poly E = socle_element(sys, A, opts.assign);
    std::vector<FieldElem> socle = A.coords(E);
    unsigned D = A.dim();

    std::vector<FieldElem> eta;
    if (opts.eta) {
        if (opts.eta->size() != D) fail(errc::inconsistent_system, "eta has the wrong length");
        eta = *opts.eta;
        FieldElem check(F, 0);
        for (unsigned k = 0; k < D; ++k) check += eta[k] * socle[k];
        if (!check.is_one()) fail(errc::inconsistent_system, "eta does not send the socle element to 1");
    } else {
        // dual of the largest-degree basis monomial supporting E
        std::size_t best = D;
        for (std::size_t k = 0; k < D; ++k) {
            if (socle[k].is_zero()) continue;
            if (best == D || mono_less(A.basis()[best], A.basis()[k], MonomialOrder::DegRevLex)) best = k;
        }
        if (best == D) fail(errc::inconsistent_system, "socle element has no support");
        eta.assign(D, FieldElem(F, 0));
        eta[best] = socle[best].inverse();
    }

    // Gram matrix of (x,y) -> eta(xy) on the monomial basis
    std::vector<std::vector<FieldElem>> gram(D, std::vector<FieldElem>(D, FieldElem(F, 0)));
    for (unsigned u = 0; u < D; ++u) {
        for (unsigned v = u; v < D; ++v) {
            Exp prod(sys.r());
            for (unsigned i = 0; i < sys.r(); ++i) prod[i] = A.basis()[u][i] + A.basis()[v][i];
            auto coords = A.coords(Poly::monomial(F, sys.r(), prod, FieldElem(F, 1)));
            FieldElem val(F, 0);
            for (unsigned k = 0; k < D; ++k) val += eta[k] * coords[k];
            gram[u][v] = gram[v][u] = val;
        }
    }
    SymBilinearForm form(F, gram);
    GWClass cls = [&] {
        try {
            return diagonalize(form);
        } catch (const gw_error& e) {
            if (e.code() == errc::degenerate_form)
                fail(errc::inconsistent_system, "EKL pairing is degenerate");
            throw;
        }
    }();
    return EKLForm{std::move(gram), std::move(cls), std::move(socle), D};
}

GWClass simple_zero_index(const FieldElem& jacobian, const FieldPtr& base) {
    if (jacobian.is_zero()) fail(errc::not_simple_zero, "vanishing Jacobian determinant");
    return scharlau_trace(jacobian, base);
}

} // namespace gwlines
