#ifndef GWLINES_EKL_HPP
#define GWLINES_EKL_HPP

#include "gwlines/groebner.hpp"
#include "gwlines/quadform.hpp"

#include <string>

namespace gwlines {

/// A square polynomial system vanishing at the origin.
struct PolySystem {
    PolySystem(FieldPtr f, std::vector<std::string> var_names, std::vector<Poly> ps);
    FieldPtr field;
    std::vector<std::string> vars;
    std::vector<Poly> polys;
    unsigned r() const { return static_cast<unsigned>(polys.size()); }
};

/// The finite quotient algebra k[x_1..x_r]/<f_1..f_r> when the origin is
/// the only common zero over the closure.
class LocalAlgebra {
public:
    LocalAlgebra(std::vector<Poly> gb, std::vector<Exp> basis, FieldPtr f, unsigned nvars);

    const std::vector<Poly>& groebner() const { return gb_; }
    const std::vector<Exp>& basis() const { return basis_; }
    unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
    const FieldPtr& field() const { return f_; }

    Poly normal_form(const Poly& p) const;
    /// Coordinates of NF(p) in the monomial basis.
    std::vector<FieldElem> coords(const Poly& p) const;

private:
    std::vector<Poly> gb_;
    std::vector<Exp> basis_;
    std::map<Exp, std::size_t> index_;
    FieldPtr f_;
    unsigned nvars_;
};

/// Errors: not-isolated when the quotient is infinite-dimensional,
/// zero-not-unique when a variable fails to be nilpotent.
LocalAlgebra local_algebra(const PolySystem& sys);

enum class SocleAssign { LeastIndex, GreatestIndex };

/// The distinguished socle element det(a_ij) for the decomposition
/// f_i = sum_j a_ij x_j, monomials assigned to the least (or greatest)
/// variable index dividing them; returned as a normal form.
Poly socle_element(const PolySystem& sys, const LocalAlgebra& A,
                   SocleAssign assign = SocleAssign::LeastIndex);

struct EKLForm {
    std::vector<std::vector<FieldElem>> gram; // on the monomial basis
    GWClass cls;
    std::vector<FieldElem> socle; // coordinates of the socle element
    unsigned dim;
};

struct EklOptions {
    SocleAssign assign = SocleAssign::LeastIndex;
    /// Custom functional values on the basis monomials; must send the
    /// socle element to 1. Default: dual of the largest-degree basis
    /// monomial supporting the socle element, scaled.
    const std::vector<FieldElem>* eta = nullptr;
};

/// The bilinear form beta(x,y) = eta(xy) on the local algebra, as a
/// diagonalized GW class of rank dim.
EKLForm ekl_form(const PolySystem& sys, const EklOptions& opts = {});

/// Local degree at a simple zero with residue field L: Tr_{L/k}<J>.
GWClass simple_zero_index(const FieldElem& jacobian, const FieldPtr& base);

} // namespace gwlines

#endif
