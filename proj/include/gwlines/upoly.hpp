#ifndef GWLINES_UPOLY_HPP
#define GWLINES_UPOLY_HPP

#include "gwlines/field.hpp"
#include "gwlines/rng.hpp"

#include <utility>
#include <vector>

namespace gwlines {

/// Dense univariate polynomial over an arbitrary Field.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(FieldPtr f) : f_(std::move(f)) {}
    UPoly(FieldPtr f, std::vector<FieldElem> coeffs);

    static UPoly zero(FieldPtr f) { return UPoly(std::move(f)); }
    static UPoly constant(const FieldElem& c);
    static UPoly x(FieldPtr f); // the variable
    static UPoly monomial(FieldPtr f, unsigned deg, const FieldElem& c);

    const FieldPtr& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    FieldElem coeff(unsigned i) const;
    const std::vector<FieldElem>& coeffs() const { return c_; }
    const FieldElem& lead() const;
    bool is_monic() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const FieldElem& s) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly monic() const;
    UPoly derivative() const;
    FieldElem eval(const FieldElem& x) const;

    /// Coefficient-wise map into another field (e.g. along an embedding).
    template <typename Fn> UPoly map_coeffs(FieldPtr target, Fn&& fn) const {
        UPoly r(std::move(target));
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(fn(c));
        r.trim();
        return r;
    }

    std::string to_string() const;

private:
    void trim();
    FieldPtr f_;
    std::vector<FieldElem> c_; // low degree first, no trailing zeros
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b); // monic
UPoly powmod(const UPoly& base, BigInt e, const UPoly& mod);

/// Deterministic total order on polynomials: by degree, then by
/// representation order of coefficients from the top down.
bool upoly_less(const UPoly& a, const UPoly& b);

bool is_irreducible(const UPoly& g); // finite fields, Rabin's test

struct UFactor {
    UPoly factor; // monic irreducible
    int multiplicity;
};

struct UFactorization {
    FieldElem unit; // leading coefficient of the input
    std::vector<UFactor> factors;
};

/// Squarefree decomposition, then distinct-degree, then seeded
/// equal-degree splitting; the factor list is sorted deterministically.
UFactorization factor_univariate(const UPoly& g, std::uint64_t seed);

/// All roots of g lying in its coefficient field, sorted in
/// representation order (finite fields).
std::vector<FieldElem> roots_in_field(const UPoly& g, std::uint64_t seed);

} // namespace gwlines

#endif
