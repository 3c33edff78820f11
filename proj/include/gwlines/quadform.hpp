#ifndef GWLINES_QUADFORM_HPP
#define GWLINES_QUADFORM_HPP

#include "gwlines/field.hpp"

#include <optional>
#include <vector>

namespace gwlines {

/// A symmetric bilinear form given by its Gram matrix.
struct SymBilinearForm {
    SymBilinearForm(FieldPtr f, std::vector<std::vector<FieldElem>> gram);
    FieldPtr field;
    std::vector<std::vector<FieldElem>> gram;
};

/// A diagonalized Grothendieck-Witt class: an ordered list of square-class
/// representatives <d_1> + ... + <d_r>.
class GWClass {
public:
    GWClass(FieldPtr f, std::vector<FieldElem> entries);
    static GWClass multiple(const FieldPtr& f, int count, const FieldElem& a);

    const FieldPtr& field() const { return f_; }
    const std::vector<FieldElem>& entries() const { return entries_; }
    unsigned rank() const { return static_cast<unsigned>(entries_.size()); }

    /// Concatenation of diagonal entries (orthogonal sum).
    GWClass operator+(const GWClass& o) const;
    /// Entry-wise multiplication by <s>.
    GWClass scaled(const FieldElem& s) const;

private:
    FieldPtr f_;
    std::vector<FieldElem> entries_;
};

/// Symmetric Gaussian congruence; requires char != 2 and det != 0.
GWClass diagonalize(const SymBilinearForm& b);

FieldElem gram_det(const SymBilinearForm& b);

/// A place of Q: the real place or a finite prime.
struct Place {
    bool infinite = false;
    BigInt p = 0;
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return infinite;
        return p < o.p;
    }
    bool operator==(const Place& o) const { return infinite == o.infinite && p == o.p; }
};

inline Place place_inf() { return {true, 0}; }
inline Place place_p(BigInt p) { return {false, std::move(p)}; }

/// Local Hilbert symbol (a,b)_v over Q, valued in {+1,-1}.
int hilbert_symbol(const BigRat& a, const BigRat& b, const Place& v);

struct GWInvariants {
    unsigned rank = 0;
    FieldElem disc;
    std::optional<int> signature;                 // rationals only
    std::vector<std::pair<Place, int>> hasse;     // rationals only
};

GWInvariants gw_invariants(const GWClass& c);

/// Reported place set of a rational class: infinity, 2, and the odd primes
/// dividing some entry.
std::vector<Place> reported_places(const GWClass& c);

int hasse_witt_at(const GWClass& c, const Place& v);

/// Equality in GW(k) for k finite (rank + discriminant) or Q
/// (rank, signature, discriminant, Hasse-Witt everywhere).
bool gw_equal(const GWClass& a, const GWClass& b);

/// Scharlau trace of <u> along L/k: diagonalization of the Gram matrix
/// Tr(u b_i b_j) in the power basis of the generator of L.
GWClass scharlau_trace(const FieldElem& u, const FieldPtr& base);

} // namespace gwlines

#endif
