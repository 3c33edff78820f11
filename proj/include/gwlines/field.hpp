#ifndef GWLINES_FIELD_HPP
#define GWLINES_FIELD_HPP

#include "gwlines/errors.hpp"
#include "gwlines/numeric.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gwlines {

enum class FieldKind { PrimeFinite, ExtensionFinite, Rational, NumberField };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A field descriptor. Finite fields are always represented absolutely,
/// i.e. F_{p^n} as F_p[t]/(modulus) with a monic irreducible modulus of
/// degree n over F_p. Number fields are monogenic Q[t]/(m), deg m <= 4.
/// Characteristic 2 is rejected everywhere.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr prime(std::uint64_t p);
    /// Canonical modulus: lexicographically least monic irreducible of
    /// degree n over F_p, coefficient tuples (c0,...,c_{n-1}) compared
    /// low-to-high as integers.
    static FieldPtr extension(std::uint64_t p, unsigned n);
    static FieldPtr extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
    static FieldPtr rationals();
    static FieldPtr number_field(std::vector<BigRat> modulus);

    FieldKind kind() const { return kind_; }
    bool finite() const { return kind_ == FieldKind::PrimeFinite || kind_ == FieldKind::ExtensionFinite; }
    std::uint64_t characteristic() const { return finite() ? p_ : 0; }
    unsigned degree() const { return deg_; }
    BigInt order() const; // p^deg for finite fields
    const std::vector<std::uint64_t>& finite_modulus() const { return fmod_; }
    const std::vector<BigRat>& nf_modulus() const { return nfmod_; }

    std::string describe() const;

private:
    Field() = default;
    FieldKind kind_ = FieldKind::Rational;
    std::uint64_t p_ = 0;
    unsigned deg_ = 1;
    std::vector<std::uint64_t> fmod_;
    std::vector<BigRat> nfmod_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// An element of a Field, in canonical representation: residues in [0,p),
/// reduced coefficient vectors, fractions in lowest terms with positive
/// denominator (maintained by the rational type itself).
class FieldElem {
public:
    FieldElem() = default;
    explicit FieldElem(FieldPtr f); // zero
    FieldElem(FieldPtr f, std::int64_t v);
    FieldElem(FieldPtr f, const BigInt& v);
    FieldElem(FieldPtr f, const BigRat& v);
    /// Extension / number-field element from its coefficient vector
    /// (low degree first, length <= deg).
    static FieldElem from_coeffs(FieldPtr f, std::vector<std::uint64_t> coeffs);
    static FieldElem from_coeffs(FieldPtr f, std::vector<BigRat> coeffs);
    /// The class of t in F_p[t]/(m) or Q[t]/(m); identity on prime fields
    /// and Q is not meaningful, so requires deg > 1.
    static FieldElem generator(FieldPtr f);

    const FieldPtr& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem inverse() const;
    FieldElem pow(BigInt e) const;

    /// Position in the fixed enumeration of a finite field:
    /// sum c_i p^i over the coefficient vector. Total order used wherever
    /// the spec says "representation order".
    BigInt repr_index() const;

    std::uint64_t prime_value() const;
    const BigRat& rational_value() const;
    std::vector<std::uint64_t> finite_coeffs() const;  // length deg
    std::vector<BigRat> nf_coeffs() const;             // length deg

    std::string to_string() const;

private:
    FieldPtr f_;
    std::uint64_t r_ = 0;           // PrimeFinite
    std::vector<std::uint64_t> v_;  // ExtensionFinite, size deg
    BigRat q_;                      // Rational
    std::vector<BigRat> nv_;        // NumberField, size deg
};

bool repr_less(const FieldElem& a, const FieldElem& b);

/// x -> x^(p^k), the k-fold absolute Frobenius (finite fields).
FieldElem frobenius(const FieldElem& x, unsigned k = 1);

FieldElem element_by_index(const FieldPtr& f, BigInt index); // finite fields

// -- the quadratic / trace operations of the field layer --

bool is_square(const FieldElem& x);

/// Canonical square-class representative: finite fields give 1 or the
/// least non-square in representation order; Q gives the signed
/// squarefree part; number fields give x itself (or 1 when square).
FieldElem square_class(const FieldElem& x);

FieldElem canonical_nonsquare(const FieldPtr& f); // finite fields

/// Trace of u in L down to the base field along the fixed embedding.
/// Supported shapes: finite L over finite k with the same characteristic
/// and deg(k) | deg(L), and Q[t]/(m) over Q.
FieldElem field_trace(const FieldElem& u, const FieldPtr& base);

/// Image of x under the fixed embedding into target. The embedding sends
/// the source generator to its deterministically-first root in the
/// target (representation order); embeddings are cached per field pair.
FieldElem embed(const FieldElem& x, const FieldPtr& target);

/// Preimage of x under the fixed embedding of `sub`; errors when x is
/// not in the image.
FieldElem retract(const FieldElem& x, const FieldPtr& sub);

/// Galois conjugation of a degree-2 number field (t -> -a1 - t).
FieldElem nf_conjugate(const FieldElem& x);

} // namespace gwlines

#endif
