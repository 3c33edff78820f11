#ifndef GWLINES_GROEBNER_HPP
#define GWLINES_GROEBNER_HPP

#include "gwlines/poly.hpp"

#include <optional>

namespace gwlines {

enum class MonomialOrder { Lex, DegRevLex };

/// Strict order on exponent vectors; variable 0 is the most significant
/// for Lex.
bool mono_less(const Exp& a, const Exp& b, MonomialOrder o);
bool mono_divides(const Exp& a, const Exp& b); // a | b
Exp mono_lcm(const Exp& a, const Exp& b);

Exp leading_exp(const Poly& p, MonomialOrder o);

/// Reduced Groebner basis (monic, inter-reduced, sorted by leading term).
/// Deterministic: the reduced basis is unique for the ideal and order.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, MonomialOrder o);

/// Full normal form against a Groebner basis.
Poly normal_form(const Poly& p, const std::vector<Poly>& gb, MonomialOrder o);

/// Standard monomials of a zero-dimensional ideal, sorted in the order;
/// nullopt when the quotient is infinite-dimensional.
std::optional<std::vector<Exp>> quotient_basis(const std::vector<Poly>& gb, MonomialOrder o);

/// FGLM change of order from a degrevlex basis of a zero-dimensional
/// ideal to the reduced lex basis.
std::vector<Poly> fglm_to_lex(const std::vector<Poly>& gb_drl);

} // namespace gwlines

#endif
