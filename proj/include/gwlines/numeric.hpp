#ifndef GWLINES_NUMERIC_HPP
#define GWLINES_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace gwlines {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }

bool is_prime_u64(std::uint64_t n);
bool is_prime(const BigInt& n);

/// Prime factorization of |n| (n != 0); trial division plus Pollard-Brent rho.
std::map<BigInt, int> factorize(BigInt n);

bool is_perfect_square(const BigInt& n);

/// Signed squarefree kernel of a nonzero integer.
BigInt squarefree_part(const BigInt& n);

/// Signed squarefree kernel of num*den, i.e. the canonical square-class
/// representative of a nonzero rational.
BigInt squarefree_part(const BigRat& q);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

} // namespace gwlines

#endif
