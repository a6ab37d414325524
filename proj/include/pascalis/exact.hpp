#pragma once

// Arbitrary-precision integers and rationals (GMP-backed) plus the
// combinatorial primitives used throughout: factorials, binomials,
// double-factorial products, exact integer roots and smooth factorization.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pascalis {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Decimal string conversions.  Formats: BigInt "-123"; BigRational "7/3"
// (plain "7" when the denominator is 1).
std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);
BigInt parse_bigint(const std::string& s);
BigRational parse_rational(const std::string& s);

// num/den reduced to lowest terms with a positive denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInt factorial(unsigned long k);

// C(a, b); 0 when b < 0 or b > a.
BigInt binomial(unsigned long a, long b);

// 3!! * 5!! * ... * (2m-3)!!  (m >= 3)
BigInt double_factorial_product(int m);

BigInt pow_int(const BigInt& base, unsigned long exp);

// g with g^m == N, if N is a perfect m-th power (N > 0, m >= 1).
// The floor root is verified by powering before being returned.
std::optional<BigInt> integer_mth_root(const BigInt& n, unsigned long m);

struct Factorization {
    std::vector<std::pair<BigInt, unsigned long>> factors;  // (prime, exponent), primes increasing
    BigInt residual = 1;  // unfactored cofactor, 1 when fully factored

    BigInt reconstruct() const;
    bool complete() const { return residual == 1; }
    // "2^3 * 3^2" style presentation; "1" for an empty factorization.
    std::string str() const;
};

// Trial division by all primes <= bound; whatever remains lands in residual.
Factorization factor_smooth(const BigInt& n, unsigned long bound = 1000000);

}  // namespace pascalis
