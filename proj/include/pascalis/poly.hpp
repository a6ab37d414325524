#pragma once

// Univariate polynomials over BigInt (indeterminate written "l" for lambda).
// Coefficients are stored lowest degree first; the zero polynomial is the
// empty coefficient vector.

#include "pascalis/exact.hpp"

#include <string>
#include <vector>

namespace pascalis {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(const BigInt& v);
    static IntPolynomial variable();  // the monomial l

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    BigInt coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const BigInt& s) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    BigRational evaluate(const BigRational& x) const;
    IntPolynomial derivative() const;

    // Exact quotient this / d; throws std::logic_error if the division leaves
    // a remainder or a non-integer coefficient (an elimination bug upstream).
    IntPolynomial div_exact(const IntPolynomial& d) const;

    std::string str() const;  // e.g. "3*l^2 - 2*l + 1"

private:
    void trim();
    std::vector<BigInt> c_;
};

}  // namespace pascalis
