#pragma once

// Tensor determinants as multivariate resultants: Sylvester matrices for
// dimension 2, the Macaulay quotient formula for dimension >= 3, the n = 2
// characteristic polynomial over Z[lambda], and real root isolation.

#include "pascalis/matrix.hpp"
#include "pascalis/poly.hpp"
#include "pascalis/tensor.hpp"

#include <map>
#include <string>
#include <vector>

namespace pascalis {

inline constexpr std::size_t kDefaultResultantCap = 2000;
inline constexpr std::size_t kHardResultantCap = 20000;

// Homogeneous polynomial in nvars variables, exponent vector -> coefficient.
struct HomogeneousForm {
    int nvars = 0;
    int degree = 0;
    std::map<std::vector<int>, BigRational> terms;
};

// The gradient system F_i = (T x^{m-1})_i, i = 1..n, each of degree m-1.
std::vector<HomogeneousForm> gradient_forms(const ExactSymmetricTensor& t);

struct MacaulayStructure {
    int nvars = 0;
    std::vector<int> degrees;                 // d_i
    int critical_degree = 0;                  // sum(d_i - 1) + 1
    std::vector<std::vector<int>> monomials;  // total degree d, graded-lex descending, x1 > ... > xn
    std::vector<int> row_poly;                // monomial row r multiplies F_{row_poly[r]} (0-based, least index)
    std::vector<std::size_t> denominator_indices;  // divisible by x_i^{d_i} for >= 2 distinct i

    std::size_t size() const { return monomials.size(); }
};

MacaulayStructure macaulay_structure(int nvars, const std::vector<int>& degrees,
                                     std::size_t size_cap = kDefaultResultantCap);

struct MacaulayMatrices {
    MacaulayStructure structure;
    Matrix<BigInt> numerator;
    Matrix<BigInt> denominator;
    std::vector<BigInt> form_scales;  // L_i cleared from F_i to reach integer coefficients
    std::vector<std::map<std::vector<int>, BigInt>> integer_forms;
};

MacaulayMatrices macaulay_build(const std::vector<HomogeneousForm>& forms,
                                std::size_t size_cap = kDefaultResultantCap);
MacaulayMatrices macaulay_build(const ExactSymmetricTensor& t, std::size_t size_cap = kDefaultResultantCap);

struct MacaulayDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// det(numerator)/det(denominator), rescaled exactly for the cleared
// denominators (Res is homogeneous of degree prod_{j != i} d_j in F_i).
BigRational macaulay_resultant(const std::vector<HomogeneousForm>& forms,
                               std::size_t size_cap = kDefaultResultantCap, int threads = 1);

// Classical Sylvester matrix: deg(q) shifted copies of p's coefficients above
// deg(p) shifted copies of q's.  Coefficient vectors are highest-power-of-x1
// first (length = degree + 1); works over any ring with RingTraits.
template <typename R>
Matrix<R> sylvester_matrix(const std::vector<R>& p, const std::vector<R>& q) {
    auto all_zero = [](const std::vector<R>& v) {
        for (const R& c : v)
            if (!RingTraits<R>::is_zero(c)) return false;
        return true;
    };
    if (p.empty() || q.empty() || all_zero(p) || all_zero(q))
        throw std::invalid_argument("sylvester_matrix: zero polynomial");
    const std::size_t d1 = p.size() - 1, d2 = q.size() - 1;
    Matrix<R> s(d1 + d2, d1 + d2);
    for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t k = 0; k <= d1; ++k) s(i, i + k) = p[k];
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t k = 0; k <= d2; ++k) s(d2 + i, i + k) = q[k];
    return s;
}

enum class DetMethod { sylvester, macaulay };

struct DetResult {
    BigRational signed_value;
    BigRational absolute;
    DetMethod method = DetMethod::sylvester;
    std::string sign_note;
};

// Exact determinant of a symmetric tensor (n = 2 Sylvester, n >= 3 Macaulay).
DetResult tensor_determinant(const ExactSymmetricTensor& t, std::size_t size_cap = kDefaultResultantCap,
                             int threads = 1);

// Characteristic polynomial for n = 2: resultant over Z[lambda] of the two
// gradient forms with lambda subtracted from the x_i^{m-1} coefficient of
// form i.  Exact for integer tensors; rational tensors are cleared to integer
// coefficients first, which scales the polynomial by a positive constant.
IntPolynomial char_poly_dim2(const ExactSymmetricTensor& t);

// All distinct real roots to absolute tolerance tol (Sturm isolation on the
// square-free part, then bisection).
std::vector<double> real_roots(const IntPolynomial& p, double tol);

}  // namespace pascalis
