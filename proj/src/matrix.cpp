#include "pascalis/matrix.hpp"

namespace pascalis {

LUFactors lu_exact(const Matrix<BigRational>& m) {
    if (!m.square()) throw std::invalid_argument("lu_exact: matrix must be square");
    const std::size_t n = m.rows();
    LUFactors f{Matrix<BigRational>::identity(n), m, 1};
    Matrix<BigRational>& u = f.U;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(u(k, k)) == 0)
            throw std::runtime_error("lu_exact: zero pivot at step " + std::to_string(k + 1) +
                                     "; LU does not exist without pivoting");
        for (std::size_t i = k + 1; i < n; ++i) {
            BigRational factor = u(i, k) / u(k, k);
            f.L(i, k) = factor;
            u(i, k) = 0;
            if (sgn(factor) == 0) continue;
            for (std::size_t j = k + 1; j < n; ++j) u(i, j) -= factor * u(k, j);
        }
    }
    return f;
}

BigInt det_triangular_stack(const Matrix<BigInt>& upper, const std::vector<BigInt>& last_row) {
    const std::size_t j = last_row.size();
    if (upper.rows() + 1 < j || upper.cols() < j)
        throw std::invalid_argument("det_triangular_stack: shape mismatch");
    // Fraction-free: e <- u_kk * e - e_k * U_k zeroes position k while scaling
    // the running row by u_kk, so after j-1 steps e[j-1] is exactly det.
    std::vector<BigInt> e = last_row;
    for (std::size_t k = 0; k + 1 < j; ++k) {
        const BigInt pivot = upper(k, k);
        const BigInt ek = e[k];
        e[k] = 0;
        for (std::size_t t = k + 1; t < j; ++t) e[t] = pivot * e[t] - ek * upper(k, t);
    }
    return e[j - 1];
}

Matrix<BigRational> to_rational(const Matrix<BigInt>& m) {
    Matrix<BigRational> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = BigRational(m(i, j));
    return out;
}

}  // namespace pascalis
