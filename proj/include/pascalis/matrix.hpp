#pragma once

// Dense matrices over an exact ring (BigInt, BigRational, IntPolynomial)
// with fraction-free Bareiss determinants and pivot-free Doolittle LU.

#include "pascalis/exact.hpp"
#include "pascalis/poly.hpp"

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace pascalis {

template <typename R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
    static BigInt zero() { return BigInt(0); }
    static BigInt one() { return BigInt(1); }
    static bool is_zero(const BigInt& x) { return sgn(x) == 0; }
    // Bareiss divisions are exact by construction; a remainder means a bug.
    static BigInt exact_div(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (r != 0) throw std::logic_error("bareiss: inexact integer division");
        return q;
    }
    static std::string str(const BigInt& x) { return x.get_str(); }
};

template <>
struct RingTraits<BigRational> {
    static BigRational zero() { return BigRational(0); }
    static BigRational one() { return BigRational(1); }
    static bool is_zero(const BigRational& x) { return sgn(x) == 0; }
    static BigRational exact_div(const BigRational& a, const BigRational& b) {
        if (sgn(b) == 0) throw std::logic_error("bareiss: division by zero");
        return a / b;
    }
    static std::string str(const BigRational& x) { return x.get_str(); }
};

template <>
struct RingTraits<IntPolynomial> {
    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial one() { return IntPolynomial::constant(1); }
    static bool is_zero(const IntPolynomial& x) { return x.is_zero(); }
    static IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) { return a.div_exact(b); }
    static std::string str(const IntPolynomial& x) { return x.str(); }
};

template <typename R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, RingTraits<R>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<R>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const R& a = (*this)(i, k);
                if (RingTraits<R>::is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    // One row per line, tab-separated exact values (debug dumps).
    void dump(std::ostream& os) const {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << '\t';
                os << RingTraits<R>::str((*this)(i, j));
            }
            os << '\n';
        }
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> data_;
};

namespace detail {

// Bareiss update of rows [k+1, n) after choosing pivot row k; every division
// by the previous pivot is exact in the ring.
template <typename R>
void bareiss_step(Matrix<R>& m, std::size_t k, const R& prev_pivot, int threads) {
    const std::size_t n = m.rows();
    auto update_rows = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = RingTraits<R>::exact_div(num, prev_pivot);
            }
            m(i, k) = RingTraits<R>::zero();
        }
    };
    const std::size_t first = k + 1, count = n - first;
    if (threads <= 1 || count < 32) {
        update_rows(first, n);
        return;
    }
    const std::size_t nt = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t lo = first + count * t / nt;
        const std::size_t hi = first + count * (t + 1) / nt;
        pool.emplace_back([&, lo, hi, t] {
            try {
                update_rows(lo, hi);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace detail

// Exact determinant by fraction-free elimination.  Zero pivots are repaired
// by row swaps (sign tracked); a fully zero pivot column means det = 0.
template <typename R>
R bareiss_det(Matrix<R> m, int threads = 1) {
    if (!m.square()) throw std::invalid_argument("bareiss_det: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return RingTraits<R>::one();
    int sign = 1;
    R prev = RingTraits<R>::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (RingTraits<R>::is_zero(m(k, k))) {
            std::size_t r = k + 1;
            while (r < n && RingTraits<R>::is_zero(m(r, k))) ++r;
            if (r == n) return RingTraits<R>::zero();
            m.swap_rows(k, r);
            sign = -sign;
        }
        detail::bareiss_step(m, k, prev, threads);
        prev = m(k, k);
    }
    R det = m(n - 1, n - 1);
    return sign < 0 ? R(-det) : det;
}

// Leading principal minors produced by swap-free Bareiss elimination: after
// step k the pivot equals the (k+1)x(k+1) leading minor.  Stops early (and
// truncates the list) if a zero minor blocks further elimination.
template <typename R>
std::vector<R> leading_principal_minors(Matrix<R> m) {
    if (!m.square()) throw std::invalid_argument("leading_principal_minors: matrix must be square");
    const std::size_t n = m.rows();
    std::vector<R> minors;
    R prev = RingTraits<R>::one();
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(m(k, k));
        if (k + 1 == n) break;
        if (RingTraits<R>::is_zero(m(k, k))) break;
        detail::bareiss_step(m, k, prev, 1);
        prev = m(k, k);
    }
    return minors;
}

struct LUFactors {
    Matrix<BigRational> L;  // unit lower triangular
    Matrix<BigRational> U;  // upper triangular
    int sign = 1;           // sign of the row permutation baked into the input
};

// Doolittle factorization with exact rationals and NO pivoting.  Throws
// std::runtime_error on a zero pivot (LU does not exist without pivoting).
LUFactors lu_exact(const Matrix<BigRational>& m);

// Determinant of [U_1..U_{j-1}; t] where the first j-1 rows come from an
// upper-triangular matrix: fraction-free elimination of the single dense row.
BigInt det_triangular_stack(const Matrix<BigInt>& upper, const std::vector<BigInt>& last_row);

Matrix<BigRational> to_rational(const Matrix<BigInt>& m);

}  // namespace pascalis
