#include "pascalis/pascal_lu.hpp"

#include <sstream>

namespace pascalis {

SylvesterPascal build_sylvester_pascal(int m) {
    if (m < 3) throw std::invalid_argument("build_sylvester_pascal: m must be >= 3");
    SylvesterPascal sp;
    sp.m = m;
    const std::size_t half = static_cast<std::size_t>(m - 1);
    sp.a.resize(half);
    sp.b.resize(half);
    for (int i = 1; i <= m - 1; ++i) {
        BigInt c = binomial(static_cast<unsigned long>(m - 1), i);
        sp.a[static_cast<std::size_t>(i - 1)] = c * factorial(static_cast<unsigned long>(i));
        sp.b[static_cast<std::size_t>(i - 1)] = c * factorial(static_cast<unsigned long>(i + 1));
    }
    const std::size_t n = 2 * half;
    sp.S = Matrix<BigInt>(n, n);
    for (std::size_t r = 0; r < half; ++r) {
        sp.S(r, r) = 1;
        for (std::size_t i = 0; i < half; ++i) sp.S(r, r + 1 + i) = sp.a[i];
        sp.S(half + r, r) = 1;
        for (std::size_t i = 0; i < half; ++i) sp.S(half + r, r + 1 + i) = sp.b[i];
    }
    return sp;
}

Matrix<BigInt> build_Tm(int m) {
    const SylvesterPascal sp = build_sylvester_pascal(m);
    const std::size_t half = static_cast<std::size_t>(m - 1);
    Matrix<BigInt> t(2 * half, 2 * half);
    for (std::size_t r = 0; r < half; ++r)
        for (std::size_t j = 0; j < 2 * half; ++j) {
            t(2 * r, j) = sp.S(half + r, j);  // b-row
            t(2 * r + 1, j) = sp.S(r, j);     // a-row
        }
    return t;
}

int perm_sign_Tm(int m) { return (static_cast<long>(m) * (m - 1) / 2) % 2 == 0 ? 1 : -1; }

LUFactors pascal_lu(int m) {
    LUFactors f = lu_exact(to_rational(build_Tm(m)));
    f.sign = perm_sign_Tm(m);
    return f;
}

Matrix<BigRational> closed_form_U(int m) {
    if (m < 3) throw std::invalid_argument("closed_form_U: m must be >= 3");
    const std::size_t n = static_cast<std::size_t>(2 * (m - 1));
    Matrix<BigRational> u(n, n);
    for (int i = 1; i <= m - 1; ++i) {
        // odd row 2i-1
        for (int j = 1; j <= static_cast<int>(n); ++j) {
            BigInt v = 0;
            if (j == 2 * i - 1)
                v = factorial(static_cast<unsigned long>(i));
            else if (2 * i <= j && j <= m + i - 1)
                v = binomial(static_cast<unsigned long>(m - i), j - 2 * i + 1) *
                    factorial(static_cast<unsigned long>(j - i + 1));
            u(static_cast<std::size_t>(2 * i - 2), static_cast<std::size_t>(j - 1)) = BigRational(v);
        }
        // even row 2i
        for (int j = 1; j <= static_cast<int>(n); ++j) {
            BigInt v = 0;
            if (2 * i <= j && j <= m + i - 1) {
                v = binomial(static_cast<unsigned long>(m - 1), j - i) * binomial(static_cast<unsigned long>(j - i), i) *
                    factorial(static_cast<unsigned long>(j - i));
                if (i % 2 != 0) v = -v;
            }
            u(static_cast<std::size_t>(2 * i - 1), static_cast<std::size_t>(j - 1)) = BigRational(v);
        }
    }
    return u;
}

Matrix<BigRational> closed_form_L(int m) {
    if (m < 3) throw std::invalid_argument("closed_form_L: m must be >= 3");
    const std::size_t n = static_cast<std::size_t>(2 * (m - 1));
    const Matrix<BigInt> t = build_Tm(m);
    const Matrix<BigRational> u_rat = closed_form_U(m);

    // Integer copy of U for the fraction-free minors det(X_ij).
    Matrix<BigInt> u(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) u(r, c) = u_rat(r, c).get_num();

    std::vector<BigInt> diag_prefix(n + 1);  // u_11 ... u_jj products
    diag_prefix[0] = 1;
    for (std::size_t j = 0; j < n; ++j) diag_prefix[j + 1] = diag_prefix[j] * u(j, j);

    Matrix<BigRational> l(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        l(i - 1, i - 1) = 1;
        for (std::size_t j = 1; j < i; ++j) {
            if (i > 2 * j) continue;  // l_ij = 0 below the stated band
            std::vector<BigInt> t_row(j);
            for (std::size_t c = 0; c < j; ++c) t_row[c] = t(i - 1, c);
            BigInt minor = det_triangular_stack(u, t_row);
            l(i - 1, j - 1) = make_rational(minor, diag_prefix[j]);
        }
    }
    return l;
}

BigInt det_f_m2(int m) {
    if (m < 2) throw std::invalid_argument("det_f_m2: m must be >= 2");
    if (m == 2) return 1;  // det of the 2x2 Pascal matrix [[1,1],[1,2]]
    const LUFactors f = pascal_lu(m);
    BigRational prod(f.sign);
    for (std::size_t r = 0; r < f.U.rows(); ++r) prod *= f.U(r, r);
    if (!is_integer(prod)) throw std::logic_error("det_f_m2: non-integer diagonal product");
    return prod.get_num();
}

std::string lu_table_csv(int m_lo, int m_hi) {
    std::ostringstream os;
    os << "m,diag_U,f_m_2\n";
    for (int m = std::max(3, m_lo); m <= m_hi; ++m) {
        const LUFactors f = pascal_lu(m);
        os << m << ",";
        for (std::size_t r = 0; r < f.U.rows(); ++r) {
            if (r) os << ';';
            os << to_string(f.U(r, r));
        }
        os << "," << det_f_m2(m).get_str() << "\n";
    }
    return os.str();
}

}  // namespace pascalis
