#pragma once

// The n = 2 determinant pipeline: the Sylvester-Pascal matrix S_m, the
// interleaved T_m = P_m S_m, its exact pivot-free LU factorization, closed
// forms for U and L, and f(m, 2) = [(m-1)!]^m.

#include "pascalis/matrix.hpp"

#include <string>
#include <vector>

namespace pascalis {

struct SylvesterPascal {
    int m = 0;
    Matrix<BigInt> S;        // 2(m-1) x 2(m-1)
    std::vector<BigInt> a;   // a_i = C(m-1, i) i!,      i = 1..m-1
    std::vector<BigInt> b;   // b_i = C(m-1, i) (i+1)!,  i = 1..m-1
};

SylvesterPascal build_sylvester_pascal(int m);  // m >= 3

// Rows of S_m interleaved b-row/a-row: (row m, row 1, row m+1, row 2, ...).
Matrix<BigInt> build_Tm(int m);

// Sign of the interleaving permutation: (-1)^{m(m-1)/2}.
int perm_sign_Tm(int m);

// lu_exact(T_m) with the permutation sign attached.
LUFactors pascal_lu(int m);

Matrix<BigRational> closed_form_U(int m);
Matrix<BigRational> closed_form_L(int m);

// sign(P_m) * prod diag(U) from the exact LU of T_m; equals [(m-1)!]^m.
// m = 2 is the 2x2 Pascal matrix case (determinant 1).
BigInt det_f_m2(int m);

// CSV rows "m,u_11,...,u_{2m-2 2m-2},f" for m in [m_lo, m_hi].
std::string lu_table_csv(int m_lo, int m_hi);

}  // namespace pascalis
