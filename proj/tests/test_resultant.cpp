#include "pascalis/resultant.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace pascalis;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> vs) {
    std::vector<BigInt> out;
    for (long v : vs) out.emplace_back(v);
    return out;
}

// Test-side sparse polynomial product: (multiplier monomial) * form.
std::map<std::vector<int>, BigInt> shift_form(const std::map<std::vector<int>, BigInt>& form,
                                              const std::vector<int>& shift) {
    std::map<std::vector<int>, BigInt> out;
    for (const auto& [expo, coeff] : form) {
        std::vector<int> e(expo.size());
        for (std::size_t k = 0; k < expo.size(); ++k) e[k] = expo[k] + shift[k];
        out[e] = coeff;
    }
    return out;
}

ExactSymmetricTensor identity_tensor(int m, int n) {
    ExactSymmetricTensor t(m, n);
    for (int i = 1; i <= n; ++i) {
        MultiIndex idx(static_cast<std::size_t>(m), i);
        t.at_sorted(idx) = 1;
    }
    return t;
}

IntPolynomial int_poly(std::initializer_list<long> lowest_first) {
    std::vector<BigInt> c;
    for (long v : lowest_first) c.emplace_back(v);
    return IntPolynomial{std::move(c)};
}

}  // namespace

TEST_SUITE("resultant") {

TEST_CASE("sylvester matrix goldens") {
    Matrix<BigInt> s3 = sylvester_matrix(ints({1, 2, 2}), ints({1, 4, 6}));
    Matrix<BigInt> expect3(4, 4);
    const long rows3[4][4] = {{1, 2, 2, 0}, {0, 1, 2, 2}, {1, 4, 6, 0}, {0, 1, 4, 6}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) expect3(i, j) = rows3[i][j];
    CHECK(s3 == expect3);

    Matrix<BigInt> s4 = sylvester_matrix(ints({1, 3, 6, 6}), ints({1, 6, 18, 24}));
    const long rows4[6][6] = {{1, 3, 6, 6, 0, 0}, {0, 1, 3, 6, 6, 0}, {0, 0, 1, 3, 6, 6},
                              {1, 6, 18, 24, 0, 0}, {0, 1, 6, 18, 24, 0}, {0, 0, 1, 6, 18, 24}};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(s4(i, j) == rows4[i][j]);

    // Res(x1^{m-1}, x2^{m-1}) = 1 from monomial forms
    for (int m = 3; m <= 6; ++m) {
        std::vector<BigInt> p(static_cast<std::size_t>(m), BigInt(0)), q(static_cast<std::size_t>(m), BigInt(0));
        p.front() = 1;
        q.back() = 1;
        CHECK(bareiss_det(sylvester_matrix(p, q)) == 1);
    }
    CHECK_THROWS_AS(sylvester_matrix(ints({0, 0}), ints({1})), std::invalid_argument);
}

TEST_CASE("macaulay structure for pascal (3,3)") {
    MacaulayMatrices mm = macaulay_build(build_pascal(3, 3));
    CHECK(mm.structure.size() == 15);
    CHECK(mm.structure.critical_degree == 4);
    REQUIRE(mm.structure.denominator_indices.size() == 3);
    CHECK(mm.numerator.rows() == 15);
    CHECK(mm.denominator.rows() == 3);

    // The paper's displayed 3x3 denominator [[1,0,6],[0,1,2],[0,1,6]], det 4.
    const long expect[3][3] = {{1, 0, 6}, {0, 1, 2}, {0, 1, 6}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(mm.denominator(i, j) == expect[i][j]);
    CHECK(bareiss_det(mm.denominator) == 4);

    // Denominator monomials: divisible by x_i^2 for two distinct i.
    const std::vector<std::vector<int>> denom_monos = {{2, 2, 0}, {2, 0, 2}, {0, 2, 2}};
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(mm.structure.monomials[mm.structure.denominator_indices[k]] == denom_monos[k]);
}

TEST_CASE("macaulay matrix case m=2: numerator is the matrix itself") {
    ExactSymmetricTensor p = build_pascal(2, 3);
    MacaulayMatrices mm = macaulay_build(p);
    CHECK(mm.structure.size() == 3);
    CHECK(mm.structure.critical_degree == 1);
    CHECK(mm.structure.denominator_indices.empty());
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(BigRational(mm.numerator(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) ==
                  p.entry({i, j}));
    for (int n = 2; n <= 6; ++n) {
        DetResult r = tensor_determinant(build_pascal(2, n));
        CHECK(r.absolute == 1);
    }
}

TEST_CASE("tensor determinant goldens") {
    DetResult d32 = tensor_determinant(build_pascal(3, 2));
    CHECK(d32.method == DetMethod::sylvester);
    CHECK(d32.absolute == 8);
    CHECK(d32.signed_value == 8);

    DetResult d33 = tensor_determinant(build_pascal(3, 3));
    CHECK(d33.method == DetMethod::macaulay);
    CHECK(d33.absolute == 373248);  // 72^3

    DetResult d43 = tensor_determinant(build_pascal(4, 3));
    BigInt g43 = pow_int(BigInt(2), 5) * pow_int(BigInt(3), 9) * pow_int(BigInt(5), 2);
    CHECK(d43.absolute == BigRational(pow_int(g43, 4)));
}

TEST_CASE("cross-method equality for n = 2") {
    for (int m = 3; m <= 6; ++m) {
        ExactSymmetricTensor p = build_pascal(m, 2);
        DetResult sylvester = tensor_determinant(p);
        CHECK(sylvester.method == DetMethod::sylvester);
        BigRational macaulay = macaulay_resultant(gradient_forms(p));
        CHECK(abs(macaulay) == sylvester.absolute);
    }
}

TEST_CASE("hilbert tensor determinant is rational and method-consistent") {
    ExactSymmetricTensor h = build_generalized_hilbert(3, 2, BigRational(1));
    DetResult d = tensor_determinant(h);
    CHECK(d.absolute == abs(macaulay_resultant(gradient_forms(h))));
    CHECK(sgn(d.absolute) != 0);
}

TEST_CASE("macaulay row-sum structure") {
    std::mt19937_64 rng(47);
    for (const auto& [m, n] : {std::pair{3, 3}, {4, 3}}) {
        MacaulayMatrices mm = macaulay_build(build_pascal(m, n));
        const MacaulayStructure& s = mm.structure;
        std::map<std::vector<int>, std::size_t> col;
        for (std::size_t c = 0; c < s.monomials.size(); ++c) col[s.monomials[c]] = c;
        std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t r = pick(rng);
            const int i = s.row_poly[r];
            std::vector<int> shift = s.monomials[r];
            shift[static_cast<std::size_t>(i)] -= s.degrees[static_cast<std::size_t>(i)];
            auto expect = shift_form(mm.integer_forms[static_cast<std::size_t>(i)], shift);
            for (std::size_t c = 0; c < s.size(); ++c) {
                auto it = expect.find(s.monomials[c]);
                CHECK(mm.numerator(r, c) == (it == expect.end() ? BigInt(0) : it->second));
            }
        }
    }
}

TEST_CASE("macaulay scale equivariance") {
    // Multiplying F_1 by t scales Res by t^{prod_{j != 1} d_j} = t^4 here.
    std::vector<HomogeneousForm> forms = gradient_forms(build_pascal(3, 3));
    BigRational base = macaulay_resultant(forms);
    for (auto& [expo, coeff] : forms[0].terms) coeff *= 2;
    BigRational scaled = macaulay_resultant(forms);
    CHECK(scaled == base * 16);
}

TEST_CASE("macaulay degenerate denominator is an error") {
    // F_1 = x2^2, F_2 = x3^2, F_3 = x1^2 vanish on the denominator block.
    std::vector<HomogeneousForm> forms(3);
    for (int i = 0; i < 3; ++i) {
        forms[static_cast<std::size_t>(i)].nvars = 3;
        forms[static_cast<std::size_t>(i)].degree = 2;
    }
    forms[0].terms[{0, 2, 0}] = 1;
    forms[1].terms[{0, 0, 2}] = 1;
    forms[2].terms[{2, 0, 0}] = 1;
    CHECK_THROWS_AS(macaulay_resultant(forms), MacaulayDegenerate);
}

TEST_CASE("feasibility guard") {
    CHECK_THROWS_AS(macaulay_structure(3, {9, 9, 9}, 100), FeasibilityError);
    CHECK_THROWS_AS(tensor_determinant(build_pascal(3, 3), 10), FeasibilityError);
}

TEST_CASE("char_poly_dim2 identity tensor") {
    for (int m = 3; m <= 5; ++m) {
        IntPolynomial cp = char_poly_dim2(identity_tensor(m, 2));
        IntPolynomial expect = IntPolynomial::constant(1);
        IntPolynomial one_minus = int_poly({1, -1});
        for (int k = 0; k < 2 * (m - 1); ++k) expect = expect * one_minus;
        CHECK(cp == expect);
    }
}

TEST_CASE("char_poly_dim2 degree and constant term laws") {
    for (int m = 3; m <= 8; ++m) {
        IntPolynomial cp = char_poly_dim2(build_pascal(m, 2));
        CHECK(cp.degree() == 2 * (m - 1));
    }
    for (int m = 3; m <= 6; ++m) {
        ExactSymmetricTensor p = build_pascal(m, 2);
        IntPolynomial cp = char_poly_dim2(p);
        DetResult det = tensor_determinant(p);
        CHECK(BigRational(abs(cp.coeff(0))) == det.absolute);
        CHECK(cp.evaluate(BigRational(0)) == BigRational(cp.coeff(0)));
    }
    IntPolynomial cp32 = char_poly_dim2(build_pascal(3, 2));
    CHECK(abs(cp32.coeff(0)) == 8);
}

TEST_CASE("char_poly_dim2 of the pascal matrix") {
    // [[1-l, 1], [1, 2-l]] -> l^2 - 3l + 1
    CHECK(char_poly_dim2(build_pascal(2, 2)) == int_poly({1, -3, 1}));
}

TEST_CASE("real_roots basics") {
    std::vector<double> r = real_roots(int_poly({2, -3, 1}), 1e-10);  // (l-1)(l-2)
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r[1] == doctest::Approx(2.0).epsilon(1e-9));

    IntPolynomial quartic = int_poly({1, -1});  // (1 - l)^4
    quartic = quartic * quartic;
    quartic = quartic * quartic;
    std::vector<double> rq = real_roots(quartic, 1e-10);
    REQUIRE(rq.size() == 1);
    CHECK(rq[0] == doctest::Approx(1.0).epsilon(1e-9));

    std::vector<double> none = real_roots(int_poly({1, 0, 1}), 1e-10);  // l^2 + 1
    CHECK(none.empty());

    std::vector<double> pascal22 = real_roots(char_poly_dim2(build_pascal(2, 2)), 1e-10);
    REQUIRE(pascal22.size() == 2);
    CHECK(pascal22[0] == doctest::Approx((3.0 - std::sqrt(5.0)) / 2).epsilon(1e-9));
    CHECK(pascal22[1] == doctest::Approx((3.0 + std::sqrt(5.0)) / 2).epsilon(1e-9));
}

TEST_CASE("pascal (4,2) characteristic roots are all positive") {
    std::vector<double> roots = real_roots(char_poly_dim2(build_pascal(4, 2)), 1e-8);
    CHECK(!roots.empty());
    for (double r : roots) CHECK(r > 0.0);
}

}  // TEST_SUITE
