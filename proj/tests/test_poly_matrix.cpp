#include "pascalis/matrix.hpp"
#include "pascalis/poly.hpp"

#include "doctest.h"

#include <random>
#include <sstream>

using namespace pascalis;

namespace {

IntPolynomial make_poly(std::initializer_list<long> lowest_first) {
    std::vector<BigInt> c;
    for (long v : lowest_first) c.emplace_back(v);
    return IntPolynomial{std::move(c)};
}

IntPolynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 4);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (BigInt& v : c) v = coeff(rng);
    return IntPolynomial{std::move(c)};
}

template <typename R>
Matrix<R> make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix<R> m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = R(v);
        ++i;
    }
    return m;
}

// Independent oracle: determinant by cofactor expansion along the first row.
BigInt cofactor_det(const Matrix<BigInt>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    BigInt acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        Matrix<BigInt> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        BigInt term = m(0, c) * cofactor_det(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_SUITE("poly_matrix") {

TEST_CASE("polynomial arithmetic examples") {
    IntPolynomial one_plus = make_poly({1, 1});
    IntPolynomial one_minus = make_poly({1, -1});
    CHECK(one_plus * one_minus == make_poly({1, 0, -1}));
    CHECK(make_poly({1, 0, -1}).evaluate(BigRational(0)) == 1);
    CHECK(make_poly({1, 2}) + make_poly({0, -2, 3}) == make_poly({1, 0, 3}));
    CHECK(make_poly({1, 2}).degree() == 1);
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(make_poly({0, 0, 0}).is_zero());
    CHECK(make_poly({1, -2, 3}).str() == "3*l^2 - 2*l + 1");
}

TEST_CASE("polynomial ring axioms (randomized)") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        IntPolynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        BigRational x(trial % 7 - 3, 2);
        x.canonicalize();
        CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    }
}

TEST_CASE("polynomial exact division") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        IntPolynomial p = random_poly(rng), q = random_poly(rng);
        if (q.is_zero()) continue;
        CHECK((p * q).div_exact(q) == p);
    }
    CHECK_THROWS_AS(make_poly({1, 1}).div_exact(make_poly({0, 2})), std::logic_error);   // remainder 1
    CHECK_THROWS_AS(make_poly({1, 3}).div_exact(make_poly({0, 2})), std::logic_error);   // 3/2 not integral
}

TEST_CASE("bareiss determinant examples") {
    CHECK(bareiss_det(make_matrix<BigInt>({{1, 2}, {3, 4}})) == -2);
    CHECK(bareiss_det(Matrix<BigInt>::identity(5)) == 1);
    // the f(3,2) Sylvester-Pascal display
    CHECK(bareiss_det(make_matrix<BigInt>({{1, 2, 2, 0}, {0, 1, 2, 2}, {1, 4, 6, 0}, {0, 1, 4, 6}})) == 8);
    // zero pivot needs a row swap
    CHECK(bareiss_det(make_matrix<BigInt>({{0, 1}, {1, 0}})) == -1);
    // zero pivot column: singular
    CHECK(bareiss_det(make_matrix<BigInt>({{0, 1}, {0, 2}})) == 0);
    CHECK(bareiss_det(Matrix<BigInt>(0, 0)) == 1);
    CHECK_THROWS_AS(bareiss_det(Matrix<BigInt>(2, 3)), std::invalid_argument);
}

TEST_CASE("bareiss vs cofactor expansion on random matrices") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> entry(-9, 9);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = dim(rng);
        Matrix<BigInt> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        CHECK(bareiss_det(m) == cofactor_det(m));
    }
}

TEST_CASE("bareiss over Z[lambda]") {
    // [[1-l, 1], [1, 2-l]] -> l^2 - 3l + 1
    Matrix<IntPolynomial> m(2, 2);
    m(0, 0) = make_poly({1, -1});
    m(0, 1) = IntPolynomial::constant(1);
    m(1, 0) = IntPolynomial::constant(1);
    m(1, 1) = make_poly({2, -1});
    CHECK(bareiss_det(m) == make_poly({1, -3, 1}));
}

TEST_CASE("bareiss threaded equals sequential") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> entry(-9, 9);
    Matrix<BigInt> m(40, 40);
    for (std::size_t i = 0; i < 40; ++i)
        for (std::size_t j = 0; j < 40; ++j) m(i, j) = entry(rng);
    CHECK(bareiss_det(m, 1) == bareiss_det(m, 4));
}

TEST_CASE("lu_exact basics") {
    auto m = to_rational(make_matrix<BigInt>({{2, 1}, {4, 5}}));
    LUFactors f = lu_exact(m);
    CHECK(f.L * f.U == m);
    CHECK(f.L(1, 0) == 2);
    CHECK(f.U(1, 1) == 3);
    CHECK_THROWS_WITH_AS(lu_exact(to_rational(make_matrix<BigInt>({{0, 1}, {1, 0}}))),
                         doctest::Contains("LU does not exist without pivoting"), std::runtime_error);
}

TEST_CASE("leading principal minors via swap-free elimination") {
    auto m = make_matrix<BigInt>({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
    const std::vector<BigInt> minors = leading_principal_minors(m);
    REQUIRE(minors.size() == 3);
    CHECK(minors[0] == 2);
    CHECK(minors[1] == 3);
    CHECK(minors[2] == 4);
}

TEST_CASE("det_triangular_stack matches bareiss") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> entry(-6, 6);
    std::uniform_int_distribution<long> pivot(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 5;
        Matrix<BigInt> u(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            u(i, i) = pivot(rng);
            for (std::size_t j = i + 1; j < n; ++j) u(i, j) = entry(rng);
        }
        for (std::size_t j = 1; j <= n; ++j) {
            std::vector<BigInt> last(j);
            for (BigInt& v : last) v = entry(rng);
            Matrix<BigInt> x(j, j);
            for (std::size_t r = 0; r + 1 < j; ++r)
                for (std::size_t c = 0; c < j; ++c) x(r, c) = u(r, c);
            for (std::size_t c = 0; c < j; ++c) x(j - 1, c) = last[c];
            CHECK(det_triangular_stack(u, last) == bareiss_det(x));
        }
    }
}

TEST_CASE("matrix dump format") {
    std::ostringstream os;
    make_matrix<BigInt>({{1, -2}, {3, 4}}).dump(os);
    CHECK(os.str() == "1\t-2\n3\t4\n");
}

}  // TEST_SUITE
