#include "pascalis/exact.hpp"

#include <algorithm>
#include <mutex>

namespace pascalis {

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) { return v.get_str(); }

BigInt parse_bigint(const std::string& s) {
    mpz_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("parse_bigint: bad integer literal '" + s + "'");
    return v;
}

BigRational parse_rational(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad rational literal '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return v;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

BigInt binomial(unsigned long a, long b) {
    if (b < 0 || static_cast<unsigned long>(b) > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), a, static_cast<unsigned long>(b));
    return r;
}

BigInt double_factorial_product(int m) {
    if (m < 3) throw std::invalid_argument("double_factorial_product: m must be >= 3");
    mpz_class acc = 1, df;
    for (int k = 2; k <= m - 1; ++k) {
        mpz_2fac_ui(df.get_mpz_t(), static_cast<unsigned long>(2 * k - 1));
        acc *= df;
    }
    return acc;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::optional<BigInt> integer_mth_root(const BigInt& n, unsigned long m) {
    if (n <= 0) throw std::invalid_argument("integer_mth_root: N must be positive");
    if (m == 0) throw std::invalid_argument("integer_mth_root: m must be >= 1");
    mpz_class g;
    mpz_root(g.get_mpz_t(), n.get_mpz_t(), m);
    if (pow_int(g, m) == n) return g;
    return std::nullopt;
}

BigInt Factorization::reconstruct() const {
    BigInt acc = residual;
    for (const auto& [p, e] : factors) acc *= pow_int(p, e);
    return acc;
}

std::string Factorization::str() const {
    if (factors.empty() && residual == 1) return "1";
    std::string out;
    for (const auto& [p, e] : factors) {
        if (!out.empty()) out += " * ";
        out += p.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    if (residual != 1) {
        if (!out.empty()) out += " * ";
        out += residual.get_str() + " [unfactored]";
    }
    return out;
}

namespace {

// Primes up to the requested bound, cached across calls.
const std::vector<unsigned long>& primes_up_to(unsigned long bound) {
    static std::mutex mu;
    static std::vector<unsigned long> primes;
    static unsigned long sieved = 1;
    std::lock_guard<std::mutex> lock(mu);
    if (bound > sieved) {
        std::vector<bool> composite(bound + 1, false);
        primes.clear();
        for (unsigned long p = 2; p <= bound; ++p) {
            if (composite[p]) continue;
            primes.push_back(p);
            for (unsigned long q = p * p; q <= bound; q += p) composite[q] = true;
        }
        sieved = bound;
    }
    return primes;
}

}  // namespace

Factorization factor_smooth(const BigInt& n, unsigned long bound) {
    if (n <= 0) throw std::invalid_argument("factor_smooth: N must be positive");
    if (bound < 2) throw std::invalid_argument("factor_smooth: bound must be >= 2");
    Factorization fz;
    BigInt rest = n;
    for (unsigned long p : primes_up_to(bound)) {
        if (rest == 1) break;
        if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) {
            // No factor below p survives, so rest itself is prime.
            if (mpz_cmp_ui(rest.get_mpz_t(), bound) <= 0) {
                fz.factors.emplace_back(rest, 1);
                rest = 1;
            }
            break;
        }
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) fz.factors.emplace_back(BigInt(p), e);
    }
    fz.residual = rest;
    return fz;
}

}  // namespace pascalis
