#include "pascalis/poly.hpp"

#include <algorithm>

namespace pascalis {

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(const BigInt& v) {
    if (v == 0) return IntPolynomial{};
    return IntPolynomial{{v}};
}

IntPolynomial IntPolynomial::variable() { return IntPolynomial{{BigInt(0), BigInt(1)}}; }

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return IntPolynomial{std::move(r)};
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial{std::move(r)};
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial{};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial{std::move(r)};
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
    std::vector<BigInt> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return IntPolynomial{std::move(r)};
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return IntPolynomial{};
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(static_cast<unsigned long>(i));
    return IntPolynomial{std::move(r)};
}

IntPolynomial IntPolynomial::div_exact(const IntPolynomial& d) const {
    if (d.is_zero()) throw std::logic_error("IntPolynomial::div_exact: division by zero polynomial");
    if (is_zero()) return IntPolynomial{};
    if (degree() < d.degree()) throw std::logic_error("IntPolynomial::div_exact: degree underflow (inexact division)");
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quot(c_.size() - d.c_.size() + 1, BigInt(0));
    const BigInt& lead = d.c_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        BigInt& top = rem[k + d.degree()];
        if (top == 0) continue;
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw std::logic_error("IntPolynomial::div_exact: non-integer quotient coefficient");
        quot[k] = q;
        for (std::size_t i = 0; i < d.c_.size(); ++i) rem[k + i] -= q * d.c_[i];
    }
    for (const BigInt& v : rem)
        if (v != 0) throw std::logic_error("IntPolynomial::div_exact: nonzero remainder");
    return IntPolynomial{std::move(quot)};
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& a = c_[k];
        if (a == 0) continue;
        if (!out.empty()) out += (a > 0) ? " + " : " - ";
        else if (a < 0) out += "-";
        BigInt mag = abs(a);
        const bool unit = (mag == 1 && k > 0);
        if (!unit) out += mag.get_str();
        if (k > 0) {
            if (!unit) out += "*";
            out += "l";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace pascalis
