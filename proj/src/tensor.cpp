#include "pascalis/tensor.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace pascalis {

namespace detail {

std::size_t tail_count(int n, int v, int L) {
    BigInt c = binomial(static_cast<unsigned long>(n - v + L), static_cast<long>(L));
    return static_cast<std::size_t>(c.get_ui());
}

BigInt permutation_multiplicity(const MultiIndex& sorted) {
    BigInt denom = 1;
    for (std::size_t p = 0; p < sorted.size();) {
        std::size_t q = p;
        while (q < sorted.size() && sorted[q] == sorted[p]) ++q;
        denom *= factorial(static_cast<unsigned long>(q - p));
        p = q;
    }
    BigInt num = factorial(static_cast<unsigned long>(sorted.size()));
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    return out;
}

}  // namespace detail

BigInt pascal_entry(const MultiIndex& idx) {
    unsigned long s = 0;
    for (int v : idx) {
        if (v < 1) throw std::invalid_argument("pascal_entry: indices are 1-based");
        s += static_cast<unsigned long>(v - 1);
    }
    BigInt value = factorial(s);
    for (int v : idx) {
        BigInt d = factorial(static_cast<unsigned long>(v - 1));
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), d.get_mpz_t());
        if (r != 0) throw std::logic_error("pascal_entry: multinomial division not exact");
        value = q;
    }
    return value;
}

ExactSymmetricTensor build_pascal(int order, int dim) {
    ExactSymmetricTensor t(order, dim);
    t.for_each([](const MultiIndex& idx, BigRational& v) { v = BigRational(pascal_entry(idx)); });
    return t;
}

FloatSymmetricTensor build_generalized_pascal(int order, const GeneratingVector& c) {
    if (c.empty()) throw std::invalid_argument("build_generalized_pascal: empty generating vector");
    for (double ci : c)
        if (!(ci >= 0.0)) throw std::invalid_argument("build_generalized_pascal: generating vector must be nonnegative");
    FloatSymmetricTensor t(order, static_cast<int>(c.size()));
    std::vector<double> gamma_ci(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) gamma_ci[i] = std::tgamma(c[i] + 1.0);
    t.for_each([&](const MultiIndex& idx, double& v) {
        double sum = 0.0;
        for (int ik : idx) sum += c[static_cast<std::size_t>(ik - 1)];
        if (sum + 1.0 > 171.0)
            throw std::range_error("build_generalized_pascal: Gamma argument " + std::to_string(sum + 1.0) +
                                   " exceeds double range (index sum " + std::to_string(sum) + ")");
        double value = std::tgamma(sum + 1.0);
        for (int ik : idx) value /= gamma_ci[static_cast<std::size_t>(ik - 1)];
        v = value;
    });
    return t;
}

ExactSymmetricTensor build_generalized_hilbert(int order, int dim, const BigRational& c) {
    if (sgn(c) <= 0) throw std::invalid_argument("build_generalized_hilbert: c must be positive");
    ExactSymmetricTensor t(order, dim);
    t.for_each([&](const MultiIndex& idx, BigRational& v) {
        long s = 0;
        for (int ik : idx) s += ik;
        BigRational den = BigRational(s - order) + c;
        v = BigRational(1) / den;
    });
    return t;
}

FloatSymmetricTensor to_float(const ExactSymmetricTensor& t) {
    FloatSymmetricTensor out(t.order(), t.dim());
    out.for_each([&](const MultiIndex& idx, double& v) { v = t.at_sorted(idx).get_d(); });
    return out;
}

namespace {

FloatSymmetricTensor hadamard_power_impl(const FloatSymmetricTensor& t, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("hadamard_power: alpha must be positive");
    FloatSymmetricTensor out(t.order(), t.dim());
    out.for_each([&](const MultiIndex& idx, double& v) {
        const double a = t.at_sorted(idx);
        if (a < 0.0) throw std::domain_error("hadamard_power: negative entry");
        v = std::pow(a, alpha);
    });
    return out;
}

}  // namespace

FloatSymmetricTensor hadamard_power(const FloatSymmetricTensor& t, double alpha) { return hadamard_power_impl(t, alpha); }

FloatSymmetricTensor hadamard_power(const ExactSymmetricTensor& t, double alpha) {
    return hadamard_power_impl(to_float(t), alpha);
}

namespace {

void write_header(std::ostream& os, int order, int dim, const char* kind) {
    os << "order " << order << " dim " << dim << " kind " << kind << '\n';
}

void read_header(std::istream& is, int& order, int& dim, std::string& kind) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("tensor load: missing header");
    std::istringstream hs(line);
    std::string w_order, w_dim, w_kind;
    if (!(hs >> w_order >> order >> w_dim >> dim >> w_kind >> kind) || w_order != "order" || w_dim != "dim" ||
        w_kind != "kind")
        throw std::runtime_error("tensor load: malformed header '" + line + "'");
}

template <typename T, typename Parse>
SymmetricTensor<T> load_body(std::istream& is, int order, int dim, Parse parse) {
    SymmetricTensor<T> t(order, dim);
    std::string line;
    std::size_t seen = 0;
    MultiIndex idx(static_cast<std::size_t>(order));
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        for (int p = 0; p < order; ++p)
            if (!(ls >> idx[static_cast<std::size_t>(p)])) throw std::runtime_error("tensor load: short index line");
        std::string value;
        if (!(ls >> value)) throw std::runtime_error("tensor load: missing value");
        if (!std::is_sorted(idx.begin(), idx.end())) throw std::runtime_error("tensor load: index not sorted");
        t.at_sorted(idx) = parse(value);
        ++seen;
    }
    if (seen != t.class_count())
        throw std::runtime_error("tensor load: expected " + std::to_string(t.class_count()) + " lines, got " +
                                 std::to_string(seen));
    return t;
}

}  // namespace

void save_tensor(std::ostream& os, const ExactSymmetricTensor& t) {
    write_header(os, t.order(), t.dim(), "exact");
    t.for_each([&](const MultiIndex& idx, const BigRational& v) {
        for (int ik : idx) os << ik << ' ';
        os << to_string(v) << '\n';
    });
}

void save_tensor(std::ostream& os, const FloatSymmetricTensor& t) {
    write_header(os, t.order(), t.dim(), "float");
    t.for_each([&](const MultiIndex& idx, const double& v) {
        for (int ik : idx) os << ik << ' ';
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf << '\n';
    });
}

ExactSymmetricTensor load_exact_tensor(std::istream& is) {
    int order = 0, dim = 0;
    std::string kind;
    read_header(is, order, dim, kind);
    if (kind != "exact") throw std::runtime_error("tensor load: expected kind exact, got " + kind);
    return load_body<BigRational>(is, order, dim, [](const std::string& s) { return parse_rational(s); });
}

FloatSymmetricTensor load_float_tensor(std::istream& is) {
    int order = 0, dim = 0;
    std::string kind;
    read_header(is, order, dim, kind);
    if (kind != "float") throw std::runtime_error("tensor load: expected kind float, got " + kind);
    return load_body<double>(is, order, dim, [](const std::string& s) { return std::stod(s); });
}

}  // namespace pascalis
