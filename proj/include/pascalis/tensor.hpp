#pragma once

// Symmetric tensors stored one value per sorted multi-index class, with the
// Pascal-family constructors, slicing, and the contractions A x^m / A x^{m-1}.

#include "pascalis/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <type_traits>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace pascalis {

// Raised when a requested object exceeds the configured size guard;
// the CLI maps it to its dedicated exit code.
struct FeasibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using MultiIndex = std::vector<int>;        // 1-based, length = order
using GeneratingVector = std::vector<double>;  // c_i >= 0

namespace detail {

// Nondecreasing length-L tuples with values in [v, n]: C(n - v + L, L).
std::size_t tail_count(int n, int v, int L);

// Number of distinct permutations of a sorted tuple: m! / prod(run lengths!).
BigInt permutation_multiplicity(const MultiIndex& sorted);

}  // namespace detail

template <typename T>
class SymmetricTensor {
public:
    static constexpr std::size_t kMaxClasses = 5000000;

    SymmetricTensor(int order, int dim) : order_(order), dim_(dim) {
        if (order < 2) throw std::invalid_argument("SymmetricTensor: order must be >= 2");
        if (dim < 1) throw std::invalid_argument("SymmetricTensor: dimension must be >= 1");
        const std::size_t count = representative_count(order, dim);
        values_.assign(count, T{});
    }

    // C(n + m - 1, m) symmetry classes; throws FeasibilityError above the cap.
    static std::size_t representative_count(int order, int dim) {
        BigInt c = binomial(static_cast<unsigned long>(dim + order - 1), order);
        if (c > static_cast<long>(kMaxClasses))
            throw FeasibilityError("symmetric tensor would need " + c.get_str() + " entry classes (cap " +
                                   std::to_string(kMaxClasses) + ")");
        return static_cast<std::size_t>(c.get_ui());
    }

    int order() const { return order_; }
    int dim() const { return dim_; }
    std::size_t class_count() const { return values_.size(); }

    const T& entry(MultiIndex idx) const {
        validate(idx);
        std::sort(idx.begin(), idx.end());
        return values_[rank(idx)];
    }

    T& at_sorted(const MultiIndex& sorted) { return values_[rank(sorted)]; }
    const T& at_sorted(const MultiIndex& sorted) const { return values_[rank(sorted)]; }

    // Visits every sorted representative in lexicographic order together with
    // its stored value; fn may mutate the value (builders rely on this).
    void for_each(const std::function<void(const MultiIndex&, T&)>& fn) {
        MultiIndex idx(order_, 1);
        for (std::size_t r = 0; r < values_.size(); ++r) {
            fn(idx, values_[r]);
            advance(idx);
        }
    }
    void for_each(const std::function<void(const MultiIndex&, const T&)>& fn) const {
        MultiIndex idx(order_, 1);
        for (std::size_t r = 0; r < values_.size(); ++r) {
            fn(idx, values_[r]);
            advance(idx);
        }
    }

private:
    void validate(const MultiIndex& idx) const {
        if (static_cast<int>(idx.size()) != order_) throw std::invalid_argument("tensor index: wrong length");
        for (int v : idx)
            if (v < 1 || v > dim_) throw std::out_of_range("tensor index: component out of range");
    }

    // Rank of a sorted tuple in the ascending lexicographic enumeration.
    std::size_t rank(const MultiIndex& sorted) const {
        std::size_t r = 0;
        int prev = 1;
        for (int p = 0; p < order_; ++p) {
            for (int w = prev; w < sorted[p]; ++w) r += detail::tail_count(dim_, w, order_ - p - 1);
            prev = sorted[p];
        }
        return r;
    }

    void advance(MultiIndex& idx) const {
        int p = order_ - 1;
        while (p >= 0 && idx[p] == dim_) --p;
        if (p < 0) return;  // past the last representative
        const int v = idx[p] + 1;
        for (int q = p; q < order_; ++q) idx[q] = v;
    }

    int order_, dim_;
    std::vector<T> values_;
};

using ExactSymmetricTensor = SymmetricTensor<BigRational>;
using FloatSymmetricTensor = SymmetricTensor<double>;

// Entry of the Pascal tensor at idx: (i_1+...+i_m - m)! / prod (i_k - 1)!.
BigInt pascal_entry(const MultiIndex& idx);

ExactSymmetricTensor build_pascal(int order, int dim);

// Gamma-ratio entries; throws std::range_error when an index sum would
// overflow double Gamma (sums are kept small by construction in this domain).
FloatSymmetricTensor build_generalized_pascal(int order, const GeneratingVector& c);

// entry = 1 / (i_1+...+i_m - m + c), c > 0 rational.
ExactSymmetricTensor build_generalized_hilbert(int order, int dim, const BigRational& c);

FloatSymmetricTensor to_float(const ExactSymmetricTensor& t);

FloatSymmetricTensor hadamard_power(const FloatSymmetricTensor& t, double alpha);
FloatSymmetricTensor hadamard_power(const ExactSymmetricTensor& t, double alpha);

template <typename T>
SymmetricTensor<T> slice_fix_first(const SymmetricTensor<T>& t, int count) {
    if (count < 1 || t.order() - count < 2)
        throw std::invalid_argument("slice_fix_first: resulting order would drop below 2");
    SymmetricTensor<T> out(t.order() - count, t.dim());
    out.for_each([&](const MultiIndex& idx, T& v) {
        MultiIndex full(static_cast<std::size_t>(count), 1);
        full.insert(full.end(), idx.begin(), idx.end());
        v = t.at_sorted(full);  // prefix of ones keeps the tuple sorted
    });
    return out;
}

namespace detail {

template <typename T>
T from_bigint(const BigInt& v) {
    if constexpr (std::is_same_v<T, double>)
        return v.get_d();
    else
        return T(v);
}

template <typename T>
T pow_small(const T& base, int e) {
    T acc(1);
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

}  // namespace detail

// Full contraction  sum a_{i_1..i_m} x_{i_1}...x_{i_m}.
template <typename T>
T apply_xm(const SymmetricTensor<T>& t, const std::vector<T>& x) {
    if (static_cast<int>(x.size()) != t.dim()) throw std::invalid_argument("apply_xm: dimension mismatch");
    T total{};
    t.for_each([&](const MultiIndex& idx, const T& v) {
        T term = detail::from_bigint<T>(detail::permutation_multiplicity(idx)) * v;
        for (std::size_t p = 0; p < idx.size();) {
            std::size_t q = p;
            while (q < idx.size() && idx[q] == idx[p]) ++q;
            term = term * detail::pow_small(x[idx[p] - 1], static_cast<int>(q - p));
            p = q;
        }
        total += term;
    });
    return total;
}

// (A x^{m-1})_i = sum a_{i i_2..i_m} x_{i_2}...x_{i_m}.
template <typename T>
std::vector<T> apply_xm1(const SymmetricTensor<T>& t, const std::vector<T>& x) {
    if (static_cast<int>(x.size()) != t.dim()) throw std::invalid_argument("apply_xm1: dimension mismatch");
    std::vector<T> out(static_cast<std::size_t>(t.dim()), T{});
    t.for_each([&](const MultiIndex& idx, const T& v) {
        // Group the sorted tuple into runs; pulling one copy of value `lead`
        // out front leaves a multiset whose permutation count weights x^rest.
        for (std::size_t p = 0; p < idx.size();) {
            std::size_t q = p;
            while (q < idx.size() && idx[q] == idx[p]) ++q;
            const int lead = idx[p];
            MultiIndex rest;
            rest.reserve(idx.size() - 1);
            rest.insert(rest.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(p));
            rest.insert(rest.end(), idx.begin() + static_cast<std::ptrdiff_t>(p) + 1, idx.end());
            T term = detail::from_bigint<T>(detail::permutation_multiplicity(rest)) * v;
            for (std::size_t a = 0; a < rest.size();) {
                std::size_t b = a;
                while (b < rest.size() && rest[b] == rest[a]) ++b;
                term = term * detail::pow_small(x[rest[a] - 1], static_cast<int>(b - a));
                a = b;
            }
            out[lead - 1] += term;
            p = q;
        }
    });
    return out;
}

// Coefficients of the two binary forms (A x^{m-1})_i, i = 1,2, in the basis
// x1^{m-1-k} x2^k, k = 0..m-1.  Requires dim == 2.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> binary_form_coefficients(const SymmetricTensor<T>& t) {
    if (t.dim() != 2) throw std::invalid_argument("binary_form_coefficients: dimension must be 2");
    const int m = t.order();
    std::pair<std::vector<T>, std::vector<T>> forms;
    for (int i = 1; i <= 2; ++i) {
        std::vector<T> coeffs;
        coeffs.reserve(static_cast<std::size_t>(m));
        for (int k = 0; k <= m - 1; ++k) {
            MultiIndex idx;
            idx.reserve(static_cast<std::size_t>(m));
            idx.push_back(i);
            for (int a = 0; a < m - 1 - k; ++a) idx.push_back(1);
            for (int a = 0; a < k; ++a) idx.push_back(2);
            std::sort(idx.begin(), idx.end());
            T c = detail::from_bigint<T>(binomial(static_cast<unsigned long>(m - 1), k));
            coeffs.push_back(c * t.at_sorted(idx));
        }
        (i == 1 ? forms.first : forms.second) = std::move(coeffs);
    }
    return forms;
}

// Line-oriented text serialization: "order m dim n kind K" header, then one
// "i_1 ... i_m value" line per sorted representative.
void save_tensor(std::ostream& os, const ExactSymmetricTensor& t);
void save_tensor(std::ostream& os, const FloatSymmetricTensor& t);
ExactSymmetricTensor load_exact_tensor(std::istream& is);
FloatSymmetricTensor load_float_tensor(std::istream& is);

}  // namespace pascalis
