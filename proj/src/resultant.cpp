#include "pascalis/resultant.hpp"

#include <algorithm>
#include <deque>

namespace pascalis {

std::vector<HomogeneousForm> gradient_forms(const ExactSymmetricTensor& t) {
    const int n = t.dim(), m = t.order();
    std::vector<HomogeneousForm> forms(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        forms[static_cast<std::size_t>(i)].nvars = n;
        forms[static_cast<std::size_t>(i)].degree = m - 1;
    }
    t.for_each([&](const MultiIndex& idx, const BigRational& v) {
        if (sgn(v) == 0) return;
        for (std::size_t p = 0; p < idx.size();) {
            std::size_t q = p;
            while (q < idx.size() && idx[q] == idx[p]) ++q;
            const int lead = idx[p];
            MultiIndex rest(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(p));
            rest.insert(rest.end(), idx.begin() + static_cast<std::ptrdiff_t>(p) + 1, idx.end());
            std::vector<int> expo(static_cast<std::size_t>(n), 0);
            for (int ik : rest) ++expo[static_cast<std::size_t>(ik - 1)];
            BigRational coeff = BigRational(detail::permutation_multiplicity(rest)) * v;
            forms[static_cast<std::size_t>(lead - 1)].terms[expo] += coeff;
            p = q;
        }
    });
    return forms;
}

namespace {

void enumerate_monomials(int nvars, int degree, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == nvars - 1) {
        prefix.push_back(degree);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {  // descending lex, x1 > ... > xn
        prefix.push_back(e);
        enumerate_monomials(nvars, degree - e, prefix, out);
        prefix.pop_back();
    }
}

BigInt lcm_of_denominators(const HomogeneousForm& f) {
    BigInt l = 1;
    for (const auto& [expo, coeff] : f.terms) {
        BigInt den = coeff.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    return l;
}

}  // namespace

MacaulayStructure macaulay_structure(int nvars, const std::vector<int>& degrees, std::size_t size_cap) {
    if (nvars < 2) throw std::invalid_argument("macaulay_structure: need at least 2 variables");
    if (static_cast<int>(degrees.size()) != nvars)
        throw std::invalid_argument("macaulay_structure: one degree per variable required");
    MacaulayStructure s;
    s.nvars = nvars;
    s.degrees = degrees;
    s.critical_degree = 1;
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("macaulay_structure: degrees must be >= 1");
        s.critical_degree += d - 1;
    }
    BigInt count = binomial(static_cast<unsigned long>(s.critical_degree + nvars - 1), nvars - 1);
    if (count > static_cast<long>(size_cap))
        throw FeasibilityError("macaulay matrix would be " + count.get_str() + "x" + count.get_str() +
                               " (cap " + std::to_string(size_cap) + ")");
    std::vector<int> prefix;
    enumerate_monomials(nvars, s.critical_degree, prefix, s.monomials);
    s.row_poly.reserve(s.monomials.size());
    for (std::size_t r = 0; r < s.monomials.size(); ++r) {
        const auto& alpha = s.monomials[r];
        int assigned = -1, divisible = 0;
        for (int i = 0; i < nvars; ++i) {
            if (alpha[static_cast<std::size_t>(i)] >= degrees[static_cast<std::size_t>(i)]) {
                ++divisible;
                if (assigned < 0) assigned = i;
            }
        }
        // At the critical degree every monomial exceeds at least one d_i.
        if (assigned < 0) throw std::logic_error("macaulay_structure: unassignable monomial");
        s.row_poly.push_back(assigned);
        if (divisible >= 2) s.denominator_indices.push_back(r);
    }
    return s;
}

MacaulayMatrices macaulay_build(const std::vector<HomogeneousForm>& forms, std::size_t size_cap) {
    if (forms.empty()) throw std::invalid_argument("macaulay_build: no forms");
    const int n = forms[0].nvars;
    if (static_cast<int>(forms.size()) != n)
        throw std::invalid_argument("macaulay_build: need as many forms as variables");
    std::vector<int> degrees;
    degrees.reserve(forms.size());
    for (const auto& f : forms) {
        if (f.nvars != n) throw std::invalid_argument("macaulay_build: inconsistent variable counts");
        degrees.push_back(f.degree);
    }

    MacaulayMatrices mm;
    mm.structure = macaulay_structure(n, degrees, size_cap);
    const MacaulayStructure& s = mm.structure;

    mm.form_scales.reserve(forms.size());
    mm.integer_forms.resize(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        BigInt scale = lcm_of_denominators(forms[i]);
        mm.form_scales.push_back(scale);
        for (const auto& [expo, coeff] : forms[i].terms) {
            BigRational scaled = coeff * BigRational(scale);
            if (!is_integer(scaled)) throw std::logic_error("macaulay_build: denominator clearing failed");
            if (sgn(scaled) != 0) mm.integer_forms[i][expo] = scaled.get_num();
        }
    }

    std::map<std::vector<int>, std::size_t> column_of;
    for (std::size_t c = 0; c < s.monomials.size(); ++c) column_of[s.monomials[c]] = c;

    const std::size_t dim = s.size();
    mm.numerator = Matrix<BigInt>(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const int i = s.row_poly[r];
        std::vector<int> multiplier = s.monomials[r];
        multiplier[static_cast<std::size_t>(i)] -= s.degrees[static_cast<std::size_t>(i)];
        for (const auto& [expo, coeff] : mm.integer_forms[static_cast<std::size_t>(i)]) {
            std::vector<int> target(expo.size());
            for (std::size_t k = 0; k < expo.size(); ++k) target[k] = expo[k] + multiplier[k];
            mm.numerator(r, column_of.at(target)) = coeff;
        }
    }

    const std::size_t dn = s.denominator_indices.size();
    mm.denominator = Matrix<BigInt>(dn, dn);
    for (std::size_t a = 0; a < dn; ++a)
        for (std::size_t b = 0; b < dn; ++b)
            mm.denominator(a, b) = mm.numerator(s.denominator_indices[a], s.denominator_indices[b]);
    return mm;
}

MacaulayMatrices macaulay_build(const ExactSymmetricTensor& t, std::size_t size_cap) {
    return macaulay_build(gradient_forms(t), size_cap);
}

BigRational macaulay_resultant(const std::vector<HomogeneousForm>& forms, std::size_t size_cap, int threads) {
    MacaulayMatrices mm = macaulay_build(forms, size_cap);
    BigInt den_det = bareiss_det(mm.denominator, threads);
    if (den_det == 0) throw MacaulayDegenerate("Macaulay degenerate: denominator determinant is zero");
    BigInt num_det = bareiss_det(mm.numerator, threads);
    BigRational res = make_rational(num_det, den_det);
    // Clearing F_i's denominators scaled Res by L_i^{prod_{j != i} d_j}.
    for (std::size_t i = 0; i < mm.form_scales.size(); ++i) {
        if (mm.form_scales[i] == 1) continue;
        BigInt degree_product = 1;
        for (std::size_t j = 0; j < mm.structure.degrees.size(); ++j)
            if (j != i) degree_product *= mm.structure.degrees[j];
        res /= BigRational(pow_int(mm.form_scales[i], degree_product.get_ui()));
    }
    return res;
}

namespace {

// Clears denominators: returns integer coefficient vector and the scale used.
std::pair<std::vector<BigInt>, BigInt> clear_denominators(const std::vector<BigRational>& coeffs) {
    BigInt l = 1;
    for (const BigRational& c : coeffs) {
        BigInt den = c.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<BigInt> out;
    out.reserve(coeffs.size());
    for (const BigRational& c : coeffs) {
        BigRational scaled = c * BigRational(l);
        out.push_back(scaled.get_num());
    }
    return {std::move(out), l};
}

}  // namespace

DetResult tensor_determinant(const ExactSymmetricTensor& t, std::size_t size_cap, int threads) {
    if (t.dim() < 2) throw std::invalid_argument("tensor_determinant: dimension must be >= 2");
    DetResult out;
    if (t.dim() == 2) {
        auto [f1, f2] = binary_form_coefficients(t);
        auto [p, l1] = clear_denominators(f1);
        auto [q, l2] = clear_denominators(f2);
        const unsigned long d = static_cast<unsigned long>(t.order() - 1);
        BigInt det = bareiss_det(sylvester_matrix(p, q), threads);
        BigRational res(det);
        res /= BigRational(pow_int(l1, d));  // Res is degree deg(q) in p's coefficients
        res /= BigRational(pow_int(l2, d));
        out.signed_value = res;
        out.method = DetMethod::sylvester;
        out.sign_note = "sylvester: m-1 shifted form-1 rows above m-1 shifted form-2 rows";
    } else {
        out.signed_value = macaulay_resultant(gradient_forms(t), size_cap, threads);
        out.method = DetMethod::macaulay;
        out.sign_note = "macaulay: graded-lex monomial order x1>...>xn, least-index row assignment";
    }
    out.absolute = abs(out.signed_value);
    return out;
}

IntPolynomial char_poly_dim2(const ExactSymmetricTensor& t) {
    if (t.dim() != 2) throw std::invalid_argument("char_poly_dim2: dimension must be 2");
    auto [f1, f2] = binary_form_coefficients(t);
    auto [p, l1] = clear_denominators(f1);
    auto [q, l2] = clear_denominators(f2);
    std::vector<IntPolynomial> pp, qq;
    pp.reserve(p.size());
    qq.reserve(q.size());
    for (const BigInt& c : p) pp.push_back(IntPolynomial::constant(c));
    for (const BigInt& c : q) qq.push_back(IntPolynomial::constant(c));
    // lambda x^{[m-1]}: subtract lambda from the x_i^{m-1} coefficient of form i.
    pp.front() = pp.front() - IntPolynomial::variable() * l1;
    qq.back() = qq.back() - IntPolynomial::variable() * l2;
    return bareiss_det(sylvester_matrix(pp, qq));
}

// ---- real root isolation -------------------------------------------------

namespace {

using RatPoly = std::vector<BigRational>;  // lowest degree first, trimmed

void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly from_int_poly(const IntPolynomial& p) {
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const BigInt& c : p.coeffs()) out.emplace_back(c);
    return out;
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

BigRational eval(const RatPoly& p, const BigRational& x) {
    BigRational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * BigRational(static_cast<unsigned long>(i)));
    return out;
}

void make_monic(RatPoly& p) {
    if (p.empty()) return;
    BigRational lead = p.back();
    for (BigRational& c : p) c /= lead;
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
    while (degree(a) >= degree(b)) {
        BigRational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

RatPoly quotient(const RatPoly& a, const RatPoly& b) {
    RatPoly rem = a, quot(a.size() - b.size() + 1, BigRational(0));
    while (degree(rem) >= degree(b)) {
        BigRational f = rem.back() / b.back();
        const std::size_t shift = rem.size() - b.size();
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        rem.pop_back();
        trim(rem);
        if (rem.empty()) break;
    }
    return quot;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p, derivative(p)};
    trim(chain[1]);
    while (!chain.back().empty() && degree(chain.back()) >= 1) {
        RatPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (BigRational& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const BigRational& x) {
    int count = 0, last = 0;
    for (const RatPoly& p : chain) {
        const int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

std::vector<double> real_roots(const IntPolynomial& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
    if (!(tol > 0)) throw std::invalid_argument("real_roots: tolerance must be positive");
    RatPoly rp = from_int_poly(p);
    trim(rp);
    if (degree(rp) < 1) return {};
    // Distinct roots only: divide by gcd(p, p').
    RatPoly g = poly_gcd(rp, derivative(rp));
    RatPoly sf = (degree(g) >= 1) ? quotient(rp, g) : rp;
    trim(sf);
    if (degree(sf) < 1) return {};

    // Cauchy bound: all roots lie strictly inside |x| < 1 + max |a_k / a_d|.
    BigRational maxratio = 0;
    for (int k = 0; k < degree(sf); ++k) {
        BigRational r = abs(sf[static_cast<std::size_t>(k)] / sf.back());
        if (r > maxratio) maxratio = r;
    }
    BigRational bound = maxratio + 2;

    const std::vector<RatPoly> chain = sturm_chain(sf);
    auto variations = [&](const BigRational& x) { return sign_variations(chain, x); };

    // Split point with sf != 0; shifts off the midpoint if it lands on a root.
    auto split_point = [&](const BigRational& a, const BigRational& b) {
        BigRational mid = (a + b) / 2;
        for (int k = 1; sgn(eval(sf, mid)) == 0; ++k)
            mid = a + (b - a) * BigRational(k, 2 * k + 1);
        return mid;
    };

    struct Interval {
        BigRational lo, hi;
        int count;
    };
    std::deque<Interval> work{{-bound, bound, variations(-bound) - variations(bound)}};
    std::vector<Interval> isolated;
    while (!work.empty()) {
        Interval iv = work.front();
        work.pop_front();
        if (iv.count <= 0) continue;
        if (iv.count == 1) {
            isolated.push_back(iv);
            continue;
        }
        const BigRational mid = split_point(iv.lo, iv.hi);
        const int left = variations(iv.lo) - variations(mid);
        work.push_back({iv.lo, mid, left});
        work.push_back({mid, iv.hi, iv.count - left});
    }

    std::vector<double> roots;
    roots.reserve(isolated.size());
    const BigRational width_goal(tol);
    for (const Interval& iv : isolated) {
        BigRational lo = iv.lo, hi = iv.hi;
        int slo = sgn(eval(sf, lo));
        while (hi - lo > width_goal) {
            BigRational mid = (lo + hi) / 2;
            const int smid = sgn(eval(sf, mid));
            if (smid == 0) {  // exact rational root
                lo = hi = mid;
                break;
            }
            if (smid == slo)
                lo = mid;
            else
                hi = mid;
        }
        BigRational midpoint = (lo + hi) / 2;
        roots.push_back(midpoint.get_d());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace pascalis
