#include "pascalis/cp_spectral.hpp"

#include "pascalis/resultant.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace pascalis {

QuadratureRule laguerre_nodes(int n) {
    if (n < 1) throw std::invalid_argument("laguerre_nodes: N must be >= 1");
    constexpr double kEps = 1e-15;
    constexpr int kMaxIter = 100;
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    double z = 0.0;
    for (int i = 1; i <= n; ++i) {
        if (i == 1) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 2) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double ai = i - 2;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[static_cast<std::size_t>(i - 3)]);
        }
        double p1 = 1.0, p2 = 0.0, pp = 0.0;
        bool converged = false;
        for (int it = 0; it < kMaxIter; ++it) {
            p1 = 1.0;
            p2 = 0.0;
            for (int j = 1; j <= n; ++j) {  // Laguerre three-term recurrence
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0 - z) * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (p1 - p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= kEps * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw std::runtime_error("laguerre_nodes: Newton iteration failed to converge at node " +
                                     std::to_string(i));
        rule.nodes[static_cast<std::size_t>(i - 1)] = z;
        rule.weights[static_cast<std::size_t>(i - 1)] = -1.0 / (pp * n * p2);
    }
    return rule;
}

CPDecomposition cp_decompose_pascal(int m, int n) {
    if (m < 2 || n < 1) throw std::invalid_argument("cp_decompose_pascal: need m >= 2, n >= 1");
    const int max_moment = m * (n - 1);
    const int nodes = (max_moment + 2) / 2;  // ceil((m(n-1)+1)/2)
    CPDecomposition cp;
    cp.order = m;
    cp.dim = n;
    cp.rule = laguerre_nodes(nodes);
    std::vector<double> inv_factorial(static_cast<std::size_t>(n));
    double fac = 1.0;
    for (int i = 0; i < n; ++i) {
        if (i > 1) fac *= i;
        inv_factorial[static_cast<std::size_t>(i)] = 1.0 / fac;
    }
    for (int j = 0; j < nodes; ++j) {
        const double t = cp.rule.nodes[static_cast<std::size_t>(j)];
        const double wroot = std::pow(cp.rule.weights[static_cast<std::size_t>(j)], 1.0 / m);
        std::vector<double> u(static_cast<std::size_t>(n));
        double tpow = 1.0;
        for (int i = 0; i < n; ++i) {
            u[static_cast<std::size_t>(i)] = wroot * tpow * inv_factorial[static_cast<std::size_t>(i)];
            tpow *= t;
        }
        cp.vectors.push_back(std::move(u));
    }
    return cp;
}

FloatSymmetricTensor reconstruct(const CPDecomposition& cp) {
    FloatSymmetricTensor t(cp.order, cp.dim);
    t.for_each([&](const MultiIndex& idx, double& v) {
        double sum = 0.0;
        for (const auto& u : cp.vectors) {
            double prod = 1.0;
            for (int ik : idx) prod *= u[static_cast<std::size_t>(ik - 1)];
            sum += prod;
        }
        v = sum;
    });
    return t;
}

RankResult strong_cp_rank(const CPDecomposition& cp, double threshold) {
    const std::size_t n = static_cast<std::size_t>(cp.dim);
    std::vector<std::vector<double>> cols = cp.vectors;  // columns of the n x r matrix
    RankResult out;
    double first_pivot = 0.0;
    const std::size_t steps = std::min(n, cols.size());
    auto norm = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double c : v) s += c * c;
        return std::sqrt(s);
    };
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t best = k;
        double best_norm = norm(cols[k]);
        for (std::size_t j = k + 1; j < cols.size(); ++j) {
            const double nj = norm(cols[j]);
            if (nj > best_norm) {
                best = j;
                best_norm = nj;
            }
        }
        std::swap(cols[k], cols[best]);
        if (k == 0) first_pivot = best_norm;
        if (first_pivot == 0.0 || best_norm < threshold * first_pivot) break;
        ++out.rank;
        for (double& c : cols[k]) c /= best_norm;
        for (std::size_t j = k + 1; j < cols.size(); ++j) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += cols[k][i] * cols[j][i];
            for (std::size_t i = 0; i < n; ++i) cols[j][i] -= dot * cols[k][i];
        }
    }
    out.spans = (out.rank == cp.dim);
    return out;
}

PDVerdict pd_verdict(const ExactSymmetricTensor& t, std::size_t det_cap, int threads) {
    PDVerdict v;
    v.order = t.order();
    v.dim = t.dim();
    CPDecomposition cp = cp_decompose_pascal(t.order(), t.dim());
    v.cp_nodes = static_cast<int>(cp.vectors.size());

    const FloatSymmetricTensor recon = reconstruct(cp);
    double max_rel = 0.0;
    t.for_each([&](const MultiIndex& idx, const BigRational& exact) {
        const double e = exact.get_d();
        const double r = recon.at_sorted(idx);
        const double denom = std::max(1.0, std::abs(e));
        max_rel = std::max(max_rel, std::abs(r - e) / denom);
    });
    v.reconstruction_err = max_rel;
    v.is_CP_constructed = max_rel <= 1e-6;
    if (!v.is_CP_constructed) v.notes.push_back("CP reconstruction error above 1e-6; input not Pascal?");

    const RankResult rank = strong_cp_rank(cp);
    v.rank = rank.rank;
    v.strong_CP = rank.spans;

    try {
        const DetResult det = tensor_determinant(t, det_cap, threads);
        v.det_nonzero = sgn(det.absolute) != 0;
        v.det_abs = to_string(det.absolute);
    } catch (const FeasibilityError&) {
        v.notes.push_back("determinant skipped: beyond feasibility guard");
    }

    if (t.order() % 2 != 0) {
        v.notes.push_back("odd order: positive definiteness not concluded");
    } else if (v.is_CP_constructed && (v.det_nonzero.value_or(false) || v.strong_CP)) {
        v.PD_concluded = true;
        v.notes.push_back(v.det_nonzero.value_or(false) ? "even order, CP, det != 0"
                                                        : "even order, CP, generating vectors span R^n");
    } else {
        v.notes.push_back("evidence insufficient for a PD conclusion");
    }
    return v;
}

bool matrix_pd_exact(const Matrix<BigRational>& m) {
    if (!m.square()) throw std::invalid_argument("matrix_pd_exact: matrix must be square");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix_pd_exact: matrix must be symmetric");
    // Positive scaling by the global denominator LCM preserves minor signs.
    BigInt l = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt den = m(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
    Matrix<BigInt> mi(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigRational scaled = m(i, j) * BigRational(l);
            mi(i, j) = scaled.get_num();
        }
    const std::vector<BigInt> minors = leading_principal_minors(std::move(mi));
    if (minors.size() != n) return false;  // elimination hit a zero minor
    for (const BigInt& d : minors)
        if (d <= 0) return false;
    return true;
}

namespace {

std::vector<double> random_unit_vector(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(n));
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& c : x) {
            c = gauss(rng);
            norm += c * c;
        }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    for (double& c : x) c /= norm;
    return x;
}

}  // namespace

SphereSearchResult min_sphere_search(const FloatSymmetricTensor& t, int restarts, int steps, double tol,
                                     std::uint64_t seed) {
    if (restarts < 1 || steps < 1) throw std::invalid_argument("min_sphere_search: need restarts, steps >= 1");
    std::mt19937_64 rng(seed);
    SphereSearchResult best;
    best.min_value = std::numeric_limits<double>::infinity();
    const int n = t.dim();
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> x = random_unit_vector(rng, n);
        double f = apply_xm(t, x);
        double eta = 0.1;
        for (int s = 0; s < steps; ++s) {
            std::vector<double> g = apply_xm1(t, x);
            double gx = 0.0;
            for (int i = 0; i < n; ++i) gx += g[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            double gnorm = 0.0;
            for (int i = 0; i < n; ++i) {
                g[static_cast<std::size_t>(i)] = t.order() * (g[static_cast<std::size_t>(i)] - gx * x[static_cast<std::size_t>(i)]);
                gnorm += g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
            }
            if (std::sqrt(gnorm) < tol) break;
            bool improved = false;
            for (int h = 0; h < 50 && !improved; ++h) {
                std::vector<double> xp(static_cast<std::size_t>(n));
                double norm = 0.0;
                for (int i = 0; i < n; ++i) {
                    xp[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] - eta * g[static_cast<std::size_t>(i)];
                    norm += xp[static_cast<std::size_t>(i)] * xp[static_cast<std::size_t>(i)];
                }
                norm = std::sqrt(norm);
                for (double& c : xp) c /= norm;
                const double fp = apply_xm(t, xp);
                if (fp < f) {
                    x = std::move(xp);
                    f = fp;
                    eta = std::min(eta * 1.5, 1.0);
                    improved = true;
                } else {
                    eta *= 0.5;
                }
            }
            if (!improved) break;
        }
        if (f < best.min_value) {
            best.min_value = f;
            best.argmin = x;
        }
    }
    return best;
}

OddProbeResult odd_spsd_probe(const FloatSymmetricTensor& t, int samples, double tol, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("odd_spsd_probe: need samples >= 1");
    std::mt19937_64 rng(seed);
    OddProbeResult out;
    out.min_component = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const std::vector<double> x = random_unit_vector(rng, t.dim());
        const std::vector<double> g = apply_xm1(t, x);
        for (double c : g) {
            out.min_component = std::min(out.min_component, c);
            if (c < -tol) ++out.violations;
        }
    }
    return out;
}

}  // namespace pascalis
