#pragma once

// Completely positive decompositions of Pascal tensors via Gauss-Laguerre
// moment matching, span/rank certification, exact matrix positive
// definiteness, and the numeric probes (sphere minimum, odd-order G_A >= 0).

#include "pascalis/matrix.hpp"
#include "pascalis/tensor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pascalis {

inline constexpr std::uint64_t kDefaultProbeSeed = 0x5CA1AB1EULL;

struct QuadratureRule {
    std::vector<double> nodes;    // t_j > 0
    std::vector<double> weights;  // w_j > 0
};

// Gauss-Laguerre rule for weight e^{-t} on (0, inf): integrates t^s exactly
// (to float accuracy) for s <= 2N-1, i.e. sum w_j t_j^s = s!.
QuadratureRule laguerre_nodes(int n);

struct CPDecomposition {
    int order = 0, dim = 0;
    std::vector<std::vector<double>> vectors;  // u^(j), all components >= 0
    QuadratureRule rule;                       // node/weight provenance
};

// N = ceil((m(n-1)+1)/2) nodes; u^(j)_i = w_j^{1/m} t_j^{i-1}/(i-1)!.  The
// rule integrates every needed moment, so the sum of m-th outer powers
// reproduces the Pascal tensor.
CPDecomposition cp_decompose_pascal(int m, int n);

// Sum of symmetric m-th outer powers of the generating vectors.
FloatSymmetricTensor reconstruct(const CPDecomposition& cp);

struct RankResult {
    int rank = 0;
    bool spans = false;
};

// Numerical rank of the n x r matrix of generating vectors (column-pivoted
// orthogonalization, threshold relative to the largest pivot).
RankResult strong_cp_rank(const CPDecomposition& cp, double threshold = 1e-10);

struct PDVerdict {
    int order = 0, dim = 0;
    int cp_nodes = 0;
    double reconstruction_err = 0.0;
    bool is_CP_constructed = false;
    bool strong_CP = false;
    int rank = 0;
    std::optional<bool> det_nonzero;       // unset when the determinant was out of reach
    std::optional<std::string> det_abs;    // exact decimal string
    std::optional<bool> PD_concluded;      // set only when PD is actually concluded
    std::vector<std::string> notes;
};

// Assembles CP/determinant/span evidence for a Pascal tensor and concludes
// positive definiteness for even order when the evidence allows it.
PDVerdict pd_verdict(const ExactSymmetricTensor& t, std::size_t det_cap = 2000, int threads = 1);

// Sylvester criterion with exact arithmetic: every leading principal minor
// of the symmetric matrix is positive.
bool matrix_pd_exact(const Matrix<BigRational>& m);

struct SphereSearchResult {
    double min_value = 0.0;
    std::vector<double> argmin;
};

// Multistart projected-gradient minimization of F(x) = A x^m on the unit
// sphere.  A probe, not a certificate.
SphereSearchResult min_sphere_search(const FloatSymmetricTensor& t, int restarts, int steps, double tol,
                                     std::uint64_t seed = kDefaultProbeSeed);

struct OddProbeResult {
    int violations = 0;
    double min_component = 0.0;
};

// Samples G(x) = A x^{m-1} at random unit vectors and counts components
// below -tol (odd-order strong positive semidefiniteness probe).
OddProbeResult odd_spsd_probe(const FloatSymmetricTensor& t, int samples, double tol = 1e-9,
                              std::uint64_t seed = kDefaultProbeSeed);

}  // namespace pascalis
