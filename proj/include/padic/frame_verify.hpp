#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "padic/frame_builder.hpp"

namespace padic {

/**
 * Frame coefficient through the frequency domain:
 *
 *   c_{n,h} = p^{-n/2} int_{E A^n} fhat(chi) (chi A^{-n}, h) dnu(chi)
 *
 * evaluated as an exact finite sum: each support coset K of fhat contributes
 * its Lemma-2 closed form over K intersect E A^n.
 */
cplx coefficient(const StepFunctionFreq& fhat, const DualCoset& E, int n, const GroupElement& h);

/// Time-domain route for the same coefficient,
/// c = p^{n/2} int f(x) conj(psi(A^n x - h)) dmu; used as the dual-route oracle.
cplx coefficient_time(const StepFunctionTime& f, const WaveletSpec& w, int n, const GroupElement& h);

/**
 * All frame coefficients of one wavelet over an n-interval, with the
 * finiteness of the h-sum confirmed rather than assumed: one full extra
 * layer of h values is computed per n and checked against 1e-12 ||f||.
 */
struct CoefficientGrid {
    size_t wavelet;
    int n_min, n_max;
    /// (n, Monna index of h) -> c_{n,h}; h outside the window is exactly zero.
    std::map<std::pair<int, long long>, cplx> entries;
    double extra_layer_max;
    bool truncation_ok;
};

CoefficientGrid coefficient_grid(const StepFunctionTime& f, const StepFunctionFreq& fhat,
                                 const WaveletSpec& w, size_t wavelet_index, int n_min, int n_max);

struct Lemma31Result {
    double lhs;              ///< sum_h |c_{n,h}|^2 over the confirmed-finite window
    double rhs;              ///< int_{E A^n} |fhat|^2 dnu
    double residual;         ///< |lhs-rhs| / max(rhs, ||f||^2 * 1e-6)
    double extra_layer_max;  ///< max |c| over the next H_0 layer (must be dust)
    long h_count;
};

/// Lemma 3.1 as a test oracle: coefficient energy against the annulus
/// integral, with one extra h-layer computed to confirm the truncation.
Lemma31Result lemma31_check(const StepFunctionTime& f, const StepFunctionFreq& fhat,
                            const WaveletSpec& w, int n);

struct ParsevalResult {
    double norm_sq;         ///< ||f||^2, time domain
    double total;           ///< frame energy: finite window + analytic tail
    double tail;            ///< closed-form geometric tail near the trivial character
    double residual;        ///< |total - norm_sq| / norm_sq
    bool tiling_ok;         ///< every dual coset covered exactly once
    double truncation_low;  ///< |fhat(sample inside G_{l0}^bot) - fhat(1)|, direct sum
    double truncation_high; ///< |fhat(sample beyond the support bound)|, direct sum
};

/**
 * Brute-force Parseval for one test function: dilates of the wavelet supports
 * are intersected with every coset of fhat (piece by piece, multiplicity
 * counted), the annuli inside the constancy region of fhat near 1 are summed
 * as a geometric series in closed form, and the total is compared with the
 * time-domain norm.  The two truncation fields confirm the window edges by
 * direct character sums.
 */
ParsevalResult parseval_residual(const StepFunctionTime& f, const FrameSystem& fs);

/// Gram matrix of the shifts {phi(. - h)}, h in H_0^{(s)}.
std::vector<std::vector<cplx>> gram_shift_matrix(const StepFunctionTime& phi, int s);

/// Max pointwise error of phi(x) = p sum_h beta_h phi(A x - h) over all
/// G_{M+1} cosets of G_{-N-1}.
double refinement_residual(const MaskSpec& spec, const StepFunctionTime& phi);

/// Random test function: constancy level M+2, dense support on G_{-N-1},
/// values complex Gaussian; deterministic in the seed.
StepFunctionTime random_test_function(const GroupParams& params, std::uint64_t seed);

}  // namespace padic
