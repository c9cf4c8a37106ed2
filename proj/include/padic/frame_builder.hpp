#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padic/mask_solver.hpp"

namespace padic {

/**
 * One wavelet of the frame: psi_hat is the indicator of the dual coset E,
 * psi its inverse transform (p^l (w, x) on G_l in closed form), and mask the
 * function m_j with m_j(chi) phi_hat(chi A^{-1}) = 1_E, i.e.
 * 1 / phi_hat(chi A^{-1}) on E and zero elsewhere.
 */
struct WaveletSpec {
    DualCoset support;        ///< E
    int t;                    ///< dilation exponent, E A^t lands in the top annulus
    StepFunctionFreq psi_hat;
    StepFunctionFreq mask;
    StepFunctionTime psi;
};

enum class Branch { General, NOne, Orthogonal };

struct BuildOptions {
    /// n=1 branch: members of J_1 moved to J_{1,-N} (each spawns p wavelets);
    /// the rest of J_1 stays in J_{1,-N+1}.  Default: empty, fewest wavelets.
    std::vector<int> j_low;
    /// General branch: replace the default annulus decomposition by explicit
    /// cosets; validated by check_theorem31.
    std::vector<DualCoset> custom_cosets;
};

struct FrameSystem {
    GroupParams params;
    MaskSpec mask;
    std::vector<cplx> phi_hat_node;   ///< path products per tree node
    std::vector<char> phi_hat_zero;   ///< structural zeros of phi_hat
    std::vector<cplx> shifted_node;   ///< phi_hat(chi A^{-1}) per node
    std::vector<char> shifted_zero;
    StepFunctionFreq phi_hat;
    StepFunctionTime phi;
    int n_level;                      ///< the n of the algorithm (first zero at level n+1)
    Branch branch;
    bool orthogonal;                  ///< degenerate n=1 case, no wavelets
    std::vector<int> j1, j0;          ///< n=1 branch index sets (else empty)
    std::vector<int> j_low;           ///< partition actually used
    std::vector<WaveletSpec> wavelets;
};

/// The n of the algorithm: level n+1 is the first level of the shifted tree
/// containing a structural zero; level n is zero-free.  Always >= 1.
int smallest_zero_level(const std::vector<char>& shifted_zero, int p, int height);

/// Run steps 3-4 and the branch dispatch on a solved mask.
FrameSystem build_frame(const MaskSpec& spec, const BuildOptions& opts = {});

struct CheckReport {
    bool pass = true;
    std::vector<std::string> failures;
    double max_mask_deviation = 0.0;  ///< max |m_j * phi_hat(. A^{-1}) - 1| on E_j

    void fail(std::string what) {
        pass = false;
        failures.push_back(std::move(what));
    }
};

/**
 * Theorem 3.1 hypotheses, checked mechanically: E_j pairwise disjoint,
 * E_j A^{t(j)} pairwise disjoint and tiling G_{M+1}^bot \ G_M^bot exactly
 * (by refinement to level -N), phi_hat(chi A^{-1}) structurally nonzero on
 * every E_j, and m_j phi_hat(chi A^{-1}) = 1 on E_j.
 */
CheckReport check_theorem31(const FrameSystem& fs);

/**
 * The full dilation family {E_j A^{t(j)+n}} tiles X minus the trivial
 * character: verified annulus by annulus on the window
 * G_K^bot \ G_{-K}^bot.
 */
CheckReport check_dilation_family(const FrameSystem& fs, int K);

/// t for a wavelet support: E A^t must land in the top annulus, so
/// t = M - (top exponent index of the reduced word).
int dilation_exponent(const GroupParams& params, const DualCoset& E);

/// Build the wavelet supported on E against this frame's phi_hat(chi A^{-1});
/// throws when the shifted tree vanishes somewhere on E.
WaveletSpec wavelet_on(const FrameSystem& fs, const DualCoset& E);

}  // namespace padic
