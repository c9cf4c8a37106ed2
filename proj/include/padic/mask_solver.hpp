#pragma once

#include <vector>

#include "padic/mask_tree.hpp"
#include "padic/step_function.hpp"

namespace padic {

/**
 * The solved mask: beta coefficients of m_0(chi) = sum_h beta_h conj((chi, A^{-1} h))
 * over h in H_0^{(N+1)}, and the node values lambda_m = m_0 on the coset of
 * node m, for every m < p^{M+N+1}.
 *
 * beta is indexed by n = a_{-N-1} + a_{-N} p + ... + a_{-1} p^N, so for every
 * m the row identity sum_n beta_n q_m^n = lambda_m holds.
 */
struct MaskSpec {
    GroupParams params;
    std::vector<cplx> beta;
    std::vector<cplx> lambda;
    std::vector<char> zero;     ///< structural Lambda_0 flags per node
    double solve_residual;      ///< max |sum beta q^n - lambda| over selected rows
    double lambda_min_nonzero;  ///< min |lambda_m| over m outside Lambda_0
    double lambda_max;          ///< max |lambda_m|
};

/**
 * q_m = exp(-(2 pi i / p) sum_k alpha_k p^{-N-k}) where (alpha_{-N} ... alpha_M)
 * are the base-p digits of m; equivalently exp(-2 pi i rev(m) / p^H) with rev
 * the digit reversal in H = M+N+1 digits.
 */
cplx q_node(const GroupParams& params, long m);

/// rev(m): base-p digit reversal in `digits` digits.
long digit_reversal(int p, long m, int digits);

/// beta index of h = a_{-1} g_{-1} + ... + a_{-N-1} g_{-N-1}.
long beta_index(const GroupParams& params, const GroupElement& h);

/**
 * Solve the primal Vandermonde system sum_c beta_c x_i^c = y_i by Newton
 * divided differences (Bjorck-Pereyra); the nodes must be pairwise distinct.
 */
std::vector<cplx> vandermonde_solve(const std::vector<cplx>& nodes, const std::vector<cplx>& rhs);

/**
 * Theorem 2.01 case 1: select rows {0} u Lambda_0, solve the
 * p^{N+1} x p^{N+1} Vandermonde system with right side (1, 0, ..., 0), then
 * evaluate the remaining lambda_m.  Requires classify(t) == Determines; pad
 * first for the padding case.  Throws InfeasibleError on case 3, and a
 * logic_error when some computed lambda_m vanishes outside Lambda_0 (which
 * the theorem excludes; it would signal numerical trouble).
 */
MaskSpec solve_mask(const MaskTree& t);

/// The solved tree carrying the lambda values (zeros stay structural zeros).
MaskTree solved_tree(const MaskSpec& spec);

/// phi_hat node table (path products) of the solved mask.
std::vector<cplx> phi_hat_nodes(const MaskSpec& spec);

/**
 * phi_hat as a step function in D_{-N}(G_M^bot): values on the dual cosets of
 * level -N inside G_M^bot; leaf-level cosets (the annulus G_{M+1} \ G_M) all
 * carry structural zeros and are omitted.
 */
StepFunctionFreq assemble_phi_hat(const MaskSpec& spec);

/// phi = inverse transform of phi_hat, supported on G_{-N}, constant on
/// G_M cosets.
StepFunctionTime assemble_phi(const MaskSpec& spec);

/**
 * Support propagation one level beyond the construction: m_0 * phi_hat(. A^{-1})
 * vanishes structurally on all of G_{M+2}^bot \ G_{M+1}^bot, because every
 * leaf of phi_hat is structurally zero.  Returns false if any leaf escapes.
 */
bool support_propagation_ok(const MaskSpec& spec);

}  // namespace padic
