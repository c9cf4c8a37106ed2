#include "padic/mask_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padic {

namespace {

long ipow(int p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

cplx horner(const std::vector<cplx>& beta, cplx q) {
    cplx acc(0.0);
    for (auto it = beta.rbegin(); it != beta.rend(); ++it) acc = acc * q + *it;
    return acc;
}

}  // namespace

long digit_reversal(int p, long m, int digits) {
    long r = 0;
    for (int i = 0; i < digits; ++i) {
        r = r * p + m % p;
        m /= p;
    }
    return r;
}

cplx q_node(const GroupParams& params, long m) {
    int H = params.height();
    long P = ipow(params.p, H);
    if (m < 0 || m >= P) throw std::out_of_range("q_node: node index out of range");
    long rev = digit_reversal(params.p, m, H);
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    long double th = -two_pi * (long double)rev / (long double)P;
    return cplx((double)cosl(th), (double)sinl(th));
}

long beta_index(const GroupParams& params, const GroupElement& h) {
    long n = 0;
    for (auto& [idx, d] : h.entries()) {
        if (idx < -params.N - 1 || idx > -1)
            throw std::invalid_argument("beta_index: h is not in H_0^{(N+1)}");
        n += d * ipow(params.p, params.N + 1 + idx);
    }
    return n;
}

std::vector<cplx> vandermonde_solve(const std::vector<cplx>& nodes, const std::vector<cplx>& rhs) {
    size_t n = nodes.size();
    if (rhs.size() != n) throw std::invalid_argument("vandermonde_solve: size mismatch");
    std::vector<cplx> c = rhs;
    // Newton divided differences over the nodes.
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = n - 1; i >= k; --i) {
            cplx den = nodes[i] - nodes[i - k];
            c[i] = (c[i] - c[i - 1]) / den;
            if (i == k) break;
        }
    }
    // Expand the Newton form into monomial coefficients.
    for (size_t k = n - 1; k-- > 0;) {
        for (size_t i = k; i + 1 < n; ++i) c[i] -= nodes[k] * c[i + 1];
    }
    return c;
}

MaskSpec solve_mask(const MaskTree& t) {
    auto cls = classify(t);
    if (cls.kind == TreeClass::Infeasible)
        throw InfeasibleError(
            "solve_mask: #Lambda_0 >= p^{N+1}; the zero values force lambda_0 = 0, "
            "so they do not define a mask (Theorem 2.01 case 3)");
    if (cls.kind == TreeClass::DeterminesAfterPadding)
        throw std::invalid_argument("solve_mask: tree needs " + std::to_string(cls.deficit) +
                                    " padding zeros first");

    const GroupParams& params = t.params();
    auto zeros = t.zero_set();
    std::vector<long> rows;
    rows.reserve(zeros.size() + 1);
    rows.push_back(0);
    rows.insert(rows.end(), zeros.begin(), zeros.end());

    std::vector<cplx> nodes(rows.size()), rhs(rows.size(), cplx(0.0));
    for (size_t i = 0; i < rows.size(); ++i) nodes[i] = q_node(params, rows[i]);
    rhs[0] = cplx(1.0);

    MaskSpec spec{params, vandermonde_solve(nodes, rhs), {}, {}, 0.0, 0.0, 0.0};

    long count = t.node_count();
    spec.lambda.assign(count, cplx(0.0));
    spec.zero.assign(count, 0);
    for (long m : zeros) spec.zero[m] = 1;

    double residual = 0.0;
    for (size_t i = 0; i < rows.size(); ++i)
        residual = std::max(residual, std::abs(horner(spec.beta, nodes[i]) - rhs[i]));
    spec.solve_residual = residual;

    double vmin = std::numeric_limits<double>::infinity(), vmax = 0.0;
    for (long m = 0; m < count; ++m) {
        if (spec.zero[m]) continue;  // structural zero stays exactly zero
        cplx v = (m == 0) ? cplx(1.0) : horner(spec.beta, q_node(params, m));
        spec.lambda[m] = v;
        vmin = std::min(vmin, std::abs(v));
        vmax = std::max(vmax, std::abs(v));
    }
    spec.lambda_min_nonzero = vmin;
    spec.lambda_max = vmax;
    // Theorem 2.01 case 1: lambda_m != 0 outside Lambda_0.
    if (!(vmin > 1e-9 * vmax))
        throw std::logic_error("solve_mask: a lambda outside Lambda_0 is numerically zero, "
                               "contradicting Theorem 2.01 case 1");
    return spec;
}

MaskTree solved_tree(const MaskSpec& spec) {
    MaskTree t(spec.params);
    for (long m = 1; m < t.node_count(); ++m) {
        if (spec.zero[m])
            t.set_zero(m);
        else
            t.set_value(m, spec.lambda[m]);
    }
    return t;
}

std::vector<cplx> phi_hat_nodes(const MaskSpec& spec) {
    std::vector<cplx> out(spec.lambda.size());
    out[0] = cplx(1.0);
    for (long m = 1; m < (long)out.size(); ++m) out[m] = spec.lambda[m] * out[m / spec.params.p];
    return out;
}

StepFunctionFreq assemble_phi_hat(const MaskSpec& spec) {
    auto values = phi_hat_nodes(spec);
    auto flags = phi_hat_zero_flags(solved_tree(spec));
    StepFunctionFreq out(spec.params.p, -spec.params.N);
    long interior = ipow(spec.params.p, spec.params.height() - 1);
    for (long m = 0; m < interior; ++m) {
        if (flags[m]) continue;
        out.set(node_coset(spec.params, m).rep, values[m]);
    }
    return out;
}

StepFunctionTime assemble_phi(const MaskSpec& spec) { return inverse_fourier(assemble_phi_hat(spec)); }

bool support_propagation_ok(const MaskSpec& spec) {
    auto flags = phi_hat_zero_flags(solved_tree(spec));
    // Nodes of the annulus G_{M+2}^bot \ G_{M+1}^bot are children of leaves;
    // their phi_hat(. A^{-1}) factor is the leaf value.  All leaves must be
    // structural zeros.
    long first = ipow(spec.params.p, spec.params.height() - 1);
    for (long m = first; m < (long)flags.size(); ++m)
        if (!flags[m]) return false;
    return true;
}

}  // namespace padic
