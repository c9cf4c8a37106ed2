#include "padic/frame_verify.hpp"

#include <algorithm>
#include <cmath>

#include "padic/dft.hpp"

namespace padic {

namespace {

double pow_p(int p, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= p;
    for (int i = 0; i > e; --i) r /= p;
    return r;
}

long ipow(int p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

double uniform01(std::mt19937_64& rng) { return (double)(rng() >> 11) * 0x1.0p-53; }

cplx gauss_cplx(std::mt19937_64& rng) {
    double u1 = std::max(uniform01(rng), 1e-300);
    double u2 = uniform01(rng);
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * 3.14159265358979323846 * u2;
    return cplx(r * std::cos(th), r * std::sin(th));
}

}  // namespace

cplx coefficient(const StepFunctionFreq& fhat, const DualCoset& E, int n, const GroupElement& h) {
    int p = fhat.p();
    DualCoset D{E.level + n, dilate_character(E.rep, n)};
    GroupElement y = dilate_element(h, -n);
    cplx sum(0.0);
    for (auto& [w, v] : fhat.values()) {
        DualCoset K{fhat.refinement_level(), w};
        if (dual_coset_contains(D, K)) {
            // int_K (chi, y) dnu = p^{l_K} (w, y) 1_{G_{l_K}}(y)
            if (y.supported_at_or_above(K.level))
                sum += v * pow_p(p, K.level) * pair_char(p, w, y);
        } else if (dual_coset_contains(K, D)) {
            if (y.supported_at_or_above(D.level))
                sum += v * pow_p(p, D.level) * pair_char(p, D.rep, y);
        }
    }
    return sum * pow_p(p, 0) * std::pow((double)p, -0.5 * n);
}

cplx coefficient_time(const StepFunctionTime& f, const WaveletSpec& w, int n, const GroupElement& h) {
    int p = f.p();
    int lE = w.support.level;
    int u = w.support.rep.highest_index();
    // The integrand is constant on cosets of level c: (w, A^n x) needs
    // c >= u + n + 1, the indicator 1_{G_lE}(A^n x - h) needs c >= lE + n.
    int c = std::max({f.constancy_level(), u + n + 1, lE + n});
    StepFunctionTime fr = refine_time(f, c);
    int floor = u + 1 > lE ? u + 1 : lE;
    cplx sum(0.0);
    for (auto& [x, v] : fr.values()) {
        GroupElement y = subtract(p, dilate_element(x, n), h, floor);
        if (!y.supported_at_or_above(lE)) continue;
        sum += v * std::conj(pow_p(p, lE) * pair_char(p, w.support.rep, y));
    }
    return sum * pow_p(p, -c) * std::pow((double)p, 0.5 * n);
}

CoefficientGrid coefficient_grid(const StepFunctionTime& f, const StepFunctionFreq& fhat,
                                 const WaveletSpec& w, size_t wavelet_index, int n_min, int n_max) {
    int p = fhat.p();
    CoefficientGrid grid{wavelet_index, n_min, n_max, {}, 0.0, false};
    for (int n = n_min; n <= n_max; ++n) {
        int L = std::min(fhat.refinement_level(), w.support.level + n);
        int s_star = std::max(0, n - L);
        long count = ipow(p, s_star);
        for (long i = 0; i < count; ++i) {
            cplx c = coefficient(fhat, w.support, n, h0_element(p, i));
            if (c != cplx(0.0)) grid.entries[{n, i}] = c;
        }
        long extra = ipow(p, s_star + 1);
        for (long i = count; i < extra; ++i)
            grid.extra_layer_max = std::max(
                grid.extra_layer_max, std::abs(coefficient(fhat, w.support, n, h0_element(p, i))));
    }
    grid.truncation_ok = grid.extra_layer_max <= 1e-12 * std::sqrt(f.norm_sq());
    return grid;
}

Lemma31Result lemma31_check(const StepFunctionTime& f, const StepFunctionFreq& fhat,
                            const WaveletSpec& w, int n) {
    int p = fhat.p();
    const DualCoset& E = w.support;
    int L = std::min(fhat.refinement_level(), E.level + n);
    // c_{n,h} vanishes unless A^{-n} h lies in G_L; the digits of h sit at
    // [-s, -1], those of A^{-n} h at [n-s, n-1], so s <= n - L.
    int s_star = std::max(0, n - L);
    long count = ipow(p, s_star);

    Lemma31Result res{0.0, 0.0, 0.0, 0.0, count};
    for (long i = 0; i < count; ++i)
        res.lhs += std::norm(coefficient(fhat, E, n, h0_element(p, i)));
    long extra = ipow(p, s_star + 1);
    for (long i = count; i < extra; ++i)
        res.extra_layer_max =
            std::max(res.extra_layer_max, std::abs(coefficient(fhat, E, n, h0_element(p, i))));

    DualCoset D{E.level + n, dilate_character(E.rep, n)};
    res.rhs = integral_abs2_over(fhat, D);
    res.residual = std::abs(res.lhs - res.rhs) / std::max(res.rhs, f.norm_sq() * 1e-6);
    return res;
}

ParsevalResult parseval_residual(const StepFunctionTime& f, const FrameSystem& fs) {
    const GroupParams& params = fs.params;
    int p = params.p;

    // Dense transform of f: index A encodes the dual coset word with
    // exponent j at digit position top-1-j, over j in [lo, top).
    int top = f.constancy_level();
    int lo = top;
    for (auto& [w, v] : f.values())
        if (!w.empty()) lo = std::min(lo, w.lowest_index());
    int L = top - lo;
    long P = ipow(p, L);
    std::vector<cplx> fhat(P, cplx(0.0));
    for (auto& [w, v] : f.values()) {
        long B = 0;
        for (auto& [idx, d] : w.entries()) B += d * ipow(p, idx - lo);
        fhat[B] = v;
    }
    dft_pow_p(fhat, p, -1);
    double scale = pow_p(p, -top);
    for (auto& v : fhat) v *= scale;

    ParsevalResult res{f.norm_sq(), 0.0, 0.0, 0.0, true, 0.0, 0.0};

    // Pieces per annulus k: E_j A^{k-1-u_j}, precomputed for k in (lo, top].
    struct Piece {
        int level;
        Word word;
    };
    std::vector<std::vector<Piece>> pieces(top - lo + 1);
    for (int k = lo + 1; k <= top; ++k) {
        for (auto& w : fs.wavelets) {
            int u = w.support.rep.highest_index();
            int m = k - 1 - u;
            pieces[k - lo].push_back({w.support.level + m, dilate_character(w.support.rep, m)});
        }
    }

    // Walk the dense grid: every A != 0 lies in annulus k = top - val_p(A);
    // its coset must be covered exactly once (measure-wise) by the pieces.
    double coset_measure = pow_p(p, lo);
    for (long A = 1; A < P; ++A) {
        if (fhat[A] == cplx(0.0)) continue;  // still participates: zero mass either way
        long a = A;
        int val = 0;
        while (a % p == 0) {
            a /= p;
            ++val;
        }
        int k = top - val;
        // word of A: digit at position t is the exponent at index top-1-t
        std::vector<std::pair<int, int>> entries;
        long tmp = A;
        for (int t = 0; t < L && tmp > 0; ++t) {
            int d = (int)(tmp % p);
            tmp /= p;
            if (d != 0) entries.emplace_back(top - 1 - t, d);
        }
        Word word = Word::of(std::move(entries));
        double covered = 0.0;
        double mass = std::norm(fhat[A]);
        for (auto& piece : pieces[k - lo]) {
            if (piece.level >= lo) {
                // piece at least as coarse as the grid coset
                if (word.truncate_below(piece.level) == piece.word) {
                    res.total += mass * coset_measure;
                    covered += coset_measure;
                }
            } else {
                // piece strictly finer: it sits inside one grid coset
                if (piece.word.truncate_below(lo) == word) {
                    res.total += mass * pow_p(p, piece.level);
                    covered += pow_p(p, piece.level);
                }
            }
        }
        if (std::abs(covered - coset_measure) > 1e-9 * coset_measure) res.tiling_ok = false;
    }

    // Analytic geometric tail: fhat is constant (= fhat(1)) on G_lo^bot, and
    // the annuli k <= lo telescope to measure p^lo.
    res.tail = std::norm(fhat[0]) * pow_p(p, lo);
    res.total += res.tail;

    // Truncation safety at both window edges.  Low side: the zero bin of the
    // transform against a naive summation of f (guards the DFT scale and
    // ordering conventions; constancy of fhat on G_lo^bot itself is exact by
    // representation).  High side: fhat at r_top, one annulus beyond the
    // support bound, summed at one level finer so the character is constant
    // per coset; the p-th roots of unity must cancel.
    {
        cplx naive(0.0);
        for (auto& [x, v] : f.values()) naive += v;
        res.truncation_low = std::abs(naive * pow_p(p, -top) - fhat[0]);

        Word chi = Word::single(top, 1);
        cplx beyond(0.0);
        for (auto& [x, v] : f.values()) {
            for (int d = 0; d < p; ++d) {
                Word xd = add(p, x, Word::single(top, d));
                beyond += v * std::conj(pair_char(p, chi, xd)) * pow_p(p, -top - 1);
            }
        }
        res.truncation_high = std::abs(beyond);
    }

    res.residual = std::abs(res.total - res.norm_sq) / res.norm_sq;
    return res;
}

std::vector<std::vector<cplx>> gram_shift_matrix(const StepFunctionTime& phi, int s) {
    auto h0 = enumerate_h0(phi.p(), s);
    std::vector<StepFunctionTime> shifts;
    shifts.reserve(h0.size());
    for (auto& h : h0) shifts.push_back(translate_time(phi, h));
    std::vector<std::vector<cplx>> gram(h0.size(), std::vector<cplx>(h0.size()));
    for (size_t i = 0; i < h0.size(); ++i)
        for (size_t j = 0; j < h0.size(); ++j) gram[i][j] = inner_product(shifts[i], shifts[j]);
    return gram;
}

double refinement_residual(const MaskSpec& spec, const StepFunctionTime& phi) {
    const GroupParams& params = spec.params;
    auto h0 = enumerate_h0(params.p, params.N + 1);
    std::vector<long> bidx(h0.size());
    for (size_t i = 0; i < h0.size(); ++i) bidx[i] = beta_index(params, h0[i]);
    double max_err = 0.0;
    for (auto& x : digit_extensions(params.p, -params.N - 1, params.M + 1)) {
        cplx lhs = phi.value_at(x);
        Word ax = dilate_element(x, 1);
        cplx rhs(0.0);
        for (size_t i = 0; i < h0.size(); ++i) {
            Word y = subtract(params.p, ax, h0[i], phi.constancy_level());
            rhs += spec.beta[bidx[i]] * phi.value_at(y);
        }
        rhs *= (double)params.p;
        max_err = std::max(max_err, std::abs(lhs - rhs));
    }
    return max_err;
}

StepFunctionTime random_test_function(const GroupParams& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    StepFunctionTime f(params.p, params.M + 2);
    for (auto& w : digit_extensions(params.p, -params.N - 1, params.M + 2))
        f.set(w, gauss_cplx(rng));
    return f;
}

}  // namespace padic
