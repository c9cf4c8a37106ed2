#include "padic/frame_builder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace padic {

namespace {

long ipow(int p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

std::string coset_str(const DualCoset& c) {
    std::ostringstream os;
    os << "G_(" << c.level << ")^bot *";
    if (c.rep.empty()) os << " 1";
    for (auto& [j, d] : c.rep.entries()) os << " r_(" << j << ")^" << d;
    return os.str();
}

/// Member nodes of a dual coset refined to level -N, as tree indices.
std::vector<long> member_nodes(const GroupParams& params, const DualCoset& c) {
    if (c.level < -params.N)
        throw std::invalid_argument("member_nodes: coset finer than level -N");
    if (!c.rep.empty() && c.rep.highest_index() > params.M)
        throw std::invalid_argument("member_nodes: coset outside G_{M+1}^bot");
    std::vector<long> out;
    for (auto& ext : digit_extensions(params.p, -params.N, c.level)) {
        std::vector<std::pair<int, int>> entries = ext.entries();
        for (auto& e : c.rep.entries()) entries.push_back(e);
        out.push_back(coset_node(params, DualCoset{-params.N, Word::of(std::move(entries))}));
    }
    return out;
}

WaveletSpec make_wavelet(const GroupParams& params, const DualCoset& E,
                         const std::vector<cplx>& shifted_node,
                         const std::vector<char>& shifted_zero) {
    WaveletSpec w{E, dilation_exponent(params, E), StepFunctionFreq::indicator(params.p, E),
                  StepFunctionFreq(params.p, -params.N), StepFunctionTime(params.p, 0)};
    for (long m : member_nodes(params, E)) {
        if (shifted_zero[m])
            throw std::logic_error("wavelet support touches a zero of phi_hat(chi A^{-1}) at node " +
                                   std::to_string(m));
        w.mask.set(node_coset(params, m).rep, cplx(1.0) / shifted_node[m]);
    }
    w.psi = inverse_fourier(w.psi_hat);
    return w;
}

}  // namespace

WaveletSpec wavelet_on(const FrameSystem& fs, const DualCoset& E) {
    return make_wavelet(fs.params, E, fs.shifted_node, fs.shifted_zero);
}

int dilation_exponent(const GroupParams& params, const DualCoset& E) {
    if (E.rep.empty())
        throw std::invalid_argument("dilation_exponent: support contains the subgroup G_(" +
                                    std::to_string(E.level) + ")^bot; it cannot tile an annulus");
    return params.M - E.rep.highest_index();
}

int smallest_zero_level(const std::vector<char>& shifted_zero, int p, int height) {
    for (int s = 1; s <= height; ++s) {
        long lo = ipow(p, s - 1), hi = ipow(p, s);
        for (long m = lo; m < hi; ++m)
            if (shifted_zero[m]) return s - 1;
    }
    throw std::logic_error("smallest_zero_level: no zero found in a valid tree");
}

FrameSystem build_frame(const MaskSpec& spec, const BuildOptions& opts) {
    const GroupParams& params = spec.params;
    int p = params.p;
    if (params.M != params.N)
        throw std::invalid_argument("build_frame: the algorithm requires M == N");

    FrameSystem fs{params, spec,           phi_hat_nodes(spec), phi_hat_zero_flags(solved_tree(spec)),
                   {},     {},             assemble_phi_hat(spec), assemble_phi(spec),
                   0,      Branch::General, false,              {},
                   {},     opts.j_low,     {}};
    fs.shifted_node = shift_tree(fs.phi_hat_node, p);
    fs.shifted_zero = shift_zero_flags(fs.phi_hat_zero, p);
    fs.n_level = smallest_zero_level(fs.shifted_zero, p, params.height());
    int n = fs.n_level;

    if (n == 1) {
        fs.branch = Branch::NOne;
        // J sets from the structural zeros of the mask tree at level 1.
        for (int j = 1; j < p; ++j)
            (spec.zero[j] ? fs.j0 : fs.j1).push_back(j);
        if (fs.j1.empty()) {
            // lambda_1 = ... = lambda_{p-1} = 0: phi_hat = 1_{G_{-N}^bot} and
            // phi = p^{-N} 1_{G_{-N}} generate an orthogonal MRA; this branch
            // emits no frame wavelets.
            fs.branch = Branch::Orthogonal;
            fs.orthogonal = true;
            return fs;
        }
        std::set<int> low(opts.j_low.begin(), opts.j_low.end());
        for (int j : low)
            if (std::find(fs.j1.begin(), fs.j1.end(), j) == fs.j1.end())
                throw std::invalid_argument("build_frame: J partition entry " + std::to_string(j) +
                                            " is not in J_1");
        for (int j : fs.j1) {
            if (low.count(j)) {
                for (int k = 0; k < p; ++k) {
                    DualCoset E{-params.N, Word::of({{-params.N, k}, {-params.N + 1, j}})};
                    fs.wavelets.push_back(make_wavelet(params, E, fs.shifted_node, fs.shifted_zero));
                }
            } else {
                DualCoset E{-params.N + 1, Word::single(-params.N + 1, j)};
                fs.wavelets.push_back(make_wavelet(params, E, fs.shifted_node, fs.shifted_zero));
            }
        }
        for (int j : fs.j0) {
            DualCoset E{-params.N, Word::single(-params.N, j)};
            fs.wavelets.push_back(make_wavelet(params, E, fs.shifted_node, fs.shifted_zero));
        }
        return fs;
    }

    fs.branch = Branch::General;
    if (!opts.j_low.empty())
        throw std::invalid_argument("build_frame: J partition applies to the n=1 branch only");
    if (!opts.custom_cosets.empty()) {
        for (auto& E : opts.custom_cosets)
            fs.wavelets.push_back(make_wavelet(params, E, fs.shifted_node, fs.shifted_zero));
        return fs;
    }
    // Default decomposition: the p-1 top-level cosets of the annulus
    // G_{-N+n}^bot \ G_{-N+n-1}^bot, each dilated by t = M+N-n+1.
    int lvl = -params.N + n - 1;
    for (int a = 1; a < p; ++a) {
        DualCoset E{lvl, Word::single(lvl, a)};
        fs.wavelets.push_back(make_wavelet(params, E, fs.shifted_node, fs.shifted_zero));
    }
    return fs;
}

CheckReport check_theorem31(const FrameSystem& fs) {
    CheckReport rep;
    const GroupParams& params = fs.params;
    if (fs.orthogonal) return rep;  // nothing to tile; degenerate branch
    if (fs.wavelets.empty()) {
        rep.fail("no wavelets");
        return rep;
    }

    // Pairwise disjoint supports.
    for (size_t i = 0; i < fs.wavelets.size(); ++i) {
        for (size_t j = i + 1; j < fs.wavelets.size(); ++j) {
            const DualCoset& a = fs.wavelets[i].support;
            const DualCoset& b = fs.wavelets[j].support;
            if (dual_coset_contains(a, b) || dual_coset_contains(b, a))
                rep.fail("supports overlap: " + coset_str(a) + " and " + coset_str(b));
        }
    }

    // Dilates tile the top annulus exactly, by refinement to level -N.
    long first_leaf = ipow(params.p, params.height() - 1);
    long leaf_count = first_leaf * (params.p - 1);
    std::map<long, int> cover;
    for (auto& w : fs.wavelets) {
        DualCoset dilated{w.support.level + w.t, dilate_character(w.support.rep, w.t)};
        if (dilated.rep.empty() || dilated.rep.highest_index() != params.M) {
            rep.fail("dilate misses the top annulus: " + coset_str(dilated));
            continue;
        }
        for (long m : member_nodes(params, dilated)) ++cover[m];
    }
    for (auto& [m, c] : cover)
        if (c > 1) rep.fail("leaf node " + std::to_string(m) + " covered " + std::to_string(c) + " times");
    if ((long)cover.size() != leaf_count)
        rep.fail("dilates cover " + std::to_string(cover.size()) + " of " +
                 std::to_string(leaf_count) + " top-annulus cosets");

    // Lemma 3.1 hypotheses: phi_hat(chi A^{-1}) nonzero on E_j (structural)
    // and m_j phi_hat(chi A^{-1}) = 1 there.
    for (auto& w : fs.wavelets) {
        for (long m : member_nodes(params, w.support)) {
            if (fs.shifted_zero[m]) {
                rep.fail("phi_hat(chi A^{-1}) vanishes on " + coset_str(w.support) + " at node " +
                         std::to_string(m));
                continue;
            }
            cplx prod = w.mask.value_at(node_coset(params, m).rep) * fs.shifted_node[m];
            rep.max_mask_deviation =
                std::max(rep.max_mask_deviation, std::abs(prod - cplx(1.0)));
        }
    }
    if (!(rep.max_mask_deviation <= 1e-12))
        rep.fail("m_j * phi_hat(chi A^{-1}) deviates from 1 by " +
                 std::to_string(rep.max_mask_deviation));
    return rep;
}

CheckReport check_dilation_family(const FrameSystem& fs, int K) {
    CheckReport rep;
    if (fs.orthogonal) return rep;
    const GroupParams& params = fs.params;
    int p = params.p;
    // Annulus k = G_k^bot \ G_{k-1}^bot, for k in (-K, K].
    for (int k = -K + 1; k <= K; ++k) {
        // Pieces at this annulus: E_j A^{k-1-u_j}; refine everything to the
        // finest piece level.
        int level = k;  // start coarse; lower below
        std::vector<DualCoset> pieces;
        for (auto& w : fs.wavelets) {
            int u = w.support.rep.highest_index();
            int m = k - 1 - u;
            DualCoset piece{w.support.level + m, dilate_character(w.support.rep, m)};
            level = std::min(level, piece.level);
            pieces.push_back(piece);
        }
        std::set<Word, DualOrder> seen;
        long covered = 0;
        for (auto& piece : pieces) {
            for (auto& ext : digit_extensions(p, level, piece.level)) {
                std::vector<std::pair<int, int>> entries = ext.entries();
                for (auto& e : piece.rep.entries()) entries.push_back(e);
                Word w = Word::of(std::move(entries));
                if (!seen.insert(w).second)
                    rep.fail("annulus " + std::to_string(k) + ": coset covered twice");
                ++covered;
            }
        }
        long expect = ipow(p, k - level) - ipow(p, k - 1 - level);
        if (covered != expect)
            rep.fail("annulus " + std::to_string(k) + ": " + std::to_string(covered) + " of " +
                     std::to_string(expect) + " cosets covered");
        // every covered word must actually lie in annulus k: top index k-1
        for (auto& w : seen)
            if (w.empty() || w.highest_index() != k - 1) {
                rep.fail("annulus " + std::to_string(k) + ": piece escapes the annulus");
                break;
            }
    }
    return rep;
}

}  // namespace padic
