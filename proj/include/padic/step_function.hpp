#pragma once

#include <map>
#include <vector>

#include "padic/group.hpp"

namespace padic {

struct TimeOrder {
    bool operator()(const Word& a, const Word& b) const { return monna_less(a, b); }
};
struct DualOrder {
    bool operator()(const Word& a, const Word& b) const { return monna_dual_less(a, b); }
};

/// Relative threshold under which arithmetic results are dropped from the
/// support.  Construction zeros are structural and never rely on this.
inline constexpr double kPruneRel = 1e-14;

/**
 * A finitely supported step function on the group, constant on cosets of
 * G_{level}.  Keys are reduced coset representatives (digits at indices
 * < level); each coset has Haar measure p^{-level}.
 */
class StepFunctionTime {
public:
    StepFunctionTime(int p, int constancy_level) : p_(p), level_(constancy_level) {}

    /// v * 1_{G_n}, represented at constancy level n.
    static StepFunctionTime indicator_subgroup(int p, int n, cplx v = cplx(1.0));

    int p() const { return p_; }
    int constancy_level() const { return level_; }
    const std::map<Word, cplx, TimeOrder>& values() const { return values_; }
    bool empty() const { return values_.empty(); }

    void set(const GroupElement& g, cplx v);   // reduces g mod G_level
    void accumulate(const GroupElement& g, cplx v);
    cplx value_at(const GroupElement& x) const;

    double coset_measure() const;  // p^{-level}
    double norm_sq() const;
    cplx integral() const;

    /// Drop entries with |v| < kPruneRel * max|v| (and exact zeros).
    void prune();

private:
    int p_;
    int level_;
    std::map<Word, cplx, TimeOrder> values_;
};

/**
 * A finitely supported step function on the character group, constant on
 * cosets of G_{level}^bot.  Keys are reduced representatives (exponents at
 * indices >= level); each coset has measure p^{level}.
 */
class StepFunctionFreq {
public:
    StepFunctionFreq(int p, int refinement_level) : p_(p), level_(refinement_level) {}

    /// v * 1_{G_n^bot}, represented at refinement level n.
    static StepFunctionFreq indicator_subgroup(int p, int n, cplx v = cplx(1.0));
    /// Indicator of a single dual coset, at the coset's own level.
    static StepFunctionFreq indicator(int p, const DualCoset& c);

    int p() const { return p_; }
    int refinement_level() const { return level_; }
    const std::map<Word, cplx, DualOrder>& values() const { return values_; }
    bool empty() const { return values_.empty(); }

    void set(const CharacterWord& w, cplx v);  // reduces w mod G_level^bot
    void accumulate(const CharacterWord& w, cplx v);
    cplx value_at(const CharacterWord& chi) const;

    double coset_measure() const;  // p^{level}
    double norm_sq() const;
    cplx integral() const;

    void prune();

private:
    int p_;
    int level_;
    std::map<Word, cplx, DualOrder> values_;
};

/**
 * Fourier transform of a step function, fhat(chi) = int f(x) conj((chi, x)) dmu.
 *
 * Exact finite sum over support cosets; computed as a digit-reversed DFT of
 * size p^(c - l) where c is the constancy level and l the lowest digit index
 * in the support.  The result lies in G_c^bot and is constant on cosets of
 * G_l^bot.
 */
StepFunctionFreq fourier(const StepFunctionTime& f, bool prune = true);

/// Inverse transform, f(x) = int F(chi) (chi, x) dnu.
StepFunctionTime inverse_fourier(const StepFunctionFreq& F, bool prune = true);

/// <f, g> = int f conj(g) dmu as a finite sum over the common refinement.
cplx inner_product(const StepFunctionTime& f, const StepFunctionTime& g);
cplx inner_product_freq(const StepFunctionFreq& F, const StepFunctionFreq& G);

/// Same function on finer cosets (new_level >= current for time functions).
StepFunctionTime refine_time(const StepFunctionTime& f, int new_level);
/// Same function on finer cosets (new_level <= current for dual functions).
StepFunctionFreq refine_freq(const StepFunctionFreq& F, int new_level);

/// Pointwise product on the common refinement; absent cosets are zero.
StepFunctionFreq pointwise_product(const StepFunctionFreq& F, const StepFunctionFreq& G);

/// g(x) = f(A^k x).
StepFunctionTime dilate_time(const StepFunctionTime& f, int k);
/// G(chi) = F(chi A^{-k}), i.e. the support moves by A^{+k}.
StepFunctionFreq dilate_freq(const StepFunctionFreq& F, int k);

/// g(x) = f(x - h).
StepFunctionTime translate_time(const StepFunctionTime& f, const GroupElement& h);

/// Containment of nested dual cosets (equal-level cosets compare by rep).
bool dual_coset_contains(const DualCoset& outer, const DualCoset& inner);

/// int_C |F|^2 dnu over a dual coset C, exact.
double integral_abs2_over(const StepFunctionFreq& F, const DualCoset& C);

/// int_C F dnu over a dual coset C, exact.
cplx integral_over(const StepFunctionFreq& F, const DualCoset& C);

/// All digit extensions over index range [from, to) as words, in counting order.
std::vector<Word> digit_extensions(int p, int from, int to);

}  // namespace padic
