#include "padic/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "padic/dft.hpp"

namespace padic {

namespace {

double pow_p(int p, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= p;
    for (int i = 0; i > e; --i) r /= p;
    return r;
}

long long ipow(int p, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= p;
        if (r > (1LL << 40)) throw std::length_error("step function too large to transform");
    }
    return r;
}

template <class Map>
void prune_map(Map& m) {
    double vmax = 0.0;
    for (auto& [k, v] : m) vmax = std::max(vmax, std::abs(v));
    for (auto it = m.begin(); it != m.end();) {
        if (std::abs(it->second) < kPruneRel * vmax || it->second == cplx(0.0))
            it = m.erase(it);
        else
            ++it;
    }
}

}  // namespace

StepFunctionTime StepFunctionTime::indicator_subgroup(int p, int n, cplx v) {
    StepFunctionTime f(p, n);
    f.set(Word(), v);
    return f;
}

void StepFunctionTime::set(const GroupElement& g, cplx v) {
    values_[g.truncate_above(level_)] = v;
}

void StepFunctionTime::accumulate(const GroupElement& g, cplx v) {
    values_[g.truncate_above(level_)] += v;
}

cplx StepFunctionTime::value_at(const GroupElement& x) const {
    auto it = values_.find(x.truncate_above(level_));
    return it == values_.end() ? cplx(0.0) : it->second;
}

double StepFunctionTime::coset_measure() const { return pow_p(p_, -level_); }

double StepFunctionTime::norm_sq() const {
    double s = 0.0;
    for (auto& [k, v] : values_) s += std::norm(v);
    return s * coset_measure();
}

cplx StepFunctionTime::integral() const {
    cplx s(0.0);
    for (auto& [k, v] : values_) s += v;
    return s * coset_measure();
}

void StepFunctionTime::prune() { prune_map(values_); }

StepFunctionFreq StepFunctionFreq::indicator_subgroup(int p, int n, cplx v) {
    StepFunctionFreq f(p, n);
    f.set(Word(), v);
    return f;
}

StepFunctionFreq StepFunctionFreq::indicator(int p, const DualCoset& c) {
    StepFunctionFreq f(p, c.level);
    f.set(c.rep, cplx(1.0));
    return f;
}

void StepFunctionFreq::set(const CharacterWord& w, cplx v) {
    values_[w.truncate_below(level_)] = v;
}

void StepFunctionFreq::accumulate(const CharacterWord& w, cplx v) {
    values_[w.truncate_below(level_)] += v;
}

cplx StepFunctionFreq::value_at(const CharacterWord& chi) const {
    auto it = values_.find(chi.truncate_below(level_));
    return it == values_.end() ? cplx(0.0) : it->second;
}

double StepFunctionFreq::coset_measure() const { return pow_p(p_, level_); }

double StepFunctionFreq::norm_sq() const {
    double s = 0.0;
    for (auto& [k, v] : values_) s += std::norm(v);
    return s * coset_measure();
}

cplx StepFunctionFreq::integral() const {
    cplx s(0.0);
    for (auto& [k, v] : values_) s += v;
    return s * coset_measure();
}

void StepFunctionFreq::prune() { prune_map(values_); }

StepFunctionFreq fourier(const StepFunctionTime& f, bool prune) {
    int p = f.p();
    int c = f.constancy_level();
    if (f.empty()) return StepFunctionFreq(p, c);
    int lo = c;
    for (auto& [w, v] : f.values())
        if (!w.empty()) lo = std::min(lo, w.lowest_index());
    int L = c - lo;
    long long P = ipow(p, L);

    // Dense coordinates: h at index B = sum a_n p^{n-lo}; output coset word
    // at index A = sum alpha_j p^{c-1-j}, so that
    // conj((word_A, h_B)) = exp(-2 pi i A B / P).
    std::vector<cplx> buf(P, cplx(0.0));
    for (auto& [w, v] : f.values()) {
        long long B = 0;
        for (auto& [n, d] : w.entries()) B += d * ipow(p, n - lo);
        buf[B] = v;
    }
    dft_pow_p(buf, p, -1);

    StepFunctionFreq out(p, lo);
    double scale = pow_p(p, -c);
    for (long long A = 0; A < P; ++A) {
        if (buf[A] == cplx(0.0)) continue;
        std::vector<std::pair<int, int>> entries;
        long long a = A;
        for (int t = 0; t < L && a > 0; ++t) {
            int d = static_cast<int>(a % p);
            a /= p;
            if (d != 0) entries.emplace_back(c - 1 - t, d);
        }
        out.set(Word::of(std::move(entries)), buf[A] * scale);
    }
    if (prune) out.prune();
    return out;
}

StepFunctionTime inverse_fourier(const StepFunctionFreq& F, bool prune) {
    int p = F.p();
    int l = F.refinement_level();
    if (F.empty()) return StepFunctionTime(p, l);
    int hi = l;
    for (auto& [w, v] : F.values())
        if (!w.empty()) hi = std::max(hi, w.highest_index() + 1);
    int L = hi - l;
    long long P = ipow(p, L);

    std::vector<cplx> buf(P, cplx(0.0));
    for (auto& [w, v] : F.values()) {
        long long A = 0;
        for (auto& [j, d] : w.entries()) A += d * ipow(p, hi - 1 - j);
        buf[A] = v;
    }
    dft_pow_p(buf, p, +1);

    StepFunctionTime out(p, hi);
    double scale = pow_p(p, l);
    for (long long B = 0; B < P; ++B) {
        if (buf[B] == cplx(0.0)) continue;
        std::vector<std::pair<int, int>> entries;
        long long b = B;
        for (int t = 0; t < L && b > 0; ++t) {
            int d = static_cast<int>(b % p);
            b /= p;
            if (d != 0) entries.emplace_back(l + t, d);
        }
        out.set(Word::of(std::move(entries)), buf[B] * scale);
    }
    if (prune) out.prune();
    return out;
}

cplx inner_product(const StepFunctionTime& f, const StepFunctionTime& g) {
    int c = std::max(f.constancy_level(), g.constancy_level());
    StepFunctionTime fr = refine_time(f, c);
    StepFunctionTime gr = refine_time(g, c);
    cplx s(0.0);
    for (auto& [k, v] : fr.values()) {
        auto it = gr.values().find(k);
        if (it != gr.values().end()) s += v * std::conj(it->second);
    }
    return s * pow_p(f.p(), -c);
}

cplx inner_product_freq(const StepFunctionFreq& F, const StepFunctionFreq& G) {
    int l = std::min(F.refinement_level(), G.refinement_level());
    StepFunctionFreq fr = refine_freq(F, l);
    StepFunctionFreq gr = refine_freq(G, l);
    cplx s(0.0);
    for (auto& [k, v] : fr.values()) {
        auto it = gr.values().find(k);
        if (it != gr.values().end()) s += v * std::conj(it->second);
    }
    return s * pow_p(F.p(), l);
}

std::vector<Word> digit_extensions(int p, int from, int to) {
    if (to < from) throw std::invalid_argument("digit_extensions: bad range");
    long long count = ipow(p, to - from);
    std::vector<Word> out;
    out.reserve(count);
    for (long long i = 0; i < count; ++i) {
        std::vector<std::pair<int, int>> entries;
        long long v = i;
        for (int t = 0; t < to - from && v > 0; ++t) {
            int d = static_cast<int>(v % p);
            v /= p;
            if (d != 0) entries.emplace_back(from + t, d);
        }
        out.push_back(Word::of(std::move(entries)));
    }
    return out;
}

StepFunctionTime refine_time(const StepFunctionTime& f, int new_level) {
    if (new_level < f.constancy_level())
        throw std::invalid_argument("refine_time: new level must be >= current");
    if (new_level == f.constancy_level()) return f;
    StepFunctionTime out(f.p(), new_level);
    auto ext = digit_extensions(f.p(), f.constancy_level(), new_level);
    for (auto& [w, v] : f.values()) {
        for (auto& e : ext) {
            std::vector<std::pair<int, int>> entries = w.entries();
            for (auto& pr : e.entries()) entries.push_back(pr);
            out.set(Word::of(std::move(entries)), v);
        }
    }
    return out;
}

StepFunctionFreq refine_freq(const StepFunctionFreq& F, int new_level) {
    if (new_level > F.refinement_level())
        throw std::invalid_argument("refine_freq: new level must be <= current");
    if (new_level == F.refinement_level()) return F;
    StepFunctionFreq out(F.p(), new_level);
    auto ext = digit_extensions(F.p(), new_level, F.refinement_level());
    for (auto& [w, v] : F.values()) {
        for (auto& e : ext) {
            std::vector<std::pair<int, int>> entries = e.entries();
            for (auto& pr : w.entries()) entries.push_back(pr);
            out.set(Word::of(std::move(entries)), v);
        }
    }
    return out;
}

StepFunctionFreq pointwise_product(const StepFunctionFreq& F, const StepFunctionFreq& G) {
    int l = std::min(F.refinement_level(), G.refinement_level());
    StepFunctionFreq fr = refine_freq(F, l);
    StepFunctionFreq gr = refine_freq(G, l);
    StepFunctionFreq out(F.p(), l);
    for (auto& [k, v] : fr.values()) {
        auto it = gr.values().find(k);
        if (it != gr.values().end()) out.set(k, v * it->second);
    }
    out.prune();
    return out;
}

StepFunctionTime dilate_time(const StepFunctionTime& f, int k) {
    StepFunctionTime out(f.p(), f.constancy_level() + k);
    for (auto& [w, v] : f.values()) out.set(w.shifted(k), v);
    return out;
}

StepFunctionFreq dilate_freq(const StepFunctionFreq& F, int k) {
    StepFunctionFreq out(F.p(), F.refinement_level() + k);
    for (auto& [w, v] : F.values()) out.set(w.shifted(k), v);
    return out;
}

StepFunctionTime translate_time(const StepFunctionTime& f, const GroupElement& h) {
    StepFunctionTime out(f.p(), f.constancy_level());
    for (auto& [w, v] : f.values()) out.set(add(f.p(), w, h), v);
    return out;
}

bool dual_coset_contains(const DualCoset& outer, const DualCoset& inner) {
    if (outer.level < inner.level) return false;
    return inner.rep.truncate_below(outer.level) == outer.rep;
}

double integral_abs2_over(const StepFunctionFreq& F, const DualCoset& C) {
    double s = 0.0;
    for (auto& [w, v] : F.values()) {
        DualCoset key{F.refinement_level(), w};
        if (dual_coset_contains(C, key))
            s += std::norm(v) * pow_p(F.p(), F.refinement_level());
        else if (dual_coset_contains(key, C))
            s += std::norm(v) * pow_p(F.p(), C.level);
    }
    return s;
}

cplx integral_over(const StepFunctionFreq& F, const DualCoset& C) {
    cplx s(0.0);
    for (auto& [w, v] : F.values()) {
        DualCoset key{F.refinement_level(), w};
        if (dual_coset_contains(C, key))
            s += v * pow_p(F.p(), F.refinement_level());
        else if (dual_coset_contains(key, C))
            s += v * pow_p(F.p(), C.level);
    }
    return s;
}

}  // namespace padic
