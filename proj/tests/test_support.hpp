#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "padic/group.hpp"
#include "padic/step_function.hpp"

namespace padic::test {

/// Deterministic uniform double in [0, 1) from raw mt19937_64 output.
/// (std::uniform_real_distribution is implementation-defined; this is not.)
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Box-Muller standard normal, deterministic across platforms.
inline double gauss(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

inline cplx gauss_cplx(std::mt19937_64& rng) {
    double re = gauss(rng);
    double im = gauss(rng);
    return cplx(re, im);
}

/// Random word with digits at indices in [lo, hi).
inline Word random_word(std::mt19937_64& rng, int p, int lo, int hi) {
    std::vector<std::pair<int, int>> entries;
    for (int n = lo; n < hi; ++n) {
        int d = static_cast<int>(rng() % p);
        if (d != 0) entries.emplace_back(n, d);
    }
    return Word::of(std::move(entries));
}

/// Random step function with constancy level c, support words over [lo, c).
inline StepFunctionTime random_time_function(std::mt19937_64& rng, int p, int c, int lo,
                                             int cosets) {
    StepFunctionTime f(p, c);
    for (int i = 0; i < cosets; ++i) f.set(random_word(rng, p, lo, c), gauss_cplx(rng));
    return f;
}

/**
 * Base-p big-integer oracle for group arithmetic.  A finite word with digits
 * in [lo, hi) is the integer sum a_n p^{n-lo}; + and - on words with carries
 * toward increasing index are exactly integer + and - mod p^{hi-lo}.
 */
inline long long word_to_int(int p, const Word& w, int lo, int hi) {
    long long v = 0;
    for (auto& [n, d] : w.entries()) {
        long long pw = 1;
        for (int k = 0; k < n - lo; ++k) pw *= p;
        (void)hi;
        v += d * pw;
    }
    return v;
}

inline Word int_to_word(int p, long long v, int lo, int hi) {
    std::vector<std::pair<int, int>> entries;
    for (int n = lo; n < hi && v > 0; ++n) {
        int d = static_cast<int>(v % p);
        v /= p;
        if (d != 0) entries.emplace_back(n, d);
    }
    return Word::of(std::move(entries));
}

}  // namespace padic::test
