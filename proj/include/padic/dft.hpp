#pragma once

#include <complex>
#include <vector>

namespace padic {

/**
 * In-place DFT of size n = p^levels for prime p:
 *
 *   X[k] = sum_j x[j] * exp(sign * 2 pi i * j k / n)
 *
 * Plain radix-p Cooley-Tukey; no scaling is applied.  Sizes here stay small
 * (at most a few hundred thousand), so a table of the n-th roots is built per
 * call.
 */
void dft_pow_p(std::vector<std::complex<double>>& x, int p, int sign);

}  // namespace padic
