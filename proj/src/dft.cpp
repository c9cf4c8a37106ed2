#include "padic/dft.hpp"

#include <cmath>
#include <stdexcept>

namespace padic {

namespace {

using cvec = std::vector<std::complex<double>>;

void dft_rec(const std::complex<double>* in, std::complex<double>* out, size_t n, size_t stride,
             int p, const cvec& roots, size_t root_stride, cvec& scratch) {
    if (n == 1) {
        out[0] = in[0];
        return;
    }
    size_t m = n / p;
    for (int r = 0; r < p; ++r)
        dft_rec(in + r * stride, out + r * m, m, stride * p, p, roots, root_stride * p, scratch);
    // Combine: X[q*m + t] = sum_r w^{(q*m+t)*r} * sub_r[t], w = roots at this size.
    size_t total = roots.size();
    std::complex<double>* tmp = scratch.data();
    for (size_t t = 0; t < m; ++t) {
        for (int q = 0; q < p; ++q) {
            std::complex<double> acc(0.0, 0.0);
            size_t k = q * m + t;
            for (int r = 0; r < p; ++r) {
                size_t e = (k * r) % n;
                acc += roots[e * root_stride % total] * out[r * m + t];
            }
            tmp[q * m + t] = acc;
        }
    }
    for (size_t i = 0; i < n; ++i) out[i] = tmp[i];
}

}  // namespace

void dft_pow_p(cvec& x, int p, int sign) {
    size_t n = x.size();
    if (n == 0) return;
    size_t check = n;
    while (check % p == 0) check /= p;
    if (check != 1) throw std::invalid_argument("dft_pow_p: size is not a power of p");

    cvec roots(n);
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    for (size_t k = 0; k < n; ++k) {
        long double th = sign * two_pi * (long double)k / (long double)n;
        roots[k] = std::complex<double>((double)cosl(th), (double)sinl(th));
    }
    cvec out(n), scratch(n);
    dft_rec(x.data(), out.data(), n, 1, p, roots, 1, scratch);
    x = std::move(out);
}

}  // namespace padic
