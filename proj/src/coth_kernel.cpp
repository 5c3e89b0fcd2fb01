#include "cpnano/coth_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace cpnano {

namespace {
constexpr std::array<double, 6> kFactorial = {1.0, 1.0, 2.0, 6.0, 24.0, 120.0};
}

double detail::kernel_singular_part(int n, double y) {
    double ypow = y;
    for (int i = 0; i < n; ++i) ypow *= y;
    const double s = kFactorial[static_cast<std::size_t>(n)] / ypow;
    return (n % 2 == 0) ? s : -s;
}

CothKernel detail::coth_kernel_series(double y) {
    CothKernel k;
    k.y = y;
    const double y2 = y * y;
    for (int n = 0; n <= 5; ++n) {
        // regular part: sum_j a_j (2j+1)(2j)...(2j+2-n) y^(2j+1-n), Horner
        // in y^2
        double acc = 0.0;
        for (int j = 7; j >= 0; --j) {
            const int p = 2 * j + 1;
            if (p < n) break;
            double fall = 1.0;
            for (int i = 0; i < n; ++i) fall *= static_cast<double>(p - i);
            acc = acc * y2 + kKernelLaurent[static_cast<std::size_t>(j)] * fall;
        }
        if (n % 2 == 0) acc *= y;  // lowest surviving power is y^1 for even n
        k.c[static_cast<std::size_t>(n)] = kernel_singular_part(n, y) + acc;
    }
    return k;
}

CothKernel detail::coth_kernel_rational(double y) {
    CothKernel k;
    k.y = y;
    const double q = std::exp(-y);
    const double omq = -std::expm1(-y);  // 1 - q without cancellation
    const double omq2 = omq * omq;
    const double omq3 = omq2 * omq;

    // C^(n) = (-1)^n q A_n(q) / (1-q)^(n+1) with Eulerian polynomials A_n.
    // When q underflows (y > ~745) these give C = 1/2 and derivatives 0.
    k.c[0] = 0.5 + q / omq;
    k.c[1] = -q / omq2;
    k.c[2] = q * (1.0 + q) / omq3;
    k.c[3] = -q * (1.0 + q * (4.0 + q)) / (omq2 * omq2);
    k.c[4] = q * (1.0 + q * (11.0 + q * (11.0 + q))) / (omq2 * omq3);
    k.c[5] = -q * (1.0 + q * (26.0 + q * (66.0 + q * (26.0 + q)))) / (omq3 * omq3);
    return k;
}

CothKernel coth_kernel(double y) {
    if (!std::isfinite(y) || y <= 0.0) {
        throw std::domain_error("coth_kernel: y must be positive and finite");
    }
    return (y < detail::kKernelSeriesSwitch) ? detail::coth_kernel_series(y)
                                             : detail::coth_kernel_rational(y);
}

double detail::EntropyBracket::operator()(const CothKernel& k) const {
    const double y = k.y;
    if (y < kKernelSeriesSwitch) {
        double acc = 0.0;
        for (int i = 7; i >= 0; --i) {
            acc = acc * (y * y) + series_[static_cast<std::size_t>(i)];
        }
        return acc * y;
    }
    if (k.c[1] == 0.0) {
        // saturated kernel (q underflowed): only the C term survives, and
        // y^j * 0 must not be allowed to reach y^j overflow
        return b_[0] * k.c[0];
    }
    double sum = 0.0;
    double ypow = 1.0;
    for (std::size_t j = 0; j < 6; ++j) {
        sum += b_[j] * ypow * k.c[j];
        ypow *= y;
    }
    return sum;
}

}  // namespace cpnano
