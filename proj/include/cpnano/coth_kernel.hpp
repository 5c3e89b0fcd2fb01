#pragma once

#include <array>
#include <stdexcept>

namespace cpnano {

/**
 * Values of C(y) = (1/2) coth(y/2) and its first five derivatives.
 *
 * C is the Matsubara-summed kernel behind every free-energy and entropy
 * expression in this library: C(y) = (1/2) sum_m exp(-|m| y).  The entropy
 * formulas need derivatives up to fifth order (the pair free energy carries
 * a y^5 d^4/dy^4 term, so its y-derivative reaches order five).
 */
struct CothKernel {
    double y = 0.0;
    std::array<double, 6> c{};  ///< C, C', C'', C''', C'''', C'''''
};

/// Evaluate the kernel at y.  Relative error of c[0..4] is <= 1e-12 over the
/// whole domain.  Throws std::domain_error unless y is positive and finite.
CothKernel coth_kernel(double y);

namespace detail {

/// Branch switchover: Laurent series below, exp(-y) rational forms above.
inline constexpr double kKernelSeriesSwitch = 0.25;

/// Coefficients of the regular part of the Laurent expansion,
///   C(y) = 1/y + sum_k a_k y^(2k-1),  a_k = B_{2k} / (2k)!.
inline constexpr std::array<double, 8> kKernelLaurent = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

/// Laurent-series branch (accurate for y up to ~0.5).
CothKernel coth_kernel_series(double y);

/// Rational branch in q = exp(-y), with 1 - q formed via expm1.
/// For y > ~745, q underflows and the branch returns C = 1/2 and zero
/// derivatives exactly.
CothKernel coth_kernel_rational(double y);

/// Singular part of the n-th derivative: (-1)^n n! / y^(n+1).
double kernel_singular_part(int n, double y);

/**
 * A linear combination  sum_j b_j y^j C^(j)(y)  whose 1/y pole parts cancel
 * identically (every entropy appearing in this library is of this form).
 *
 * Evaluating the combination on the kernel values would cancel
 * catastrophically at small y, where each term is dominated by its pole, so
 * below the branch switchover it is evaluated from its own Laurent series
 * with the cancellations performed exactly on the coefficients:
 *   sum_k a_k S_k y^(2k-1),   S_k = sum_j b_j (2k-1)(2k-2)...(2k-j),
 * where S_1 = 0 follows from the pole cancellation.  Above the switchover
 * the raw-value combination is accurate (and keeps full relative precision
 * on the exponentially small remainders at large y).
 *
 * Constructing an EntropyBracket whose poles do not cancel is a compile-time
 * error in constexpr context.
 */
class EntropyBracket {
  public:
    explicit constexpr EntropyBracket(const std::array<double, 6>& b)
        : b_(b) {
        // pole cancellation: sum_j b_j (-1)^j j! must vanish
        double pole = 0.0;
        double fact = 1.0;
        for (int j = 0; j < 6; ++j) {
            if (j > 0) fact *= j;
            pole += b_[static_cast<std::size_t>(j)] *
                    ((j % 2 == 0) ? fact : -fact);
        }
        if (pole != 0.0) {
            throw std::logic_error("EntropyBracket: pole parts do not cancel");
        }
        for (int k = 1; k <= 8; ++k) {
            const int p = 2 * k - 1;
            double weight = 0.0;
            for (int j = 0; j < 6 && j <= p; ++j) {
                double fall = 1.0;
                for (int i = 0; i < j; ++i) fall *= p - i;
                weight += b_[static_cast<std::size_t>(j)] * fall;
            }
            series_[static_cast<std::size_t>(k - 1)] =
                kKernelLaurent[static_cast<std::size_t>(k - 1)] * weight;
        }
    }

    double operator()(const CothKernel& k) const;

  private:
    std::array<double, 6> b_;
    std::array<double, 8> series_{};  // a_k S_k
};

}  // namespace detail

}  // namespace cpnano
