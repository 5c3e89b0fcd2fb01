#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "cpnano/coth_kernel.hpp"
#include "fd_oracle.hpp"

using cpnano::CothKernel;
using cpnano::coth_kernel;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) {
        g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    }
    return g;
}

// Independent oracle: C^(n)(y) = (-1)^n sum_{m>=1} m^n e^{-m y} for n >= 1,
// C(y) = 1/2 + sum_{m>=1} e^{-m y}.  Converges fast for y >= 0.5.
double truncated_sum(int n, double y) {
    double s = (n == 0) ? 0.5 : 0.0;
    for (int m = 1; m < 5000; ++m) {
        double t = std::exp(-m * y);
        for (int i = 0; i < n; ++i) t *= m;
        s += t;
        if (t < 1e-18 * (std::fabs(s) + 1e-30)) break;
    }
    return (n % 2 == 0) ? s : -s;
}

}  // namespace

TEST_CASE("coth_kernel rejects bad arguments") {
    CHECK_THROWS_AS(coth_kernel(0.0), std::domain_error);
    CHECK_THROWS_AS(coth_kernel(-1.0), std::domain_error);
    CHECK_THROWS_AS(coth_kernel(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(coth_kernel(std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("geometric-sum identity pins the values") {
    for (double y : {0.5, 0.8, 1.5, 3.0, 8.0}) {
        const CothKernel k = coth_kernel(y);
        for (int n = 0; n <= 5; ++n) {
            const double ref = truncated_sum(n, y);
            CHECK(k.c[static_cast<std::size_t>(n)] ==
                  doctest::Approx(ref).epsilon(1e-13));
        }
    }
}

TEST_CASE("closed-form derivatives match the finite-difference oracle") {
    // validates the q-rational forms for C'..C''''' before anything uses them
    for (double y : log_grid(0.1, 10.0, 13)) {
        const CothKernel k = coth_kernel(y);
        for (int n = 1; n <= 5; ++n) {
            const double fd = testutil::fd_derivative(
                [n](double t) {
                    return coth_kernel(t).c[static_cast<std::size_t>(n - 1)];
                },
                y, 0.02 * y);
            const double c = k.c[static_cast<std::size_t>(n)];
            CHECK(std::fabs(c - fd) <= 1e-8 * std::fmax(std::fabs(c), 1.0));
        }
    }
}

TEST_CASE("Riccati ladder: each derivative is algebraically consistent") {
    // C' = 1/4 - C^2 and its derivatives chain the whole ladder together
    for (double y : {0.6, 1.0, 2.5, 7.0, 20.0}) {
        const auto k = coth_kernel(y);
        const auto& c = k.c;
        CHECK(c[1] == doctest::Approx(0.25 - c[0] * c[0]).epsilon(1e-12));
        CHECK(c[2] == doctest::Approx(-2.0 * c[0] * c[1]).epsilon(1e-12));
        CHECK(c[3] ==
              doctest::Approx(-2.0 * (c[1] * c[1] + c[0] * c[2])).epsilon(1e-12));
        CHECK(c[4] == doctest::Approx(-2.0 * (3.0 * c[1] * c[2] + c[0] * c[3]))
                          .epsilon(1e-12));
        CHECK(c[5] ==
              doctest::Approx(
                  -2.0 * (3.0 * c[2] * c[2] + 4.0 * c[1] * c[3] + c[0] * c[4]))
                  .epsilon(1e-12));
    }
}

TEST_CASE("series and rational branches agree across the overlap window") {
    for (double y : log_grid(0.05, 0.5, 46)) {
        const CothKernel a = cpnano::detail::coth_kernel_series(y);
        const CothKernel b = cpnano::detail::coth_kernel_rational(y);
        for (int n = 0; n <= 4; ++n) {
            const auto i = static_cast<std::size_t>(n);
            CHECK(a.c[i] == doctest::Approx(b.c[i]).epsilon(1e-12));
        }
        CHECK(a.c[5] == doctest::Approx(b.c[5]).epsilon(1e-12));
    }
}

TEST_CASE("entropy brackets match the mode-sum reference across branches") {
    // the combination used by the pair EM entropy, the most
    // cancellation-prone of the brackets; the window straddles the
    // series/rational switchover
    constexpr cpnano::detail::EntropyBracket em(
        {0.0, 0.0, 3.0, -3.0, 0.25, 0.25});
    for (double y : log_grid(0.05, 0.6, 30)) {
        const double got = em(coth_kernel(y));
        double ref = 0.0;
        double ypow = 1.0;
        const std::array<double, 6> b = {0.0, 0.0, 3.0, -3.0, 0.25, 0.25};
        for (int j = 0; j < 6; ++j) {
            ref += b[static_cast<std::size_t>(j)] * ypow * truncated_sum(j, y);
            ypow *= y;
        }
        CHECK(got == doctest::Approx(ref).epsilon(1e-6));
    }
    // exact leading behavior at tiny y: 14 s^EM = -y^5 / 504
    const double tiny = em(coth_kernel(1e-4));
    CHECK(tiny == doctest::Approx(-1e-20 / 504.0).epsilon(1e-6));
    // a combination whose poles do not cancel must be rejected
    CHECK_THROWS_AS(cpnano::detail::EntropyBracket({1.0, 0.0, 0.0, 0.0, 0.0,
                                                    0.0}),
                    std::logic_error);
}

TEST_CASE("small-y behavior: y C(y) -> 1 with the y^2/12 correction") {
    const CothKernel k = coth_kernel(0.01);
    // Laurent partial sum: 1 + y^2/12 - y^4/720
    CHECK(0.01 * k.c[0] == doctest::Approx(1.0000083333194445).epsilon(1e-12));
    CHECK(1e-3 * coth_kernel(1e-3).c[0] == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("sign pattern and limits") {
    for (double y : log_grid(0.01, 700.0, 120)) {
        const CothKernel k = coth_kernel(y);
        // strictly above 1/2 until exp(-y) drops below half an ulp of 0.5
        if (y < 36.0) {
            CHECK(k.c[0] > 0.5);
        } else {
            CHECK(k.c[0] >= 0.5);
        }
        for (int n = 1; n <= 5; ++n) {
            const double v = k.c[static_cast<std::size_t>(n)];
            if (n % 2 == 1) {
                CHECK(v < 0.0);
            } else {
                CHECK(v > 0.0);
            }
        }
    }
    // saturation: C -> 1/2, derivatives -> 0
    const CothKernel far = coth_kernel(60.0);
    CHECK(far.c[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::fabs(far.c[1]) < 1e-25);
}

TEST_CASE("underflow policy: exact saturation beyond y = 745") {
    const CothKernel k = coth_kernel(800.0);
    CHECK(k.c[0] == 0.5);
    for (int n = 1; n <= 5; ++n) {
        CHECK(k.c[static_cast<std::size_t>(n)] == 0.0);
    }
}

TEST_CASE("brackets keep full relative precision on exponential tails") {
    // at large y the z-sector bracket saturates at C -> 1/2 while the TE
    // bracket decays as -y^3 e^{-y}; both must come out clean
    constexpr cpnano::detail::EntropyBracket z({1.0, -1.0, -1.0, 0.0, 0.0,
                                                0.0});
    constexpr cpnano::detail::EntropyBracket te({0.0, 0.0, 3.0, 1.0, 0.0,
                                                 0.0});
    CHECK(z(coth_kernel(1000.0)) == 0.5);
    const double y = 45.0;
    const double ref = -std::exp(-y) * y * y * (y - 3.0);  // leading order
    CHECK(te(coth_kernel(y)) == doctest::Approx(ref).epsilon(1e-10));
}
