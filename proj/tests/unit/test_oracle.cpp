#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "cpnano/oracle.hpp"
#include "cpnano/pair.hpp"
#include "cpnano/plate.hpp"
#include "fd_oracle.hpp"

using namespace cpnano;

TEST_CASE("oracle equals the closed forms over the standard grid") {
    for (double ga : {0.0, 0.5, 1.0, 2.0}) {
        for (double gb : {0.0, 0.5, 1.0, 2.0}) {
            for (double y : {0.2, 1.0, 5.0, 20.0}) {
                const Polarizability p{ga, 1.0, 0.6 * gb, 0.6};
                const auto geom = ThermalGeometry::from_y(1.0, y);
                const double closed = plate_free_energy(p, geom);
                const double sum =
                    oracle::plate_free_energy_oracle(p, geom, 1e-13);
                CHECK(sum == doctest::Approx(closed).epsilon(1e-10));

                const Polarizability p1{ga, 1.0, -0.5 * gb, -0.5};
                const Polarizability p2{0.7 * ga, 0.7, 0.4 * gb, 0.4};
                const ParticlePair pair{p1, p2, geom};
                const double pclosed = pair_free_energy(pair);
                const double psum = oracle::pair_free_energy_oracle(pair, 1e-13);
                CHECK(psum == doctest::Approx(pclosed).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("single-mode structure at large y") {
    // y = 30: the m = 0 term dominates the plate sum,
    // F ~ -(T / 8 Z^3)(alpha_perp + alpha_z - beta_perp - beta_z)
    const Polarizability p{1.0, 0.8, 0.3, -0.2};
    const auto geom = ThermalGeometry::from_y(1.0, 30.0);
    const auto s = oracle::plate_free_energy_sum(p, geom, 1e-13);
    const double m0 = -geom.T / 8.0 * (1.0 + 0.8 - 0.3 + 0.2);
    CHECK(s.value == doctest::Approx(m0).epsilon(1e-10));

    // the EM cross summand vanishes at m = 0 (x^2 factor), so an
    // electric-magnetic pair has no classical (m = 0) free energy and the
    // whole sum dies exponentially
    const auto far = ThermalGeometry::from_y(1.0, 60.0);
    const ParticlePair em{Polarizability::electric(1.0),
                          {0.0, 0.0, 0.9, 0.9},
                          far};
    CHECK(std::fabs(oracle::pair_free_energy_oracle(em, 1e-13)) <
          far.T * 1e-10);
}

TEST_CASE("alpha = beta cancels term by term") {
    const Polarizability dual{0.7, 1.2, 0.7, 1.2};
    for (double x : {0.0, 0.3, 2.0, 9.0}) {
        CHECK(oracle::plate_mode_term(dual, x) == 0.0);
    }
    const auto geom = ThermalGeometry::from_y(1.0, 1.0);
    CHECK(oracle::plate_free_energy_oracle(dual, geom, 1e-12) == 0.0);
}

TEST_CASE("TE m = 0 mode carries no weight (PC vs Drude plate)") {
    const auto geom = ThermalGeometry::from_y(1.0, 1.0);
    CHECK(oracle::te_mode_zero_check(geom));
    const Polarizability p{2.0, 1.0, 0.0, 0.0};
    CHECK(oracle::plate_te_mode_term(p, 0.0) == 0.0);
    // TM keeps its zero-frequency weight
    CHECK(oracle::plate_tm_mode_term(p, 0.0) != 0.0);

    // consequence: the TE sum is unchanged by dropping the m = 0 mode
    const double y = 0.8;
    double with_zero = oracle::plate_te_mode_term(p, 0.0);
    double without_zero = 0.0;
    for (int m = 1; m < 200; ++m) {
        const double t = oracle::plate_te_mode_term(p, m * y);
        with_zero += 2.0 * t;
        without_zero += 2.0 * t;
    }
    CHECK(with_zero == without_zero);
}

TEST_CASE("truncation control: tail bound covers refinement") {
    const Polarizability p{1.5, 1.0, -0.4, -0.5};
    const auto geom = ThermalGeometry::from_y(1.0, 0.7);
    const auto coarse = oracle::plate_free_energy_sum(p, geom, 1e-6);
    const auto fine = oracle::plate_free_energy_sum(p, geom, 1e-14);
    CHECK(coarse.m_max >= 8);
    CHECK(fine.m_max > coarse.m_max);
    CHECK(std::fabs(coarse.value - fine.value) <= coarse.tail_bound);
    CHECK(coarse.tail_bound <= 1e-6 * std::fabs(coarse.value));

    const ParticlePair pair{p, Polarizability::conducting_sphere(1.0), geom};
    const auto pc = oracle::pair_free_energy_sum(pair, 1e-6);
    const auto pf = oracle::pair_free_energy_sum(pair, 1e-14);
    CHECK(std::fabs(pc.value - pf.value) <= pc.tail_bound);
}

TEST_CASE("finite-difference entropy of the oracle matches the closed form") {
    const std::vector<Polarizability> particles = {
        Polarizability::electric(1.0),
        Polarizability::conducting_sphere(1.0),
        {2.0, 1.0, 0.3, -0.4},
    };
    for (const auto& p : particles) {
        for (double t : {0.1, 0.4}) {
            const double h = t * 1e-4;
            const auto F = [&](double temp) {
                return oracle::plate_free_energy_oracle(
                    p, ThermalGeometry(1.0, temp), 1e-13);
            };
            const double d1 = (F(t + h) - F(t - h)) / (2.0 * h);
            const double d2 = (F(t + 0.5 * h) - F(t - 0.5 * h)) / h;
            const double fd = -(4.0 * d2 - d1) / 3.0;  // Richardson fallback
            const double s = plate_entropy(p, ThermalGeometry(1.0, t));
            CHECK(s == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("negative control: a skewed closed form is caught") {
    // the equivalence check must be able to fail; feed it a sabotaged value
    const Polarizability p = Polarizability::electric(1.0);
    const auto geom = ThermalGeometry::from_y(1.0, 1.0);
    const double closed = plate_free_energy(p, geom);
    const double sum = oracle::plate_free_energy_oracle(p, geom, 1e-13);
    const double sabotaged = closed * (1.0 + 1e-6);
    CHECK(std::fabs(closed - sum) / std::fabs(closed) <= 1e-10);
    CHECK(std::fabs(sabotaged - sum) / std::fabs(sabotaged) > 1e-10);
}

TEST_CASE("oracle domain errors") {
    const Polarizability p = Polarizability::electric(1.0);
    CHECK_THROWS_AS(
        oracle::plate_free_energy_oracle(p, ThermalGeometry(1.0, 0.0), 1e-10),
        std::domain_error);
    CHECK_THROWS_AS(
        oracle::plate_free_energy_oracle(p, ThermalGeometry(1.0, 0.1), 0.0),
        std::domain_error);
    // tolerance unreachable: y so small that 1e7 modes cannot converge
    const auto tiny = ThermalGeometry::from_y(1.0, 1e-7);
    CHECK_THROWS_AS(oracle::plate_free_energy_oracle(p, tiny, 1e-12),
                    std::runtime_error);
}
