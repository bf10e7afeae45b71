#include <doctest.h>

#include <cmath>

#include "fluxatom/energy.hpp"

using namespace fluxatom;

namespace {
const PhysicalConstants k = load_constants();
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("Bohr levels") {
    const double eV = k.e;
    CHECK(rel(bohr_energy(QuantumNumbers::circular(1), 1, k), -13.6057 * eV) < 1e-4);
    CHECK(rel(bohr_energy(QuantumNumbers::circular(2), 1, k), -3.4014 * eV) < 1e-4);
    CHECK(rel(bohr_energy(QuantumNumbers::circular(1), 1, k), -k.rydberg_energy()) < 1e-12);
    // Z^2 scaling
    CHECK(rel(bohr_energy(QuantumNumbers::circular(1), 2, k),
              4.0 * bohr_energy(QuantumNumbers::circular(1), 1, k)) < 1e-15);
}

TEST_CASE("Rydberg series ratios") {
    const double W1 = bohr_energy(QuantumNumbers::circular(1), 1, k);
    for (int n = 1; n <= 8; ++n) {
        const double Wn = bohr_energy(QuantumNumbers::circular(n), 1, k);
        CHECK(rel(Wn / W1, 1.0 / (n * n)) < 1e-12);
    }
}

TEST_CASE("exact energy with flux") {
    const QuantumNumbers qn = QuantumNumbers::circular(1);

    SUBCASE("small flux deepens the binding to first order") {
        // W(Phi0/1000) = W(0) (1 + 2e-3) to first order
        const double W0 = bohr_energy(qn, 1, k);
        const double W = energy_exact(qn, 1, k.flux_quantum / 1000.0, k);
        CHECK(rel(W, W0 * (1.0 + 2e-3)) < 1e-5);
    }
    SUBCASE("denominator underflow") {
        CHECK_THROWS_AS(energy_exact(qn, 1, k.flux_quantum, k), std::domain_error);
        CHECK_THROWS_AS(energy_exact(qn, 1, 2.0 * k.flux_quantum, k), std::domain_error);
    }
    SUBCASE("non-finite flux") {
        CHECK_THROWS_AS(energy_exact(qn, 1, std::nan(""), k), std::invalid_argument);
    }
}

TEST_CASE("linear shift") {
    SUBCASE("one flux quantum through n=1 gives the Hartree energy") {
        const QuantumNumbers qn = QuantumNumbers::circular(1);
        const EnergyShift s = energy_shift_linear(qn, 1, k.flux_quantum, k);
        CHECK(rel(s.value, 2.0 * k.rydberg_energy()) < 1e-12);
        CHECK(rel(s.in(EnergyUnit::electron_volt, k), 27.211) < 1e-4);
        CHECK_FALSE(s.warning.empty()); // far outside the linear regime
    }
    SUBCASE("zero flux, zero shift") {
        CHECK(energy_shift_linear(QuantumNumbers::circular(2), 1, 0.0, k).value == 0.0);
    }
    SUBCASE("exactly linear in flux, scales as Z^2/n^3") {
        const double base =
            energy_shift_linear(QuantumNumbers::circular(1), 1, 1e-20, k).value;
        CHECK(energy_shift_linear(QuantumNumbers::circular(1), 1, 3e-20, k).value ==
              doctest::Approx(3.0 * base).epsilon(1e-15));
        CHECK(energy_shift_linear(QuantumNumbers::circular(2), 1, 1e-20, k).value ==
              doctest::Approx(base / 8.0).epsilon(1e-14));
        CHECK(energy_shift_linear(QuantumNumbers::circular(1), 3, 1e-20, k).value ==
              doctest::Approx(9.0 * base).epsilon(1e-14));
    }
    SUBCASE("no warning in the linear regime") {
        CHECK(energy_shift_linear(QuantumNumbers::circular(1), 1, 1e-4 * k.flux_quantum, k)
                  .warning.empty());
    }
}

TEST_CASE("linear shift is the first-order term of the exact energy") {
    // The exact level counts flux along the angular momentum, the linear
    // shift along the current normal; matching orientations means flipping
    // the sign of one argument. The remainder is then second order.
    for (const auto& [n, Z] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {4, 1}}) {
        const QuantumNumbers qn = QuantumNumbers::circular(n);
        const double W0 = bohr_energy(qn, Z, k);
        double fitted_C = 0.0;
        for (double frac : {1e-4, 3e-5, 1e-5, 3e-6, 1e-6}) {
            const double flux = frac * k.flux_quantum;
            const double shift = energy_shift_linear(qn, Z, flux, k).value;
            const double residual = std::abs(energy_exact(qn, Z, -flux, k) - (W0 + shift));
            const double C = residual / (flux * flux);
            if (fitted_C == 0.0) fitted_C = C;
            // the quadratic coefficient is stable across the flux range
            CHECK(rel(C, fitted_C) < 0.01);
        }
    }
}

TEST_CASE("Eq-style coefficient identity: the two closed forms agree") {
    for (int n : {1, 2, 5}) {
        for (int Z : {1, 2, 3}) {
            const double form_a =
                k.m_e * Z * Z * std::pow(k.e, 5) /
                (4.0 * k.eps0 * k.eps0 * std::pow(static_cast<double>(n), 3) * std::pow(k.h, 3));
            const double form_b =
                2.0 * k.R_inf * k.c * k.e * Z * Z / std::pow(static_cast<double>(n), 3);
            CHECK(rel(form_a, form_b) < 1e-9);
        }
    }
}

TEST_CASE("finite-difference cross-check of the shift magnitude") {
    // 1 T through the Bohr-area at n=2: the linear shift must match the
    // finite difference of the exact energy (opposite orientation).
    const QuantumNumbers qn = QuantumNumbers::circular(2);
    const double flux = 8.797e-21;
    const double shift = energy_shift_linear(qn, 1, flux, k).value;
    const double fd = energy_exact(qn, 1, -flux, k) - energy_exact(qn, 1, 0.0, k);
    CHECK(rel(shift, fd) < 1e-5);
}
