#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fluxatom/flux.hpp"

using namespace fluxatom;

namespace {
const PhysicalConstants k = load_constants();
constexpr double kProtonMoment = 1.41060679736e-26; // J/T
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("uniform field flux") {
    const OrbitGeometry bohr = orbit_geometry(QuantumNumbers::circular(1), 1, k);

    SUBCASE("field in the orbital plane gives zero") {
        CHECK(uniform_field_flux(bohr, 1.0, std::numbers::pi / 2.0).total ==
              doctest::Approx(0.0).epsilon(1e-16));
    }
    SUBCASE("aligned 1 T through the Bohr orbit") {
        const FluxValue fv = uniform_field_flux(bohr, 1.0, 0.0);
        CHECK(rel(fv.total, 8.797e-21) < 1e-3);
        CHECK(rel(fv.total / k.flux_quantum, 2.13e-6) < 1e-2);
        CHECK(fv.phi_component == fv.total);
        CHECK(fv.r_component == 0.0);
    }
    SUBCASE("anti-aligned flips the sign") {
        const FluxValue fv0 = uniform_field_flux(bohr, 2.0, 0.0);
        const FluxValue fv = uniform_field_flux(bohr, 2.0, std::numbers::pi);
        CHECK(fv.total == doctest::Approx(-fv0.total).epsilon(1e-15));
    }
    SUBCASE("cos(alpha) factorization is exact") {
        for (double alpha : {0.1, 0.7, 1.3, 2.9}) {
            const double base = uniform_field_flux(bohr, 3.0, 0.0).total;
            CHECK(uniform_field_flux(bohr, 3.0, alpha).total == base * std::cos(alpha));
        }
    }
    SUBCASE("linear in B") {
        const double one = uniform_field_flux(bohr, 1.0, 0.3).total;
        CHECK(uniform_field_flux(bohr, 7.5, 0.3).total ==
              doctest::Approx(7.5 * one).epsilon(1e-15));
    }
}

TEST_CASE("dipole at the focus, closed form") {
    SUBCASE("zero moment") {
        const OrbitGeometry circle = OrbitGeometry::from_semi_axes(k.a0, k.a0);
        CHECK(dipole_focus_flux(circle, 0.0, k).total == 0.0);
    }
    SUBCASE("circle of radius r") {
        const double r = 3.0 * k.a0;
        const OrbitGeometry circle = OrbitGeometry::from_semi_axes(r, r);
        const FluxValue fv = dipole_focus_flux(circle, kProtonMoment, k);
        CHECK(rel(fv.total, -k.mu0 * kProtonMoment / (2.0 * r)) < 1e-15);
    }
    SUBCASE("n=2 n_phi=1 orbit has p = a0") {
        const QuantumNumbers qn = QuantumNumbers::sommerfeld(HalfInt(1), HalfInt(1));
        const OrbitGeometry geom = orbit_geometry(qn, 1, k);
        CHECK(rel(geom.p, k.a0) < 1e-15);
        const FluxValue fv = dipole_focus_flux(geom, kProtonMoment, k);
        CHECK(rel(fv.total, -k.mu0 * kProtonMoment / (2.0 * k.a0)) < 1e-15);
        CHECK(rel(fv.total, dipole_flux_oracle(geom, kProtonMoment, k)) < 1e-10);
    }
    SUBCASE("interior and exterior flux sum to zero") {
        const OrbitGeometry geom = OrbitGeometry::from_semi_axes(5.0 * k.a0, 2.0 * k.a0);
        const double interior = dipole_focus_flux(geom, kProtonMoment, k).total;
        const double exterior = dipole_focus_flux_exterior(geom, kProtonMoment, k);
        CHECK(interior + exterior == 0.0);
    }
}

TEST_CASE("dipole flux oracle agrees with the closed form") {
    SUBCASE("eccentricity grid") {
        for (double eps : {0.0, 0.3, 0.6, 0.9, 0.95}) {
            const double a = 4.0 * k.a0;
            const OrbitGeometry geom =
                OrbitGeometry::from_semi_axes(a, a * std::sqrt(1.0 - eps * eps));
            const double closed = dipole_focus_flux(geom, kProtonMoment, k).total;
            const double oracle = dipole_flux_oracle(geom, kProtonMoment, k, 1e-10);
            CHECK(rel(closed, oracle) < 1e-6);
        }
    }
    SUBCASE("property: random geometries and moments") {
        std::mt19937 rng(7u);
        std::uniform_real_distribution<double> log_a(std::log(0.05), std::log(500.0));
        std::uniform_real_distribution<double> ecc(0.0, 0.97);
        std::uniform_real_distribution<double> moment(0.01, 100.0);
        for (int i = 0; i < 200; ++i) {
            const double a = k.a0 * std::exp(log_a(rng));
            const double eps = ecc(rng);
            const OrbitGeometry geom =
                OrbitGeometry::from_semi_axes(a, a * std::sqrt(1.0 - eps * eps));
            const double mu = moment(rng) * k.mu_K;
            const double closed = dipole_focus_flux(geom, mu, k).total;
            CHECK(rel(closed, dipole_flux_oracle(geom, mu, k, 1e-10)) < 1e-6);
        }
    }
    SUBCASE("high eccentricity") {
        const double a = 10.0 * k.a0;
        const double eps = 0.9;
        const OrbitGeometry geom =
            OrbitGeometry::from_semi_axes(a, a * std::sqrt(1.0 - eps * eps));
        CHECK(rel(dipole_focus_flux(geom, kProtonMoment, k).total,
                  dipole_flux_oracle(geom, kProtonMoment, k, 1e-9)) < 1e-6);
    }
    SUBCASE("zero moment short-circuits") {
        const OrbitGeometry geom = OrbitGeometry::from_semi_axes(k.a0, k.a0);
        CHECK(dipole_flux_oracle(geom, 0.0, k) == 0.0);
    }
}

TEST_CASE("2D cubature slow check") {
    const double a = 2.0 * k.a0;
    const double eps = 0.5;
    const OrbitGeometry geom = OrbitGeometry::from_semi_axes(a, a * std::sqrt(1.0 - eps * eps));
    const double closed = dipole_focus_flux(geom, kProtonMoment, k).total;
    const double cubature = dipole_flux_cubature(geom, kProtonMoment, k, 1e-5);
    CHECK(rel(closed, cubature) < 1e-4);
}

TEST_CASE("tilted dipole") {
    const OrbitGeometry geom = OrbitGeometry::from_semi_axes(4.0 * k.a0, 2.0 * k.a0);

    SUBCASE("in-plane dipole gives zero") {
        CHECK(tilted_dipole_flux(geom, kProtonMoment, std::numbers::pi / 2.0, k).total ==
              doctest::Approx(0.0).epsilon(1e-16));
    }
    SUBCASE("aligned dipole reproduces the full focus flux") {
        CHECK(tilted_dipole_flux(geom, kProtonMoment, 0.0, k).total ==
              dipole_focus_flux(geom, kProtonMoment, k).total);
    }
    SUBCASE("ground-state preset magnitude (n_phi = 1/2, cos beta = 2/3)") {
        const QuantumNumbers ground =
            QuantumNumbers::sommerfeld(HalfInt::half(), HalfInt::half());
        const OrbitGeometry g1s = orbit_geometry(ground, 1, k);
        const double beta = std::acos(2.0 / 3.0);
        const FluxValue fv = tilted_dipole_flux(g1s, kProtonMoment, beta, k);
        const double expected = 0.5 * k.mu0 * kProtonMoment / (0.25 * k.a0) * (2.0 / 3.0);
        CHECK(rel(std::abs(fv.total), expected) < 1e-12);
        CHECK(rel(std::abs(dipole_flux_oracle(g1s, kProtonMoment * 2.0 / 3.0, k)), expected) <
              1e-8);
    }
}

TEST_CASE("flux additivity and the spin split") {
    const OrbitGeometry geom = OrbitGeometry::from_semi_axes(4.0 * k.a0, 2.0 * k.a0);
    const FluxValue a = uniform_field_flux(geom, 1.0, 0.2);
    const FluxValue b = dipole_focus_flux(geom, kProtonMoment, k);
    const FluxValue sum = a + b;
    CHECK(sum.total == doctest::Approx(a.total + b.total).epsilon(1e-15));
    CHECK(sum.source == FluxSource::composite);
    CHECK(sum.total == doctest::Approx(sum.phi_component + sum.r_component).epsilon(1e-15));

    const FluxValue spin = FluxValue::spin_split(1.5e-20, FluxSource::uniform);
    CHECK(spin.total == 3.0e-20);
    CHECK(spin.phi_component == spin.r_component);
}
