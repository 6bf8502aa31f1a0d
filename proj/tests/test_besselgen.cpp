#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "bkconv/besselgen.hpp"
#include "oracles.hpp"

using namespace bkconv;

namespace {

double rel(Complex got, Complex want) {
    double s = std::max(std::abs(got), std::abs(want));
    return s == 0.0 ? 0.0 : std::abs(got - want) / s;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

TEST_CASE("phi_series: sqrt(z) sin sqrt(z) coefficients (p=1/2, b=1, c=1)") {
    auto phi = phi_series(BesselParams(0.5, 1.0, 1.0), 16);
    for (int n = 0; n <= 8; ++n) {
        double want = (n % 2 ? -1.0 : 1.0) / factorial(2 * n + 1);
        CHECK(rel(phi.at(std::size_t(n) + 1), want) < 1e-13);
    }
}

TEST_CASE("phi_series: z cos sqrt(z) coefficients (p=-1/2, b=1, c=1)") {
    auto phi = phi_series(BesselParams(-0.5, 1.0, 1.0), 16);
    for (int n = 0; n <= 8; ++n) {
        double want = (n % 2 ? -1.0 : 1.0) / factorial(2 * n);
        CHECK(rel(phi.at(std::size_t(n) + 1), want) < 1e-13);
    }
}

TEST_CASE("phi_series: c = 0 collapses to z") {
    auto phi = phi_series(BesselParams(1.0, 1.0, 0.0), 12);
    CHECK(phi.at(1) == Complex(1.0));
    for (int n = 2; n <= 12; ++n) CHECK(phi.at(std::size_t(n)) == Complex(0.0));
}

TEST_CASE("phi_series: coefficient ratio holds exactly as computed") {
    Complex kappa(1.7, 0.4), c(2.0, -1.0);
    auto phi = phi_series_kc(kappa, c, 24);
    for (int n = 0; n + 2 <= 24; ++n) {
        Complex step = phi.at(std::size_t(n) + 1) *
                       (-c / (4.0 * (kappa + double(n)) * double(n + 1)));
        CHECK(phi.at(std::size_t(n) + 2) == step); // bitwise
    }
}

TEST_CASE("phi_series: pole in kappa raises") {
    // the params constructor itself refuses kappa = 0
    CHECK_THROWS_AS(BesselParams(-1.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(phi_series_kc(-3.0, 1.0, 8), DomainError);
}

TEST_CASE("phi coefficients match the Gamma normalization of Eqs. 4-6 families") {
    // (b,c) in {(1,1), (1,-1), (2,1)}: a_{n+1} = (-c)^n Gamma(kappa) / (4^n Gamma(kappa+n) n!)
    for (auto [b, c] : {std::pair{1.0, 1.0}, {1.0, -1.0}, {2.0, 1.0}}) {
        BesselParams bp(0.75, b, c);
        auto phi = phi_series(bp, 12);
        Complex kappa = bp.kappa();
        for (int n = 0; n <= 11; ++n) {
            Complex want = std::pow(Complex(-c), n) * gamma(kappa) /
                           (std::pow(4.0, n) * gamma(kappa + double(n)) * factorial(n));
            CHECK(rel(phi.at(std::size_t(n) + 1), want) < 1e-13);
        }
    }
}

TEST_CASE("omega_eval: J_0 Taylor expansion at small z") {
    BesselParams bp(0.0, 1.0, 1.0);
    for (Complex z : {Complex(0.1), Complex(0.05, 0.02)}) {
        Complex want = 1.0 - z * z / 4.0 + std::pow(z, 4) / 64.0 - std::pow(z, 6) / 2304.0;
        CHECK(rel(omega_eval(bp, z, 16), want) < 1e-12);
    }
    CHECK(rel(omega_eval(bp, 0.0, 16), 1.0) < 1e-14);
}

TEST_CASE("omega_eval/phi consistency (Eq. 7 transform)") {
    for (auto [p, b, c] : {std::tuple{0.5, 1.0, 1.0}, {-0.5, 1.0, 1.0}, {0.3, 2.0, -1.0}}) {
        BesselParams bp(p, b, c);
        auto phi = phi_series(bp, 64);
        Complex kappa = bp.kappa();
        for (Complex z : {Complex(0.4, 0.2), Complex(-0.3, 0.5), Complex(0.7, -0.1)}) {
            Complex w = std::sqrt(z);
            Complex lhs = std::pow(2.0, bp.p) * gamma(kappa) *
                          std::pow(z, 1.0 - bp.p / 2.0) * omega_eval(bp, w, 40);
            CHECK(rel(lhs, evaluate(phi, z)) < 1e-10);
        }
    }
}

TEST_CASE("closed forms match phi series on the disk") {
    struct Row {
        ClosedForm cf;
        Complex kappa, c;
    };
    const Row rows[] = {
        {ClosedForm::sin_half, 1.5, 1.0},  {ClosedForm::cos_negh, 0.5, 1.0},
        {ClosedForm::sin_3h, 2.5, 1.0},    {ClosedForm::sinh_half, 1.5, -1.0},
        {ClosedForm::cosh_negh, 0.5, -1.0}, {ClosedForm::sinh_3h, 2.5, -1.0},
    };
    for (const Row& row : rows) {
        auto phi = phi_series_kc(row.kappa, row.c, 64);
        for (int i = 0; i < 24; ++i) {
            double th = 6.283185307179586 * i / 24.0;
            for (double r : {0.2, 0.7, 0.99}) {
                Complex z = std::polar(r, th);
                CHECK(rel(closed_form_eval(row.cf, z), evaluate(phi, z)) < 1e-10);
            }
        }
    }
}

TEST_CASE("closed forms: removable singularity and simple values") {
    // class-A normalization: value ~ z near 0
    Complex tiny(1e-6, 2e-6);
    Complex v = closed_form_eval(ClosedForm::sin_3h, tiny);
    // value is z + a2 z^2 + O(z^3) with a2 = -1/10, so the deviation from z
    // is about |z|^2 / 10
    CHECK(std::abs(v - tiny) < 0.2 * std::abs(tiny) * std::abs(tiny));
    CHECK(std::abs(v - tiny) > 0.01 * std::abs(tiny) * std::abs(tiny));
    CHECK(std::abs(closed_form_eval(ClosedForm::sin_3h, 0.0)) == 0.0);
    CHECK(rel(closed_form_eval(ClosedForm::sin_half, 1.0), std::sin(1.0)) < 1e-14);
}

TEST_CASE("hypergeometric_series: exp and geometric") {
    auto e = hypergeometric_series(HypergeometricParams({}, {}), 12);
    for (int n = 0; n <= 12; ++n) CHECK(rel(e.at(std::size_t(n)), 1.0 / factorial(n)) < 1e-14);
    auto geo = hypergeometric_series(HypergeometricParams({1.0}, {}), 12);
    for (int n = 0; n <= 12; ++n) CHECK(rel(geo.at(std::size_t(n)), 1.0) < 1e-14);
}

TEST_CASE("hypergeometric_series: parameter validation") {
    CHECK_THROWS_AS(HypergeometricParams({1.0, 2.0}, {}), DomainError);     // q > s+1
    CHECK_THROWS_AS(HypergeometricParams({}, {Complex(-2.0)}), DomainError); // beta pole
}

TEST_CASE("z 0F1(kappa; -c z/4) reproduces phi_series coefficientwise") {
    for (auto [kappa, c] : {std::pair{Complex(1.5), Complex(1.0)},
                            {Complex(0.5, 0.8), Complex(-2.0, 0.3)}}) {
        auto via_hyp = phi_via_hypergeometric(kappa, c, 32);
        auto phi = phi_series_kc(kappa, c, 32);
        for (std::size_t n = 0; n < phi.coeffs.size(); ++n) {
            double s = std::max({std::abs(phi.coeffs[n]), std::abs(via_hyp.at(n)), 1e-300});
            CHECK(std::abs(phi.coeffs[n] - via_hyp.at(n)) / s < 1e-13);
        }
    }
}

TEST_CASE("ode_residual: canonical and degenerate cases") {
    CHECK(ode_residual(BesselParams(0.0, 1.0, 1.0), 30) < 1e-12);
    CHECK(ode_residual(BesselParams(2.0, 3.0, 0.0), 30) == 0.0);
}

TEST_CASE("ode_residual: random parameters off poles") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int done = 0;
    while (done < 25) {
        double p = u(rng), b = u(rng), c = u(rng);
        Complex kappa = Complex(p) + (Complex(b) + 1.0) / 2.0;
        if (near_nonpositive_integer(kappa, 0.05)) continue;
        CHECK(ode_residual(BesselParams(p, b, c), 30) < 1e-11);
        ++done;
    }
}

TEST_CASE("ode_residual: 5x5x5 grid with Re(kappa) in [0.5, 5]") {
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) {
                double b = 0.5 + 0.5 * j;
                double c = -2.0 + k;
                // pick p so kappa = p + (b+1)/2 walks [0.5, 5]
                double kappa = 0.5 + 4.5 * i / 4.0;
                double p = kappa - (b + 1.0) / 2.0;
                CHECK(ode_residual(BesselParams(p, b, c), 30) < 1e-11);
            }
}
