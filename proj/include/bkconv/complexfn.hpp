#ifndef BKCONV_COMPLEXFN_HPP
#define BKCONV_COMPLEXFN_HPP

#include <cmath>
#include <complex>
#include <cstddef>

#include "bkconv/errors.hpp"

namespace bkconv {

using Complex = std::complex<double>;

inline constexpr double kPoleTol = 1e-12;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// True when z lies within tol of some nonpositive integer.
inline bool near_nonpositive_integer(Complex z, double tol = kPoleTol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = z.real();
    if (r > tol) return false;
    return std::abs(r - std::round(r)) <= tol;
}

namespace detail {

// Lanczos rational approximation, g = 7, 9 coefficients.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Valid for Re(z) >= 0.5.
inline Complex gamma_lanczos(Complex z) {
    z -= 1.0;
    Complex acc = kLanczosCoeff[0];
    for (int i = 1; i < 9; ++i) acc += kLanczosCoeff[i] / (z + double(i));
    Complex t = z + kLanczosG + 0.5;
    const double sqrt_two_pi = 2.5066282746310005024;
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

} // namespace detail

// Euler gamma function on the complex plane; reflection for Re(z) < 0.5.
inline Complex gamma(Complex z) {
    if (!is_finite(z)) throw DomainError("gamma: non-finite argument");
    if (near_nonpositive_integer(z))
        throw PoleError("gamma: argument within 1e-12 of a nonpositive integer");
    if (z.real() < 0.5) {
        const double pi = 3.14159265358979323846;
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return pi / (std::sin(pi * z) * detail::gamma_lanczos(1.0 - z));
    }
    return detail::gamma_lanczos(z);
}

// Rising factorial lambda (lambda+1) ... (lambda+n-1), by direct product.
// (anything)_0 = 1, including lambda = 0.
inline Complex pochhammer(Complex lambda, std::size_t n) {
    Complex acc = 1.0;
    for (std::size_t j = 0; j < n; ++j) acc *= lambda + double(j);
    return acc;
}

} // namespace bkconv

#endif
