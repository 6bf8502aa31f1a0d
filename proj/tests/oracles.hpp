// Test-only oracles, independent of the library's evaluation paths.
#ifndef BKCONV_TESTS_ORACLES_HPP
#define BKCONV_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracles {

using cld = std::complex<long double>;

inline constexpr long double kEulerGamma = 0.5772156649015328606065120900824024L;
inline constexpr long double kPi = 3.141592653589793238462643383279503L;

namespace detail {

// Hurwitz zeta(j, a) for integer j >= 2 and large a, by Euler-Maclaurin.
inline long double hurwitz_zeta_int(int j, long double a) {
    long double ainv = 1.0L / a;
    long double apow = std::pow(ainv, (long double)(j - 1)); // a^{1-j}
    long double s = apow / (long double)(j - 1) + 0.5L * apow * ainv;
    // Bernoulli correction terms B2, B4, B6, B8
    const long double bern[4] = {1.0L / 6.0L, -1.0L / 30.0L, 1.0L / 42.0L, -1.0L / 30.0L};
    long double rising = (long double)j; // j (j+1) ... (j+2m-2), 2m-1 factors
    long double fact = 1.0L;             // (2m)!
    long double ap = apow;               // a^{-j-2m+1}, starting from a^{1-j}
    for (int m = 1; m <= 4; ++m) {
        fact *= (long double)(2 * m - 1) * (long double)(2 * m);
        ap *= ainv * ainv;
        s += bern[m - 1] / fact * rising * ap;
        rising *= (long double)(j + 2 * m - 1) * (long double)(j + 2 * m);
    }
    return s;
}

// log Gamma for Re(z) >= 0.5: Weierstrass product truncated at 200 factors
// plus the analytic tail sum_{n>200}[log(1+z/n) - z/n] expanded in powers
// of z with Hurwitz-zeta coefficients.
inline cld log_gamma_halfplane(cld z) {
    const int N = 200;
    cld s = -kEulerGamma * z - std::log(z);
    for (int n = 1; n <= N; ++n) {
        cld r = z / (long double)n;
        s -= std::log(1.0L + r) - r;
    }
    // tail: sum_{j>=2} (-1)^{j+1} z^j / j * zeta(j, N+1), sign flipped for -tail
    cld zp = z * z;
    long double sign = -1.0L; // (-1)^{j+1} at j=2
    for (int j = 2; j <= 160; ++j) {
        long double zeta = hurwitz_zeta_int(j, (long double)(N + 1));
        cld term = sign * zp / (long double)j * zeta;
        s -= term;
        if (std::abs(term) < 1e-36L * (1.0L + std::abs(s))) break;
        zp *= z;
        sign = -sign;
    }
    return s;
}

} // namespace detail

// Euler gamma on the complex plane at extended precision; reflection for
// Re(z) < 0.5. Not meaningful at nonpositive integers.
inline cld gamma(cld z) {
    if (z.real() < 0.5L) {
        cld s = std::sin(kPi * z);
        return kPi / (s * std::exp(detail::log_gamma_halfplane(1.0L - z)));
    }
    return std::exp(detail::log_gamma_halfplane(z));
}

inline cld pochhammer(cld lambda, std::size_t n) {
    cld acc = 1.0L;
    for (std::size_t j = 0; j < n; ++j) acc *= lambda + (long double)j;
    return acc;
}

// phi_{kappa,c} coefficients a_0..a_N at extended precision.
inline std::vector<cld> phi_coeffs(cld kappa, cld c, int N) {
    std::vector<cld> a(std::size_t(N) + 1, cld(0.0L));
    if (N >= 1) a[1] = 1.0L;
    for (int n = 0; n + 2 <= N; ++n)
        a[std::size_t(n) + 2] =
            a[std::size_t(n) + 1] * (-c) / (4.0L * (kappa + (long double)n) * (long double)(n + 1));
    return a;
}

inline std::vector<cld> widen(const std::vector<std::complex<double>>& v) {
    std::vector<cld> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = cld(v[i].real(), v[i].imag());
    return out;
}

inline std::vector<cld> cauchy_product(const std::vector<cld>& a, const std::vector<cld>& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::vector<cld> c(n, cld(0.0L));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline std::vector<cld> hadamard_product(const std::vector<cld>& a, const std::vector<cld>& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::vector<cld> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[i] * b[i];
    return c;
}

inline std::vector<cld> derivative(const std::vector<cld>& a) {
    if (a.size() <= 1) return {cld(0.0L)};
    std::vector<cld> c(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) c[i] = (long double)(i + 1) * a[i + 1];
    return c;
}

inline cld evaluate(const std::vector<cld>& a, cld z) {
    cld acc = 0.0L;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
    return acc;
}

inline long double rel_err(cld got, cld want) {
    long double scale = std::max(std::abs(got), std::abs(want));
    if (scale == 0.0L) return 0.0L;
    return std::abs(got - want) / scale;
}

} // namespace oracles

#endif
