#ifndef BKCONV_BESSELGEN_HPP
#define BKCONV_BESSELGEN_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "bkconv/complexfn.hpp"
#include "bkconv/errors.hpp"
#include "bkconv/series.hpp"

namespace bkconv {

/// Parameters (p, b, c) of the generalized Bessel family, with the derived
/// kappa = p + (b+1)/2 that indexes the normalized series.
struct BesselParams {
    Complex p;
    Complex b;
    Complex c;

    BesselParams(Complex p_, Complex b_, Complex c_) : p(p_), b(b_), c(c_) {
        if (!is_finite(p) || !is_finite(b) || !is_finite(c))
            throw DomainError("BesselParams: non-finite parameter");
        if (near_nonpositive_integer(kappa()))
            throw DomainError("BesselParams: kappa is a nonpositive integer");
    }

    Complex kappa() const { return p + (b + 1.0) / 2.0; }

    // Parameters with b = c = 1 pinned so that kappa takes the given value.
    static BesselParams from_kappa(Complex kappa, Complex c) {
        return BesselParams(kappa - 1.0, 1.0, c);
    }
};

// Normalized series: a_1 = 1, a_{n+1} = (-c)^n / (4^n (kappa)_n n!),
// built by the one-step coefficient recurrence so the ratio
// a_{n+2}/a_{n+1} = -c / (4 (kappa+n) (n+1)) holds exactly as computed.
inline TruncatedSeries phi_series_kc(Complex kappa, Complex c, int N = kDefaultOrder) {
    if (near_nonpositive_integer(kappa))
        throw DomainError("phi_series: kappa is a nonpositive integer");
    std::vector<Complex> coeffs(std::size_t(N) + 1, 0.0);
    if (N >= 1) coeffs[1] = 1.0;
    Complex a = 1.0;
    for (int n = 0; n + 2 <= N; ++n) {
        a *= -c / (4.0 * (kappa + double(n)) * double(n + 1));
        coeffs[std::size_t(n) + 2] = a;
    }
    return TruncatedSeries(std::move(coeffs));
}

inline TruncatedSeries phi_series(const BesselParams& params, int N = kDefaultOrder) {
    return phi_series_kc(params.kappa(), params.c, N);
}

// N-term partial sum of the defining series
//   omega(z) = sum_n (-c)^n / (n! Gamma(p+n+(b+1)/2)) (z/2)^{2n+p},
// with (z/2)^{2n+p} on the principal branch.
inline Complex omega_eval(const BesselParams& params, Complex z, int N = kDefaultOrder) {
    Complex kappa = params.kappa();
    if (z == Complex(0.0)) {
        if (params.p == Complex(0.0)) return 1.0 / gamma(kappa);
        if (params.p.real() > 0.0) return 0.0;
        throw DomainError("omega_eval: z = 0 with Re(p) < 0");
    }
    Complex half = z / 2.0;
    Complex log_half = std::log(half);
    Complex acc = 0.0;
    Complex num = 1.0; // (-c)^n / n!
    for (int n = 0; n <= N; ++n) {
        Complex arg = kappa + double(n);
        acc += num / gamma(arg) * std::exp((2.0 * double(n) + params.p) * log_half);
        num *= -params.c / double(n + 1);
    }
    return acc;
}

/// The six closed forms the half-integer orders reduce to (arguments of trig and
/// hyperbolic functions are principal square roots; every expression is even
/// in sqrt(z), so the branch does not matter).
enum class ClosedForm {
    sin_half,  // sqrt(z) sin(sqrt(z)):          phi for kappa=3/2, c=1
    cos_negh,  // z cos(sqrt(z)):                phi for kappa=1/2, c=1
    sin_3h,    // 3 sin(sqrt z)/sqrt z - 3 cos(sqrt z): kappa=5/2, c=1
    sinh_half, // sqrt(z) sinh(sqrt(z)):         kappa=3/2, c=-1
    cosh_negh, // z cosh(sqrt(z)):               kappa=1/2, c=-1
    sinh_3h,   // 3 cosh(sqrt z) - 3 sinh(sqrt z)/sqrt z: kappa=5/2, c=-1
};

inline Complex closed_form_kappa(ClosedForm cf) {
    switch (cf) {
        case ClosedForm::sin_half:
        case ClosedForm::sinh_half: return 1.5;
        case ClosedForm::cos_negh:
        case ClosedForm::cosh_negh: return 0.5;
        case ClosedForm::sin_3h:
        case ClosedForm::sinh_3h: return 2.5;
    }
    return 0.0;
}

inline Complex closed_form_c(ClosedForm cf) {
    switch (cf) {
        case ClosedForm::sin_half:
        case ClosedForm::cos_negh:
        case ClosedForm::sin_3h: return 1.0;
        default: return -1.0;
    }
}

inline Complex closed_form_eval(ClosedForm cf, Complex z) {
    if (std::abs(z) < 1e-4) {
        // removable singularities: 3-term Taylor of the class-A series,
        // a = phi coefficients at the matching (kappa, c)
        Complex c = closed_form_c(cf);
        Complex kappa = closed_form_kappa(cf);
        Complex a2 = -c / (4.0 * kappa);
        Complex a3 = a2 * (-c) / (8.0 * (kappa + 1.0));
        return z * (1.0 + z * (a2 + z * a3));
    }
    Complex w = std::sqrt(z);
    switch (cf) {
        case ClosedForm::sin_half: return w * std::sin(w);
        case ClosedForm::cos_negh: return z * std::cos(w);
        case ClosedForm::sin_3h: return 3.0 * std::sin(w) / w - 3.0 * std::cos(w);
        case ClosedForm::sinh_half: return w * std::sinh(w);
        case ClosedForm::cosh_negh: return z * std::cosh(w);
        case ClosedForm::sinh_3h: return 3.0 * std::cosh(w) - 3.0 * std::sinh(w) / w;
    }
    throw DomainError("closed_form_eval: unknown case");
}

/// Upper and lower parameter lists of a generalized hypergeometric series
/// qFs(alpha_1..alpha_q; beta_1..beta_s; z).
struct HypergeometricParams {
    std::vector<Complex> alphas;
    std::vector<Complex> betas;

    HypergeometricParams(std::vector<Complex> a, std::vector<Complex> b)
        : alphas(std::move(a)), betas(std::move(b)) {
        if (alphas.size() > betas.size() + 1)
            throw DomainError("HypergeometricParams: need q <= s+1");
        for (const Complex& beta : betas)
            if (near_nonpositive_integer(beta))
                throw DomainError("HypergeometricParams: beta is a nonpositive integer");
    }
};

// Coefficient of z^n is prod(alpha_j)_n / prod(beta_j)_n / n!.
inline TruncatedSeries hypergeometric_series(const HypergeometricParams& params,
                                             int N = kDefaultOrder) {
    std::vector<Complex> coeffs(std::size_t(N) + 1);
    Complex term = 1.0;
    coeffs[0] = term;
    for (int n = 0; n < N; ++n) {
        Complex ratio = 1.0;
        for (const Complex& a : params.alphas) ratio *= a + double(n);
        for (const Complex& b : params.betas) ratio /= b + double(n);
        term *= ratio / double(n + 1);
        coeffs[std::size_t(n) + 1] = term;
    }
    return TruncatedSeries(std::move(coeffs));
}

// z * 0F1(kappa; -c z / 4): the class-A convolver equal to phi_{kappa,c}.
inline TruncatedSeries phi_via_hypergeometric(Complex kappa, Complex c,
                                              int N = kDefaultOrder) {
    // computed to order N so the shift by z keeps all N+1 coefficients
    HypergeometricParams hp({}, {kappa});
    TruncatedSeries h = hypergeometric_series(hp, N);
    return multiply_by_z(scale_argument(h, -c / 4.0));
}

// Substitutes the Gamma-form series coefficients into the coefficient
// recurrence of the defining ODE,
//   [(2n+p)(2n+p-1) + b(2n+p) - p^2 + (1-b)p] d_n + 4 c d_{n-1} = 0
// (d_n carrying the 4^{-n} factor), and returns the maximum relative
// residual over 1 <= n <= N-1.
inline double ode_residual(const BesselParams& params, int N = 30) {
    if (params.c == Complex(0.0)) return 0.0;
    Complex kappa = params.kappa();
    std::vector<Complex> d(std::size_t(N) + 1);
    Complex num = 1.0; // (-c)^n / (4^n n!)
    for (int n = 0; n <= N; ++n) {
        d[std::size_t(n)] = num / gamma(kappa + double(n));
        num *= -params.c / (4.0 * double(n + 1));
    }
    double worst = 0.0;
    for (int n = 1; n <= N - 1; ++n) {
        Complex tn = 2.0 * double(n) + params.p;
        Complex A = tn * (tn - 1.0) + params.b * tn - params.p * params.p +
                    (1.0 - params.b) * params.p;
        Complex lhs = A * d[std::size_t(n)];
        Complex rhs = params.c * d[std::size_t(n) - 1];
        double scale = std::max(std::abs(lhs), std::abs(rhs));
        if (scale < 1e-300) continue;
        worst = std::max(worst, std::abs(lhs + rhs) / scale);
    }
    return worst;
}

} // namespace bkconv

#endif
