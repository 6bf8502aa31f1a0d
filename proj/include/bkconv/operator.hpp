#ifndef BKCONV_OPERATOR_HPP
#define BKCONV_OPERATOR_HPP

#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

#include "bkconv/besselgen.hpp"
#include "bkconv/complexfn.hpp"
#include "bkconv/errors.hpp"
#include "bkconv/series.hpp"

namespace bkconv {

/// Which convolution operator to apply: the general one, its three Bessel
/// special cases (b,c pinned), or the Dziok-Srivastava generalization.
struct OperatorSpec {
    struct General { BesselParams params; };
    struct BesselJ { Complex p; };     // (b,c) = (1, 1)
    struct ModifiedI { Complex p; };   // (b,c) = (1,-1)
    struct SphericalS { Complex p; };  // (b,c) = (2, 1)
    struct DziokSrivastava { HypergeometricParams params; };

    std::variant<General, BesselJ, ModifiedI, SphericalS, DziokSrivastava> kind;
};

// Convolution with phi_{kappa,c}: coefficient n+1 of f is multiplied by
// (-c)^n / (4^n (kappa)_n n!).
inline TruncatedSeries apply_bkc(Complex kappa, Complex c, const TruncatedSeries& f) {
    if (!f.is_class_a())
        throw NormalizationError("apply_bkc: f must be class A (a_0 = 0, a_1 = 1)");
    return hadamard_product(phi_series_kc(kappa, c, f.order()), f);
}

// Raw-coefficient variant without the class-A gate; this is the form in
// which the operator is linear in f.
inline TruncatedSeries apply_bkc_raw(Complex kappa, Complex c, const TruncatedSeries& f) {
    TruncatedSeries phi = phi_series_kc(kappa, c, f.order());
    std::size_t n = std::min(phi.coeffs.size(), f.coeffs.size());
    std::vector<Complex> out(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) out[i] = phi.coeffs[i] * f.coeffs[i];
    if (!out.empty() && !f.coeffs.empty()) out[0] = f.coeffs[0];
    return TruncatedSeries(std::move(out));
}

inline TruncatedSeries apply(const OperatorSpec& spec, const TruncatedSeries& f) {
    if (!f.is_class_a())
        throw NormalizationError("apply: f must be class A (a_0 = 0, a_1 = 1)");
    return std::visit(
        [&](const auto& k) -> TruncatedSeries {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, OperatorSpec::General>) {
                return apply_bkc(k.params.kappa(), k.params.c, f);
            } else if constexpr (std::is_same_v<T, OperatorSpec::BesselJ>) {
                return apply_bkc(BesselParams(k.p, 1.0, 1.0).kappa(), 1.0, f);
            } else if constexpr (std::is_same_v<T, OperatorSpec::ModifiedI>) {
                return apply_bkc(BesselParams(k.p, 1.0, -1.0).kappa(), -1.0, f);
            } else if constexpr (std::is_same_v<T, OperatorSpec::SphericalS>) {
                return apply_bkc(BesselParams(k.p, 2.0, 1.0).kappa(), 1.0, f);
            } else {
                return hadamard_product(
                    multiply_by_z(hypergeometric_series(k.params, f.order() - 1)), f);
            }
        },
        spec.kind);
}

namespace detail {

inline double max_relative_coeff_residual(const TruncatedSeries& lhs,
                                          const TruncatedSeries& rhs,
                                          int drop_top = 1) {
    std::size_t n = std::min(lhs.coeffs.size(), rhs.coeffs.size());
    if (n > std::size_t(drop_top)) n -= std::size_t(drop_top);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double scale = std::max(std::abs(lhs.coeffs[i]), std::abs(rhs.coeffs[i]));
        if (scale < 1e-300) continue;
        worst = std::max(worst, std::abs(lhs.coeffs[i] - rhs.coeffs[i]) / scale);
    }
    return worst;
}

} // namespace detail

// Residual of the three-term recursion
//   z [B_{kappa+1} f]' = kappa B_kappa f - (kappa-1) B_{kappa+1} f,
// as a max relative coefficient discrepancy.
inline double recursion_residual(Complex kappa, Complex c, const TruncatedSeries& f) {
    if (near_nonpositive_integer(kappa) || near_nonpositive_integer(kappa + 1.0))
        throw DomainError("recursion_residual: kappa or kappa+1 is a nonpositive integer");
    TruncatedSeries up = apply_bkc(kappa + 1.0, c, f);
    TruncatedSeries lhs = z_times_derivative(up);
    TruncatedSeries rhs = sub(scale(apply_bkc(kappa, c, f), kappa), scale(up, kappa - 1.0));
    return detail::max_relative_coeff_residual(lhs, rhs, 0);
}

inline double recursion_residual(const BesselParams& params, const TruncatedSeries& f) {
    return recursion_residual(params.kappa(), params.c, f);
}

// B_{kappa-steps}^c f, directly from the definition with the shifted index.
inline TruncatedSeries lower_shift(const BesselParams& params, const TruncatedSeries& f,
                                   int steps) {
    if (steps != 1 && steps != 2) throw DomainError("lower_shift: steps must be 1 or 2");
    Complex shifted = params.kappa() - double(steps);
    if (near_nonpositive_integer(shifted) || shifted == Complex(0.0))
        throw DomainError("lower_shift: shifted kappa hits a pole or zero");
    return apply_bkc(shifted, params.c, f);
}

// B_kappa f rebuilt from p = B_{kappa+1} f via the derivative identity
//   B_kappa f = (z p' + (kappa-1) p) / kappa.      (kappa != 0)
inline TruncatedSeries bkc_from_derivative_combo1(Complex kappa, Complex c,
                                                  const TruncatedSeries& f) {
    if (kappa == Complex(0.0) || kappa == Complex(1.0))
        throw DomainError("derivative combo: kappa must avoid {0, 1}");
    TruncatedSeries p = apply_bkc(kappa + 1.0, c, f);
    return scale(add(z_times_derivative(p), scale(p, kappa - 1.0)), 1.0 / kappa);
}

// B_{kappa-1} f rebuilt from p = B_{kappa+1} f via
//   B_{kappa-1} f = (z^2 p'' + 2(kappa-1) z p' + (kappa-1)(kappa-2) p)
//                   / (kappa (kappa-1)).           (kappa != 0, 1, 2)
inline TruncatedSeries bkc_from_derivative_combo2(Complex kappa, Complex c,
                                                  const TruncatedSeries& f) {
    if (kappa == Complex(0.0) || kappa == Complex(1.0) || kappa == Complex(2.0))
        throw DomainError("derivative combo: kappa must avoid {0, 1, 2}");
    TruncatedSeries p = apply_bkc(kappa + 1.0, c, f);
    TruncatedSeries z2pdd = z_times_derivative(z_times_derivative(p)); // z p' + z^2 p''
    z2pdd = sub(z2pdd, z_times_derivative(p));                         // z^2 p''
    TruncatedSeries acc = add(z2pdd, scale(z_times_derivative(p), 2.0 * (kappa - 1.0)));
    acc = add(acc, scale(p, (kappa - 1.0) * (kappa - 2.0)));
    return scale(acc, 1.0 / (kappa * (kappa - 1.0)));
}

// B_kappa f / z rebuilt from P = B_{kappa+1} f / z via
//   B_kappa f / z = (z P' + kappa P) / kappa.
inline TruncatedSeries bkc_over_z_from_combo(Complex kappa, Complex c,
                                             const TruncatedSeries& f) {
    if (kappa == Complex(0.0)) throw DomainError("derivative combo: kappa must be nonzero");
    TruncatedSeries P = divide_by_z(apply_bkc(kappa + 1.0, c, f));
    return scale(add(z_times_derivative(P), scale(P, kappa)), 1.0 / kappa);
}

/// Pointwise check of the ratio identity
///   B_{kappa-1} f / B_kappa f = ((z p'/p) + kappa p - 1) / (kappa - 1),
/// p = B_kappa f / B_{kappa+1} f, on a grid. Points where |B_kappa f| or
/// |B_{kappa+1} f| falls below the guard are skipped and counted; more than
/// 5% skipped raises RatioGuard.
struct RatioCheckResult {
    double worst_rel = 0.0;
    int skipped = 0;
    int total = 0;
};

inline RatioCheckResult ratio_identity_check(Complex kappa, Complex c,
                                             const TruncatedSeries& f, const DiskGrid& grid,
                                             double guard = 1e-6) {
    if (kappa == Complex(1.0) || kappa == Complex(0.0))
        throw DomainError("ratio_identity_check: kappa must avoid {0, 1}");
    TruncatedSeries lo = apply_bkc(kappa - 1.0, c, f);
    TruncatedSeries mid = apply_bkc(kappa, c, f);
    TruncatedSeries hi = apply_bkc(kappa + 1.0, c, f);
    TruncatedSeries mid_d = derivative(mid);
    TruncatedSeries hi_d = derivative(hi);
    RatioCheckResult res;
    const double two_pi = 6.28318530717958647692;
    for (std::size_t ri = 0; ri < grid.radii.size(); ++ri) {
        double r = grid.radii[ri];
        int m = grid.angular_samples[ri];
        for (int i = 0; i < m; ++i) {
            double th = two_pi * double(i) / double(m);
            Complex z(r * std::cos(th), r * std::sin(th));
            ++res.total;
            Complex vm = evaluate(mid, z), vh = evaluate(hi, z);
            if (std::abs(vm) < guard || std::abs(vh) < guard) {
                ++res.skipped;
                continue;
            }
            Complex p = vm / vh;
            // z p' with p = mid/hi
            Complex zp = z * (evaluate(mid_d, z) * vh - vm * evaluate(hi_d, z)) / (vh * vh);
            Complex rhs = (zp / p + kappa * p - 1.0) / (kappa - 1.0);
            Complex lhs = evaluate(lo, z) / vm;
            double sc = std::max(std::abs(lhs), std::abs(rhs));
            if (sc < 1e-300) continue;
            res.worst_rel = std::max(res.worst_rel, std::abs(lhs - rhs) / sc);
        }
    }
    if (res.skipped * 20 > res.total)
        throw RatioGuard("ratio_identity_check: more than 5% of grid points skipped");
    return res;
}

} // namespace bkconv

#endif
