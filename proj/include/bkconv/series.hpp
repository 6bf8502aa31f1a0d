#ifndef BKCONV_SERIES_HPP
#define BKCONV_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "bkconv/complexfn.hpp"
#include "bkconv/errors.hpp"

namespace bkconv {

inline constexpr int kDefaultOrder = 64;

/// Truncated power series a_0 + a_1 z + ... + a_N z^N, the representation of
/// every analytic function on the unit disk used here. Immutable by
/// convention: all operations return fresh values.
struct TruncatedSeries {
    std::vector<Complex> coeffs; // size N+1

    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<Complex> c) : coeffs(std::move(c)) {
        for (const Complex& a : coeffs)
            if (!is_finite(a)) throw DomainError("TruncatedSeries: non-finite coefficient");
    }

    // Construct with the class-A normalization asserted (a_0 = 0, a_1 = 1).
    TruncatedSeries(std::vector<Complex> c, bool require_class_a)
        : TruncatedSeries(std::move(c)) {
        if (require_class_a && !is_class_a())
            throw NormalizationError("TruncatedSeries: expected a_0 = 0, a_1 = 1");
    }

    int order() const { return int(coeffs.size()) - 1; }

    Complex at(std::size_t n) const { return n < coeffs.size() ? coeffs[n] : Complex(0.0); }

    bool is_class_a(double tol = 1e-14) const {
        return coeffs.size() >= 2 && std::abs(coeffs[0]) <= tol &&
               std::abs(coeffs[1] - 1.0) <= tol;
    }

    static TruncatedSeries zero(int order) {
        return TruncatedSeries(std::vector<Complex>(std::size_t(order) + 1, 0.0));
    }

    // z^k truncated at the given order.
    static TruncatedSeries monomial(int k, int order) {
        auto s = zero(order);
        if (k <= order) s.coeffs[std::size_t(k)] = 1.0;
        return s;
    }

    // z/(1-z): the Hadamard identity on class A (all coefficients 1 from a_1 on).
    static TruncatedSeries identity_convolver(int order) {
        std::vector<Complex> c(std::size_t(order) + 1, 1.0);
        c[0] = 0.0;
        return TruncatedSeries(std::move(c));
    }
};

// Series of different orders auto-truncate to the shorter.
inline TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    std::size_t n = std::min(f.coeffs.size(), g.coeffs.size());
    std::vector<Complex> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = f.coeffs[i] + g.coeffs[i];
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries scale(const TruncatedSeries& f, Complex s) {
    std::vector<Complex> c(f.coeffs);
    for (Complex& a : c) a *= s;
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    return add(f, scale(g, -1.0));
}

// c_n = sum_{j<=n} a_j b_{n-j}, truncated at the shorter order.
inline TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g) {
    std::size_t n = std::min(f.coeffs.size(), g.coeffs.size());
    std::vector<Complex> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] += f.coeffs[i] * g.coeffs[j];
    return TruncatedSeries(std::move(c));
}

// Coefficientwise product of like-index coefficients; both arguments must
// vanish at the origin (the class-A convolution of the Hadamard product).
inline TruncatedSeries hadamard_product(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.coeffs.empty() || g.coeffs.empty() || std::abs(f.coeffs[0]) != 0.0 ||
        std::abs(g.coeffs[0]) != 0.0)
        throw NormalizationError("hadamard_product: arguments must have a_0 = 0");
    std::size_t n = std::min(f.coeffs.size(), g.coeffs.size());
    std::vector<Complex> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = f.coeffs[i] * g.coeffs[i];
    return TruncatedSeries(std::move(c));
}

// d/dz: coefficients (n+1) a_{n+1}, order drops by one.
inline TruncatedSeries derivative(const TruncatedSeries& f) {
    if (f.coeffs.size() <= 1) return TruncatedSeries(std::vector<Complex>{0.0});
    std::vector<Complex> c(f.coeffs.size() - 1);
    for (std::size_t i = 0; i + 1 < f.coeffs.size(); ++i)
        c[i] = double(i + 1) * f.coeffs[i + 1];
    return TruncatedSeries(std::move(c));
}

// z f'(z): coefficients n a_n, same order.
inline TruncatedSeries z_times_derivative(const TruncatedSeries& f) {
    std::vector<Complex> c(f.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = double(i) * f.coeffs[i];
    return TruncatedSeries(std::move(c));
}

// f(z) -> z f(z), order preserved (top coefficient truncated away).
inline TruncatedSeries multiply_by_z(const TruncatedSeries& f) {
    std::vector<Complex> c(f.coeffs.size(), 0.0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i + 1] = f.coeffs[i];
    return TruncatedSeries(std::move(c));
}

// f(z)/z for series with a_0 = 0; order drops by one.
inline TruncatedSeries divide_by_z(const TruncatedSeries& f) {
    if (f.coeffs.empty() || std::abs(f.coeffs[0]) != 0.0)
        throw NormalizationError("divide_by_z: a_0 must be 0");
    std::vector<Complex> c(f.coeffs.begin() + 1, f.coeffs.end());
    if (c.empty()) c.push_back(0.0);
    return TruncatedSeries(std::move(c));
}

// f(sz) as a series: coefficient n scaled by s^n.
inline TruncatedSeries scale_argument(const TruncatedSeries& f, Complex s) {
    std::vector<Complex> c(f.coeffs);
    Complex pw = 1.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] *= pw;
        pw *= s;
    }
    return TruncatedSeries(std::move(c));
}

inline Complex evaluate(const TruncatedSeries& f, Complex z) {
    Complex acc = 0.0;
    for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = acc * z + f.coeffs[i];
    return acc;
}

/// Radii and angular sample counts discretizing the unit disk for
/// sup-modulus estimation.
struct DiskGrid {
    std::vector<double> radii;
    std::vector<int> angular_samples; // one count per radius

    DiskGrid(std::vector<double> r, std::vector<int> samples)
        : radii(std::move(r)), angular_samples(std::move(samples)) {
        if (radii.empty() || radii.size() != angular_samples.size())
            throw DomainError("DiskGrid: radii/samples size mismatch");
        for (std::size_t i = 0; i < radii.size(); ++i) {
            if (radii[i] <= 0.0 || radii[i] > 0.999)
                throw DomainError("DiskGrid: radii must lie in (0, 0.999]");
            if (i > 0 && radii[i] <= radii[i - 1])
                throw DomainError("DiskGrid: radii must be strictly increasing");
            if (angular_samples[i] < 256)
                throw DomainError("DiskGrid: need at least 256 angular samples");
        }
    }

    DiskGrid(const std::vector<double>& r, int samples)
        : DiskGrid(r, std::vector<int>(r.size(), samples)) {}

    static DiskGrid standard(int samples = 4096) {
        return DiskGrid({0.5, 0.9, 0.99, 0.999}, samples);
    }
};

struct SupResult {
    double value = 0.0;
    double theta = 0.0; // maximizing angle
};

namespace detail {

template <class F>
SupResult sup_on_circle_fn(const F& fn, double r, int samples, bool refine) {
    const double two_pi = 6.28318530717958647692;
    SupResult best;
    for (int i = 0; i < samples; ++i) {
        double th = two_pi * double(i) / double(samples);
        double v = std::abs(fn(Complex(r * std::cos(th), r * std::sin(th))));
        if (v > best.value) {
            best.value = v;
            best.theta = th;
        }
    }
    if (refine) {
        // golden-section refinement around the sample argmax
        const double gr = 0.61803398874989484820;
        double step = two_pi / double(samples);
        double a = best.theta - step, b = best.theta + step;
        auto neg = [&](double th) {
            return -std::abs(fn(Complex(r * std::cos(th), r * std::sin(th))));
        };
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = neg(x1), f2 = neg(x2);
        for (int it = 0; it < 60; ++it) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a); f1 = neg(x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a); f2 = neg(x2);
            }
        }
        double th = 0.5 * (a + b);
        double v = -neg(th);
        if (v > best.value) {
            best.value = v;
            best.theta = th;
        }
    }
    return best;
}

} // namespace detail

// max over equally spaced angles of |f(r e^{i theta})|.
inline SupResult sup_on_circle(const TruncatedSeries& f, double r, int samples,
                               bool refine = false) {
    if (r <= 0.0 || r >= 1.0) throw DomainError("sup_on_circle: need 0 < r < 1");
    if (samples < 256) throw DomainError("sup_on_circle: need at least 256 samples");
    return detail::sup_on_circle_fn([&](Complex z) { return evaluate(f, z); }, r, samples,
                                    refine);
}

// Rigorous tail bound for phi_{kappa,c} truncated after coefficient index N:
// the omitted terms |a_{n+1} z^{n+1}| for n >= N are majorized by a geometric
// series once the coefficient ratio |c| r / (4 |kappa+n| (n+1)) drops below 1/2.
inline double tail_bound(Complex kappa, Complex c, double r, int N) {
    if (near_nonpositive_integer(kappa))
        throw DomainError("tail_bound: kappa within 1e-12 of a nonpositive integer");
    if (c == Complex(0.0)) return 0.0;
    if (N < 1) N = 1;
    double ac = std::abs(c);
    // first omitted term: |a_{N+1}| r^{N+1} with a_{N+1} = (-c)^N / (4^N (k)_N N!)
    double term = r;
    int n = 0;
    for (; n < N; ++n) term *= ac * r / (4.0 * std::abs(kappa + double(n)) * double(n + 1));
    // advance until the ratio majorant is < 1/2 (|kappa + n| >= n - |kappa| for n large)
    double bound_extra = 0.0;
    double ak = std::abs(kappa);
    while (true) {
        double denom = 4.0 * (double(n) - ak) * double(n + 1);
        if (double(n) > ak && ac * r / denom < 0.5) break;
        bound_extra += term;
        term *= ac * r / (4.0 * std::abs(kappa + double(n)) * double(n + 1));
        ++n;
        if (n > N + 10000) throw DomainError("tail_bound: majorant failed to engage");
    }
    return bound_extra + 2.0 * term; // geometric sum with ratio <= 1/2
}

} // namespace bkconv

#endif
