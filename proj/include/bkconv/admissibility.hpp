#ifndef BKCONV_ADMISSIBILITY_HPP
#define BKCONV_ADMISSIBILITY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bkconv/complexfn.hpp"
#include "bkconv/errors.hpp"

namespace bkconv {

/// One sample of the admissibility boundary set: the constraint
/// Re(L e^{-i theta}) >= (k-1) k M must hold.
struct AdmissiblePoint {
    double theta;
    double k;
    Complex L;
    double M;
    Complex kappa;

    AdmissiblePoint(double theta_, double k_, Complex L_, double M_, Complex kappa_)
        : theta(theta_), k(k_), L(L_), M(M_), kappa(kappa_) {
        if (k < 1.0) throw DomainError("AdmissiblePoint: k must be >= 1");
        if (M <= 0.0) throw DomainError("AdmissiblePoint: M must be positive");
        Complex e = std::polar(1.0, -theta);
        if ((L * e).real() < (k - 1.0) * k * M - 1e-12)
            throw ConstraintError("AdmissiblePoint: Re(L e^{-i theta}) < (k-1)kM");
    }
};

/// The three-slot functional phi(u, v, w; z). Named tags cover the proofs'
/// concrete choices; Custom takes any callable.
struct Functional3 {
    enum class Tag { V, VMinusU, VMinus1, Custom };
    Tag tag = Tag::V;
    std::function<Complex(Complex, Complex, Complex, Complex)> custom;
    std::string name = "v";

    static Functional3 v() { return {Tag::V, {}, "v"}; }
    static Functional3 v_minus_u() { return {Tag::VMinusU, {}, "v-u"}; }
    static Functional3 v_minus_1() { return {Tag::VMinus1, {}, "v-1"}; }
    static Functional3 make_custom(std::function<Complex(Complex, Complex, Complex, Complex)> fn,
                                   std::string name_) {
        return {Tag::Custom, std::move(fn), std::move(name_)};
    }

    Complex operator()(Complex u, Complex v, Complex w, Complex z) const {
        switch (tag) {
            case Tag::V: return v;
            case Tag::VMinusU: return v - u;
            case Tag::VMinus1: return v - 1.0;
            case Tag::Custom: return custom(u, v, w, z);
        }
        return 0.0;
    }
};

/// Omega, the set the functional's values must avoid.
struct RegionSpec {
    enum class Kind { Disk, ComplementDisk, Halfplane };
    Kind kind = Kind::Disk;
    Complex center = 0.0;  // disk kinds
    double radius = 0.0;   // disk kinds
    Complex normal = 1.0;  // halfplane: { w : Re(conj(normal) w) > offset }
    double offset = 0.0;

    static RegionSpec disk(Complex center, double radius) {
        if (radius <= 0.0) throw DomainError("RegionSpec: radius must be positive");
        return {Kind::Disk, center, radius, 1.0, 0.0};
    }
    static RegionSpec complement_disk(Complex center, double radius) {
        if (radius <= 0.0) throw DomainError("RegionSpec: radius must be positive");
        return {Kind::ComplementDisk, center, radius, 1.0, 0.0};
    }
    static RegionSpec halfplane(Complex normal, double offset) {
        return {Kind::Halfplane, 0.0, 0.0, normal, offset};
    }

    // Boundary values count as avoiding (the disk region is open); the
    // 1e-9 relative slack keeps exact-boundary samples from flipping on
    // roundoff.
    bool contains(Complex w) const {
        switch (kind) {
            case Kind::Disk: return std::abs(w - center) < radius * (1.0 - 1e-9);
            case Kind::ComplementDisk: return std::abs(w - center) >= radius * (1.0 + 1e-9);
            case Kind::Halfplane: return (std::conj(normal) * w).real() > offset;
        }
        return false;
    }
};

enum class AdmissibilityClass { H, H1, H2 };

// Boundary triple for the class tied to the dominant q(z) = Mz:
//   u = M e^{i theta}
//   v = (k + kappa - 1)/kappa * M e^{i theta}
//   w = (L + (kappa-1)(2k + kappa - 2) M e^{i theta}) / (kappa (kappa-1))
inline std::tuple<Complex, Complex, Complex> build_point_H(double theta, double k, Complex L,
                                                           double M, Complex kappa) {
    AdmissiblePoint validator(theta, k, L, M, kappa); // validates constraint
    (void)validator;
    if (kappa == Complex(0.0) || kappa == Complex(1.0))
        throw DomainError("build_point_H: kappa must avoid {0, 1}");
    Complex e = std::polar(1.0, theta);
    Complex u = M * e;
    Complex v = (k + kappa - 1.0) / kappa * M * e;
    Complex w = (L + (kappa - 1.0) * (2.0 * k + kappa - 2.0) * M * e) /
                (kappa * (kappa - 1.0));
    return {u, v, w};
}

// Boundary triple for the ratio-based class tied to q(z) = 1 + Mz.
inline std::tuple<Complex, Complex, Complex> build_point_H1(double theta, double k, Complex L,
                                                            double M, Complex kappa) {
    AdmissiblePoint validator(theta, k, L, M, kappa);
    (void)validator;
    if (kappa == Complex(0.0) || kappa == Complex(1.0) || kappa == Complex(2.0))
        throw DomainError("build_point_H1: kappa must avoid {0, 1, 2}");
    Complex e = std::polar(1.0, theta);
    Complex em = std::polar(1.0, -theta);
    Complex one_plus = 1.0 + M * e;
    if (std::abs(one_plus) < 1e-9)
        throw DegenerateDenominator("build_point_H1: 1 + M e^{i theta} vanishes");
    Complex u = one_plus;
    Complex v = 1.0 + (k + kappa * one_plus) / ((kappa - 1.0) * one_plus) * M * e;
    Complex big_den = (kappa - 2.0) * (M + em) *
                      ((kappa - 1.0) * em + kappa * M * M * e + (1.0 + k + 2.0 * kappa) * M);
    if (std::abs(M + em) < 1e-9 || std::abs(big_den) < 1e-9)
        throw DegenerateDenominator("build_point_H1: compound denominator vanishes");
    Complex w = 1.0 + (k + kappa * one_plus) / ((kappa - 2.0) * one_plus) * M * e +
                ((M + em) * (L * em + (1.0 + kappa) * k * M + kappa * k * M * M * e) -
                 k * k * M * M) /
                    big_den;
    return {u, v, w};
}

// Boundary triple for the normalized class tied to q(z) = 1 + Mz:
//   u = 1 + M e^{i theta}
//   v = 1 + (k + kappa)/kappa * M e^{i theta}
//   w = 1 + (L + kappa (2k + kappa - 1) M e^{i theta}) / (kappa (kappa-1))
inline std::tuple<Complex, Complex, Complex> build_point_H2(double theta, double k, Complex L,
                                                            double M, Complex kappa) {
    AdmissiblePoint validator(theta, k, L, M, kappa);
    (void)validator;
    if (kappa == Complex(0.0) || kappa == Complex(1.0))
        throw DomainError("build_point_H2: kappa must avoid {0, 1}");
    Complex e = std::polar(1.0, theta);
    Complex u = 1.0 + M * e;
    Complex v = 1.0 + (k + kappa) / kappa * M * e;
    Complex w = 1.0 + (L + kappa * (2.0 * k + kappa - 1.0) * M * e) /
                          (kappa * (kappa - 1.0));
    return {u, v, w};
}

inline std::tuple<Complex, Complex, Complex> build_point(AdmissibilityClass cls, double theta,
                                                         double k, Complex L, double M,
                                                         Complex kappa) {
    switch (cls) {
        case AdmissibilityClass::H: return build_point_H(theta, k, L, M, kappa);
        case AdmissibilityClass::H1: return build_point_H1(theta, k, L, M, kappa);
        case AdmissibilityClass::H2: return build_point_H2(theta, k, L, M, kappa);
    }
    throw DomainError("build_point: unknown class");
}

struct SampleSpec {
    int theta_samples = 64;
    std::vector<double> k_grid = {1.0, 1.25, 1.5, 2.0, 4.0, 10.0};
    // offsets t along the constraint ray: L = ((k-1)kM + t) e^{i theta},
    // each also perturbed by +/- i M
    std::vector<double> t_offsets_in_M = {0.0, 1.0, 10.0};
};

struct Violation {
    double theta;
    double k;
    Complex L;
    Complex phi_value;
};

/// Outcome of an admissibility audit. Sampling can only refute, never prove:
/// `violations` empty means "no violation found at this resolution".
struct AuditReport {
    std::string functional_name;
    AdmissibilityClass cls = AdmissibilityClass::H;
    double M = 0.0;
    Complex kappa = 0.0;
    int points_checked = 0;
    int points_skipped = 0; // degenerate denominators
    std::vector<Violation> violations;
    // per-theta smallest k-grid value from which avoidance holds for all
    // larger sampled k; quiet NaN when no such k exists in the grid
    std::vector<double> min_avoiding_k;

    bool no_violation_found() const { return violations.empty(); }
    // Largest per-theta transition point: the k above which every sampled
    // point avoids the region, across all theta.
    double overall_min_k() const {
        double worst = 1.0;
        for (double k : min_avoiding_k) {
            if (std::isnan(k)) return std::nan("");
            worst = std::max(worst, k);
        }
        return worst;
    }
};

// Samples the boundary set (theta-grid x k-grid x L-rays), evaluates phi at
// each built point and records where its value lands inside the region
// (an admissibility violation at that sample).
inline AuditReport audit(const Functional3& phi, const RegionSpec& region,
                         AdmissibilityClass cls, double M, Complex kappa,
                         const SampleSpec& spec = {}) {
    if (M <= 0.0) throw DomainError("audit: M must be positive");
    AuditReport rep;
    rep.functional_name = phi.name;
    rep.cls = cls;
    rep.M = M;
    rep.kappa = kappa;
    const double two_pi = 6.28318530717958647692;
    for (int ti = 0; ti < spec.theta_samples; ++ti) {
        double theta = two_pi * double(ti) / double(spec.theta_samples);
        Complex e = std::polar(1.0, theta);
        double min_k = std::nan("");
        // scan k descending so min_k tracks the avoidance frontier
        for (auto it = spec.k_grid.rbegin(); it != spec.k_grid.rend(); ++it) {
            double k = *it;
            bool all_avoid = true;
            for (double t : spec.t_offsets_in_M) {
                double base = (k - 1.0) * k * M + t * M;
                for (Complex L : {Complex(base) * e, (Complex(base) + Complex(0.0, M)) * e,
                                  (Complex(base) - Complex(0.0, M)) * e}) {
                    ++rep.points_checked;
                    Complex u, v, w;
                    try {
                        std::tie(u, v, w) = build_point(cls, theta, k, L, M, kappa);
                    } catch (const DegenerateDenominator&) {
                        ++rep.points_skipped;
                        continue;
                    }
                    Complex value = phi(u, v, w, 0.0);
                    if (region.contains(value)) {
                        all_avoid = false;
                        rep.violations.push_back({theta, k, L, value});
                    }
                }
            }
            if (all_avoid)
                min_k = k;
            else
                break; // frontier found: smaller k already violates
        }
        rep.min_avoiding_k.push_back(min_k);
    }
    return rep;
}

} // namespace bkconv

#endif
