#ifndef BKCONV_SUBORDINATION_HPP
#define BKCONV_SUBORDINATION_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "bkconv/besselgen.hpp"
#include "bkconv/errors.hpp"
#include "bkconv/operator.hpp"
#include "bkconv/series.hpp"

namespace bkconv {

/// Disk dominant q(z) = center + M z (center is 0 or 1 in practice).
struct DiskTarget {
    Complex center;
    double radius; // M

    DiskTarget(Complex center_, double radius_) : center(center_), radius(radius_) {
        if (radius <= 0.0) throw DomainError("DiskTarget: radius must be positive");
    }
};

enum class CaseId {
    C2_4,           // |B_k f| < M            => |B_{k+1} f| < M
    C2_5,           // |B_k f - B_{k+1} f| < M/|k|  => |B_{k+1} f/z - 1| < M
                    // (the difference vanishes to second order, so the
                    // normalized conclusion follows by the Schwarz lemma;
                    // the unnormalized |B_{k+1} f| < M does not)
    C2_8,           // |B_{k-1}f/B_kf - B_kf/B_{k+1}f| < M^2/(|k-1|(1+M))
                    //                         => |B_kf/B_{k+1}f - 1| < M
    C2_11,          // |B_kf/z - B_{k+1}f/z| < M/|k| => |B_{k+1}f/z - 1| < M
    C2_12,          // |B_kf/z - 1| < M        => |B_{k+1}f/z - 1| < M
    chain_2_111,    // |phi_k| < M             => |phi_{k+1}| < M
    chain_4_10,     // |phi_k/z - 1| < M       => |phi_{k+1}/z - 1| < M
    trig_chain_sin, // |z cos sqrt(z)| < M     => |sqrt(z) sin sqrt(z)| < M
    trig_chain_sinh // |z cosh rz| < M         => |rz sinh rz| < M  (rz = sqrt z)
};

inline const char* case_name(CaseId id) {
    switch (id) {
        case CaseId::C2_4: return "C2_4";
        case CaseId::C2_5: return "C2_5";
        case CaseId::C2_8: return "C2_8";
        case CaseId::C2_11: return "C2_11";
        case CaseId::C2_12: return "C2_12";
        case CaseId::chain_2_111: return "chain_2_111";
        case CaseId::chain_4_10: return "chain_4_10";
        case CaseId::trig_chain_sin: return "trig_chain_sin";
        case CaseId::trig_chain_sinh: return "trig_chain_sinh";
    }
    return "?";
}

struct VerifyCase {
    CaseId id;
    BesselParams params;
    double M; // nominal bound; verify_implication derives its own effective M
    TruncatedSeries f;
    DiskGrid grid;
};

struct VerifyReport {
    CaseId id = CaseId::C2_4;
    double premise_sup = 0.0;
    double conclusion_sup = 0.0;
    double bound = 0.0; // right-hand side of the conclusion at the effective M
    double margin = 0.0;
    Complex worst_z = 0.0;
    bool pass = false;
    int skipped_points = 0;
};

inline constexpr double kPremiseMarginFactor = 1e-6;
inline constexpr double kImplicationTolFactor = 1e-9;

// true iff max over grid of |p(z) - center| < M; margin = M - that max.
inline std::pair<bool, double> subordinate_to_disk(const TruncatedSeries& p,
                                                   const DiskTarget& target,
                                                   const DiskGrid& grid) {
    if (std::abs(evaluate(p, 0.0) - target.center) > 1e-12)
        throw CenterMismatch("subordinate_to_disk: p(0) does not match target center");
    double worst = 0.0;
    for (std::size_t ri = 0; ri < grid.radii.size(); ++ri) {
        SupResult s = detail::sup_on_circle_fn(
            [&](Complex z) { return evaluate(p, z) - target.center; }, grid.radii[ri],
            grid.angular_samples[ri], false);
        worst = std::max(worst, s.value);
    }
    return {worst < target.radius, target.radius - worst};
}

namespace detail {

struct GridMax {
    double value = 0.0;
    Complex worst_z = 0.0;
    int skipped = 0;
    int total = 0;
};

// max of |fn(z)| over the grid; fn may signal a skipped point by returning
// a quiet NaN through the skip flag.
template <class F>
GridMax grid_max(const F& fn, const DiskGrid& grid) {
    const double two_pi = 6.28318530717958647692;
    GridMax gm;
    for (std::size_t ri = 0; ri < grid.radii.size(); ++ri) {
        double r = grid.radii[ri];
        int m = grid.angular_samples[ri];
        for (int i = 0; i < m; ++i) {
            double th = two_pi * double(i) / double(m);
            Complex z(r * std::cos(th), r * std::sin(th));
            ++gm.total;
            bool skip = false;
            double v = fn(z, skip);
            if (skip) {
                ++gm.skipped;
                continue;
            }
            if (v > gm.value) {
                gm.value = v;
                gm.worst_z = z;
            }
        }
    }
    return gm;
}

} // namespace detail

// Checks the literal implication content of one named case at sampling
// resolution: the effective M is chosen so the premise holds strictly
// (premise_rhs(M) = premise_sup * (1 + 1e-6)), then the conclusion sup is
// compared against the conclusion bound.
inline VerifyReport verify_implication(const VerifyCase& vc) {
    Complex kappa = vc.params.kappa();
    Complex c = vc.params.c;
    const int N = vc.f.order();

    std::function<double(Complex, bool&)> premise, conclusion;
    // bound(M): conclusion right-hand side; invert(S): M with premise rhs = S
    std::function<double(double)> invert;

    auto series_abs = [](TruncatedSeries s) {
        return [s = std::move(s)](Complex z, bool&) { return std::abs(evaluate(s, z)); };
    };
    auto series_over_z_minus_1 = [](TruncatedSeries s) {
        TruncatedSeries q = divide_by_z(s);
        return [q = std::move(q)](Complex z, bool&) {
            return std::abs(evaluate(q, z) - 1.0);
        };
    };
    auto identity_M = [](double s) { return s; };

    switch (vc.id) {
        case CaseId::C2_4: {
            if (kappa.real() < 0.0)
                throw DomainError("C2_4 requires Re(kappa) >= 0");
            premise = series_abs(apply_bkc(kappa, c, vc.f));
            conclusion = series_abs(apply_bkc(kappa + 1.0, c, vc.f));
            invert = identity_M;
            break;
        }
        case CaseId::C2_5: {
            if (kappa == Complex(0.0)) throw DomainError("C2_5 requires kappa != 0");
            premise = series_abs(
                sub(apply_bkc(kappa, c, vc.f), apply_bkc(kappa + 1.0, c, vc.f)));
            conclusion = series_over_z_minus_1(apply_bkc(kappa + 1.0, c, vc.f));
            // The premise vanishes to second order at the origin while the
            // conclusion vanishes to first order, so sampling at radius r
            // underestimates their ratio by a factor of r; compensate with
            // the outermost sampled radius.
            double rmax = *std::max_element(vc.grid.radii.begin(), vc.grid.radii.end());
            invert = [ak = std::abs(kappa), rmax](double s) { return ak * s / rmax; };
            break;
        }
        case CaseId::C2_8: {
            if (kappa == Complex(1.0) || kappa == Complex(0.0))
                throw DomainError("C2_8 requires kappa != 0, 1");
            TruncatedSeries lo = apply_bkc(kappa - 1.0, c, vc.f);
            TruncatedSeries mid = apply_bkc(kappa, c, vc.f);
            TruncatedSeries hi = apply_bkc(kappa + 1.0, c, vc.f);
            const double guard = 1e-6;
            premise = [lo, mid, hi, guard](Complex z, bool& skip) {
                Complex vm = evaluate(mid, z), vh = evaluate(hi, z);
                if (std::abs(vm) < guard || std::abs(vh) < guard) {
                    skip = true;
                    return 0.0;
                }
                return std::abs(evaluate(lo, z) / vm - vm / vh);
            };
            conclusion = [mid, hi, guard](Complex z, bool& skip) {
                Complex vh = evaluate(hi, z);
                if (std::abs(vh) < guard) {
                    skip = true;
                    return 0.0;
                }
                return std::abs(evaluate(mid, z) / vh - 1.0);
            };
            // premise rhs: M^2 / (|kappa-1| (1+M))  ->  M^2 - aM - a = 0
            invert = [ak1 = std::abs(kappa - 1.0)](double s) {
                double a = s * ak1;
                return 0.5 * (a + std::sqrt(a * a + 4.0 * a));
            };
            break;
        }
        case CaseId::C2_11: {
            if (kappa == Complex(0.0)) throw DomainError("C2_11 requires kappa != 0");
            TruncatedSeries diff = divide_by_z(
                sub(apply_bkc(kappa, c, vc.f), apply_bkc(kappa + 1.0, c, vc.f)));
            premise = series_abs(diff);
            conclusion = series_over_z_minus_1(apply_bkc(kappa + 1.0, c, vc.f));
            invert = [ak = std::abs(kappa)](double s) { return ak * s; };
            break;
        }
        case CaseId::C2_12: {
            if (kappa == Complex(0.0) || kappa.real() < -0.5)
                throw DomainError("C2_12 requires kappa != 0, Re(kappa) >= -1/2");
            premise = series_over_z_minus_1(apply_bkc(kappa, c, vc.f));
            conclusion = series_over_z_minus_1(apply_bkc(kappa + 1.0, c, vc.f));
            invert = identity_M;
            break;
        }
        case CaseId::chain_2_111: {
            if (kappa.real() < 0.0)
                throw DomainError("chain_2_111 requires Re(kappa) >= 0");
            premise = series_abs(phi_series_kc(kappa, c, N));
            conclusion = series_abs(phi_series_kc(kappa + 1.0, c, N));
            invert = identity_M;
            break;
        }
        case CaseId::chain_4_10: {
            if (kappa.real() < 0.0)
                throw DomainError("chain_4_10 requires Re(kappa) >= 0");
            premise = series_over_z_minus_1(phi_series_kc(kappa, c, N));
            conclusion = series_over_z_minus_1(phi_series_kc(kappa + 1.0, c, N));
            invert = identity_M;
            break;
        }
        case CaseId::trig_chain_sin: {
            // closed-form route: kappa = 1/2, c = 1
            premise = [](Complex z, bool&) {
                return std::abs(closed_form_eval(ClosedForm::cos_negh, z));
            };
            conclusion = [](Complex z, bool&) {
                return std::abs(closed_form_eval(ClosedForm::sin_half, z));
            };
            invert = identity_M;
            break;
        }
        case CaseId::trig_chain_sinh: {
            // closed-form route: kappa = 1/2, c = -1
            premise = [](Complex z, bool&) {
                return std::abs(closed_form_eval(ClosedForm::cosh_negh, z));
            };
            conclusion = [](Complex z, bool&) {
                return std::abs(closed_form_eval(ClosedForm::sinh_half, z));
            };
            invert = identity_M;
            break;
        }
    }

    detail::GridMax pre = detail::grid_max(premise, vc.grid);
    detail::GridMax con = detail::grid_max(conclusion, vc.grid);

    VerifyReport rep;
    rep.id = vc.id;
    rep.premise_sup = pre.value;
    rep.conclusion_sup = con.value;
    rep.skipped_points = pre.skipped + con.skipped;
    double m_eff = invert(pre.value * (1.0 + kPremiseMarginFactor));
    rep.bound = m_eff; // every case concludes with |...| < M
    rep.margin = rep.bound - con.value;
    rep.worst_z = con.worst_z;
    rep.pass = con.value < rep.bound * (1.0 + kImplicationTolFactor);
    if (vc.id == CaseId::C2_8 &&
        (pre.skipped * 20 > pre.total || con.skipped * 20 > con.total))
        throw RatioGuard("verify_implication: C2_8 denominator guard tripped on >5% of grid");
    return rep;
}

// Ratio conclusion_sup / M_eff near the boundary; observational only.
inline double sharpness_probe(const VerifyCase& vc) {
    VerifyReport rep = verify_implication(vc);
    return rep.conclusion_sup / rep.bound;
}

} // namespace bkconv

#endif
