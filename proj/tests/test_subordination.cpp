#include <doctest.h>

#include <cmath>
#include <random>

#include "bkconv/subordination.hpp"
#include "oracles.hpp"

using namespace bkconv;

namespace {

TruncatedSeries random_class_a(std::mt19937& rng, int order, double amp = 0.05) {
    std::uniform_real_distribution<double> u(-amp, amp);
    std::vector<Complex> c(std::size_t(order) + 1);
    for (auto& a : c) a = Complex(u(rng), u(rng));
    c[0] = 0.0;
    c[1] = 1.0;
    return TruncatedSeries(std::move(c));
}

DiskGrid small_grid() { return DiskGrid({0.5, 0.9, 0.999}, 512); }

} // namespace

TEST_CASE("subordinate_to_disk: identity map against a unit-radius target") {
    auto id = TruncatedSeries({0.0, 1.0});
    auto [ok, margin] = subordinate_to_disk(id, DiskTarget(0.0, 1.0), small_grid());
    CHECK(ok);
    CHECK(margin == doctest::Approx(1.0 - 0.999).epsilon(1e-9));
}

TEST_CASE("subordinate_to_disk: fails when the image escapes") {
    auto big = TruncatedSeries({0.0, 3.0});
    auto [ok, margin] = subordinate_to_disk(big, DiskTarget(0.0, 1.0), small_grid());
    CHECK_FALSE(ok);
    CHECK(margin < 0.0);
}

TEST_CASE("subordinate_to_disk: center mismatch is an error") {
    auto shifted = TruncatedSeries({0.5, 1.0});
    CHECK_THROWS_AS(subordinate_to_disk(shifted, DiskTarget(0.0, 1.0), small_grid()),
                    CenterMismatch);
}

TEST_CASE("subordinate_to_disk is monotone in the radius") {
    auto p = TruncatedSeries({Complex(0.0), Complex(0.7), Complex(0.1, 0.2)});
    auto grid = small_grid();
    auto tight = subordinate_to_disk(p, DiskTarget(0.0, 0.5), grid);
    auto loose = subordinate_to_disk(p, DiskTarget(0.0, 2.0), grid);
    CHECK_FALSE(tight.first);
    CHECK(loose.first);
    CHECK(loose.second == doctest::Approx(tight.second + 1.5).epsilon(1e-12));
}

TEST_CASE("subordinate_to_disk: sup plus epsilon flips the verdict") {
    auto phi = phi_series_kc(1.5, 1.0, 48);
    auto grid = small_grid();
    double sup = 0.0;
    for (std::size_t i = 0; i < grid.radii.size(); ++i)
        sup = std::max(sup, sup_on_circle(phi, grid.radii[i], grid.angular_samples[i]).value);
    CHECK(subordinate_to_disk(phi, DiskTarget(0.0, sup * (1.0 + 1e-9)), grid).first);
    CHECK_FALSE(subordinate_to_disk(phi, DiskTarget(0.0, sup * (1.0 - 1e-9)), grid).first);
}

TEST_CASE("verify_implication passes for every built-in case") {
    auto f = TruncatedSeries::identity_convolver(48);
    auto grid = small_grid();
    for (CaseId id : {CaseId::C2_4, CaseId::C2_5, CaseId::C2_8, CaseId::C2_11,
                      CaseId::C2_12, CaseId::chain_2_111, CaseId::chain_4_10,
                      CaseId::trig_chain_sin, CaseId::trig_chain_sinh}) {
        CAPTURE(case_name(id));
        BesselParams bp = (id == CaseId::trig_chain_sin || id == CaseId::trig_chain_sinh)
                              ? BesselParams::from_kappa(0.5, id == CaseId::trig_chain_sin ? 1.0 : -1.0)
                              : BesselParams::from_kappa(2.5, 1.0);
        VerifyCase vc{id, bp, 1.0, f, grid};
        VerifyReport rep = verify_implication(vc);
        CHECK(rep.pass);
        CHECK(rep.premise_sup > 0.0);
        CHECK(rep.conclusion_sup > 0.0);
        CHECK(rep.conclusion_sup < rep.bound * (1.0 + 1e-9));
    }
}

TEST_CASE("chain case holds across a parameter box and several inputs") {
    auto grid = DiskGrid({0.9, 0.999}, 512);
    std::mt19937 rng(21);
    std::vector<TruncatedSeries> inputs;
    inputs.push_back(TruncatedSeries::identity_convolver(40));
    {
        std::vector<Complex> half(41, 0.0);
        half[1] = 1.0;
        half[2] = 0.5;
        inputs.push_back(TruncatedSeries(half));
    }
    for (int i = 0; i < 5; ++i) inputs.push_back(random_class_a(rng, 40));

    for (double kr : {0.5, 1.0, 2.5, 4.0})
        for (double ci : {-2.0, -0.5, 1.0, 2.0})
            for (const auto& f : inputs) {
                BesselParams bp = BesselParams::from_kappa(Complex(kr, 0.3), Complex(ci, 0.2));
                VerifyCase vc{CaseId::chain_2_111, bp, 1.0, f, grid};
                VerifyReport rep = verify_implication(vc);
                CAPTURE(kr);
                CAPTURE(ci);
                CHECK(rep.pass);
            }
}

TEST_CASE("side conditions are enforced") {
    auto f = TruncatedSeries::identity_convolver(16);
    auto grid = small_grid();
    CHECK_THROWS_AS(verify_implication(VerifyCase{CaseId::C2_4,
                                                  BesselParams::from_kappa(Complex(-0.5, 0.0), 1.0),
                                                  1.0, f, grid}),
                    DomainError);
    CHECK_THROWS_AS(verify_implication(VerifyCase{CaseId::C2_12,
                                                  BesselParams::from_kappa(Complex(-1.5, 0.0), 1.0),
                                                  1.0, f, grid}),
                    DomainError);
    CHECK_THROWS_AS(verify_implication(VerifyCase{CaseId::chain_2_111,
                                                  BesselParams::from_kappa(Complex(-0.25, 0.0), 1.0),
                                                  1.0, f, grid}),
                    DomainError);
}

TEST_CASE("sharpness probe for the trivial operator is exactly the identity ratio") {
    // c = 0 makes every shifted transform equal to f itself, so premise and
    // conclusion coincide and the probe sits just below 1.
    VerifyCase vc{CaseId::chain_2_111, BesselParams::from_kappa(2.0, 0.0), 1.0,
                  TruncatedSeries::identity_convolver(16), small_grid()};
    double probe = sharpness_probe(vc);
    CHECK(probe == doctest::Approx(1.0 / (1.0 + kPremiseMarginFactor)).epsilon(1e-12));
}

TEST_CASE("verify_implication is deterministic bit for bit") {
    std::mt19937 rng(22);
    auto f = random_class_a(rng, 32);
    VerifyCase vc{CaseId::C2_5, BesselParams::from_kappa(Complex(1.7, 0.4), Complex(0.8, -0.3)),
                  1.0, f, small_grid()};
    VerifyReport a = verify_implication(vc);
    VerifyReport b = verify_implication(vc);
    CHECK(a.premise_sup == b.premise_sup);
    CHECK(a.conclusion_sup == b.conclusion_sup);
    CHECK(a.bound == b.bound);
    CHECK(a.margin == b.margin);
    CHECK(a.worst_z == b.worst_z);
}

TEST_CASE("C2_8 quadratic premise inversion is consistent") {
    // invert(S) returns the M with M^2 / (|kappa-1| (1+M)) = S; check the
    // round trip through the reported bound.
    auto f = TruncatedSeries::identity_convolver(48);
    VerifyCase vc{CaseId::C2_8, BesselParams::from_kappa(2.5, 1.0), 1.0, f, small_grid()};
    VerifyReport rep = verify_implication(vc);
    double ak1 = std::abs(Complex(2.5) - 1.0);
    double forward = rep.bound * rep.bound / (ak1 * (1.0 + rep.bound));
    CHECK(forward == doctest::Approx(rep.premise_sup * (1.0 + kPremiseMarginFactor)).epsilon(1e-12));
}
