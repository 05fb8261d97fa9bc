#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"

namespace {

using namespace casimir::materials;
using casimir::DomainError;
namespace k = casimir::constants;

constexpr double ev = k::ev_to_radps;

NinhamParsegianModel mica(bool debye) {
    return NinhamParsegianModel({157.93 * ev * ev, 10.33 * ev, 3.12e-3 * ev * ev, 3.95e-2 * ev, 0.4, 5e-8}, debye);
}

OscillatorModel si() { return OscillatorModel({Oscillator(4.643496e32, 6.6e15)}); }

TEST(Oscillator, Invariants) {
    EXPECT_THROW(Oscillator(1.0, 0.0), DomainError);
    EXPECT_THROW(Oscillator(1.0, -1.0), DomainError);
    EXPECT_THROW(Oscillator(0.0, 1.0), DomainError);
    EXPECT_THROW(Oscillator(1.0, 1.0, -0.1), DomainError);
    EXPECT_THROW(OscillatorModel({}), DomainError);
    EXPECT_NO_THROW(Oscillator(1.0, 1.0, 0.0));
}

TEST(OscillatorModel, StaticValueAndLimit) {
    const double w = 3e15;
    const OscillatorModel m({Oscillator(3 * w * w, w)});
    EXPECT_DOUBLE_EQ(static_permittivity(m, 300).value, 4.0);
    EXPECT_NEAR(eval_eps(m, 1e22, 0).value, 1.0, 1e-12);
    EXPECT_TRUE(m.undamped());
    EXPECT_NEAR(si().static_eps(), 11.66, 1e-12);
}

TEST(OscillatorModel, DampedContinuation) {
    const OscillatorModel m({Oscillator(2.0, 1.0, 0.5)});
    EXPECT_DOUBLE_EQ(m.eps(2.0), 1.0 + 2.0 / (1.0 + 4.0 + 1.0));
    EXPECT_FALSE(m.undamped());
}

TEST(NinhamParsegian, MicaStaticValues) {
    EXPECT_NEAR(mica(false).static_eps_ei(), 4.47968729796324, 1e-12);
    EXPECT_NEAR(static_permittivity(mica(false), 300).value, 4.47968729796324, 1e-12);
    EXPECT_NEAR(static_permittivity(mica(true), 300).value, 4.47968729796324 + 0.4, 1e-12);
    EXPECT_NEAR(OscillatorModel({Oscillator(157.93 * ev * ev, 10.33 * ev)}).static_eps(), 2.48000775942775, 1e-12);
    EXPECT_NEAR(std::abs(static_permittivity(mica(false), 0).value - 4.45), 0.03, 0.01);
}

TEST(NinhamParsegian, DebyeTermShape) {
    const auto on = mica(true);
    const auto off = mica(false);
    const double xi = 1.0 / 5e-8;
    EXPECT_NEAR(on.eps(xi) - off.eps(xi), 0.2, 1e-12);
}

TEST(Units, EvConversion) {
    EXPECT_DOUBLE_EQ(ev_to_radps(1.0), 1.519267447e15);
    EXPECT_EQ(ev_to_radps(0.0), 0.0);
    EXPECT_NEAR(ev_to_radps(10.33), 1.569403272751e16, 1e4);
}

TEST(Units, ResistivityToSigma) {
    const double four_pi_sigma = 4 * k::pi * resistivity_to_sigma(2e-4);
    EXPECT_NEAR(four_pi_sigma, 5.64704533686510e14, 1e1);
    EXPECT_DOUBLE_EQ(resistivity_to_sigma(1e-4), 2 * resistivity_to_sigma(2e-4));
    EXPECT_EQ(resistivity_to_sigma(std::numeric_limits<double>::infinity()), 0.0);
    EXPECT_THROW(resistivity_to_sigma(0.0), DomainError);
    EXPECT_THROW(resistivity_to_sigma(-1.0), DomainError);
}

TEST(Conductivity, Laws) {
    const double sa = 1e12;
    const auto bandgap = ConductivityLaw(ConductivityForm::bandgap, sa, 2 * k::k_B * 300);
    EXPECT_NEAR(sigma0(bandgap, 300) / sa, std::exp(-1.0), 1e-15);
    EXPECT_EQ(sigma0(bandgap, 0), 0.0);
    EXPECT_LT(sigma0(bandgap, 1.0) / sa, 1e-130);
    const auto mott = ConductivityLaw(ConductivityForm::mott, sa, k::k_B * 100);
    EXPECT_NEAR(sigma0(mott, 50) / sa, std::exp(-2.0), 1e-15);
    const auto flat = ConductivityLaw::constant(sa);
    EXPECT_EQ(sigma0(flat, 0), sa);
    EXPECT_THROW(ConductivityLaw(ConductivityForm::bandgap, 0.0, 1.0), DomainError);
    EXPECT_THROW(ConductivityLaw(ConductivityForm::mott, 1.0, 0.0), DomainError);
}

TEST(Conductivity, Beta) {
    const double T = 300;
    const double sa = k::k_B * T / (2 * k::hbar);
    EXPECT_NEAR(beta(ConductivityLaw::constant(sa), T), 1.0, 1e-14);
    const auto gap = ConductivityLaw::bandgap_ev(1e15, 0.5);
    EXPECT_EQ(beta(gap, 0.0), 0.0);
    for (double t : {5.0, 20.0, 60.0}) EXPECT_LT(beta(gap, t / 2), beta(gap, t));
    // sigma0 underflows to 0 deep in the gap.
    EXPECT_EQ(beta(ConductivityLaw::bandgap_ev(1e15, 1.12), 1.0), 0.0);
}

TEST(ConductiveDielectric, MatsubaraShiftIsBetaOverL) {
    const ConductiveDielectric c(si(), ConductivityLaw::bandgap_ev(resistivity_to_sigma(1e-6), 0.3));
    const double T = 300;
    const casimir::lifshitz::ThermalState st(T, 1e-6);
    for (long l = 1; l <= 50; ++l) {
        const double xi = st.xi(l);
        const double expected = si().eps(xi) + beta(c.law(), T) / static_cast<double>(l);
        EXPECT_NEAR(eval_eps(c, xi, T).value / expected, 1.0, 1e-14) << l;
    }
}

TEST(ConductiveDielectric, DivergenceMarker) {
    const ConductiveDielectric c(si(), ConductivityLaw::bandgap_ev(1e15, 1.12));
    EXPECT_EQ(static_permittivity(c, 300).kind, EpsValue::Kind::dc_conduction);
    EXPECT_EQ(static_permittivity(c, 1e-3).kind, EpsValue::Kind::dc_conduction);
    const auto zero_T = static_permittivity(c, 0.0);
    EXPECT_TRUE(zero_T.is_finite());
    EXPECT_NEAR(zero_T.value, 11.66, 1e-12);
    EXPECT_GT(eval_eps(c, 1e10, 300).value, si().eps(1e10));
}

TEST(Models, DecreasingAndAtLeastOne) {
    const PermittivityModel models[] = {
        si(), mica(true), mica(false),
        OscillatorModel({Oscillator(1e30, 1e14, 1e13), Oscillator(5e32, 1e16, 1e15)}),
        ConductiveDielectric(si(), ConductivityLaw::mott_ev(1e14, 0.05))};
    for (const auto& m : models) {
        double prev = std::numeric_limits<double>::infinity();
        double first = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double xi = std::pow(10.0, 6 + 0.06 * i);
            const EpsValue e = eval_eps(m, xi, 300);
            ASSERT_TRUE(e.is_finite());
            EXPECT_GT(e.value, 1.0);
            // Flat to double precision well below the lowest resonance.
            EXPECT_LE(e.value, prev) << model_tag(m) << " xi = " << xi;
            if (i == 0) first = e.value;
            prev = e.value;
        }
        EXPECT_LT(prev, first) << model_tag(m);
    }
}

TEST(Models, MetalAndVacuum) {
    EXPECT_EQ(eval_eps(IdealMetal{}, 1e15, 300).kind, EpsValue::Kind::perfect_conductor);
    EXPECT_EQ(eval_eps(IdealMetal{}, 0, 0).kind, EpsValue::Kind::perfect_conductor);
    EXPECT_EQ(eval_eps(Vacuum{}, 1e15, 300).value, 1.0);
}

TEST(Models, RejectsNegativeArguments) {
    EXPECT_THROW(eval_eps(si(), -1.0, 300), DomainError);
    EXPECT_THROW(eval_eps(si(), 1.0, -1.0), DomainError);
    EXPECT_THROW(eval_eps(si(), std::nan(""), 300), DomainError);
}

TEST(Toggles, DegradeModels) {
    const ConductiveDielectric c(si(), ConductivityLaw::bandgap_ev(1e15, 1.12));
    EXPECT_EQ(apply_toggles(c, {false, true}), PermittivityModel(si()));
    EXPECT_EQ(apply_toggles(c, {true, true}), PermittivityModel(c));
    EXPECT_EQ(apply_toggles(mica(true), {true, false}), PermittivityModel(mica(false)));
    EXPECT_EQ(apply_toggles(si(), {false, false}), PermittivityModel(si()));
}

TEST(Models, FeatureFrequenciesAndTags) {
    const auto f = feature_frequencies(mica(true));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_TRUE(feature_frequencies(IdealMetal{}).empty());
    EXPECT_EQ(model_tag(mica(true)), "ninham-parsegian");
    EXPECT_EQ(model_tag(Vacuum{}), "vacuum");
    EXPECT_TRUE(as_oscillator_model(mica(false)).has_value());
    EXPECT_FALSE(as_oscillator_model(mica(true)).has_value());
}

}  // namespace
