#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/material_file.hpp"

#ifndef CASIMIR_MATERIALS_DIR
#error "CASIMIR_MATERIALS_DIR must point at data/materials"
#endif

namespace {

using namespace casimir::materials;
using casimir::MaterialFileError;
namespace fs = std::filesystem;

const fs::path kDir = CASIMIR_MATERIALS_DIR;
constexpr double ev = casimir::constants::ev_to_radps;

std::string error_of(const std::string& text) {
    try {
        parse_material(text, "test.mat");
    } catch (const MaterialFileError& e) {
        return e.what();
    }
    return "";
}

TEST(MaterialFile, BundledMica) {
    const Material m = load_material(kDir / "mica.mat");
    EXPECT_EQ(m.name, "mica");
    const auto* np = std::get_if<NinhamParsegianModel>(&m.model);
    ASSERT_NE(np, nullptr);
    EXPECT_TRUE(np->include_debye());
    EXPECT_DOUBLE_EQ(np->params().uv_frequency, 10.33 * ev);
    EXPECT_DOUBLE_EQ(np->params().ir_strength, 3.12e-3 * ev * ev);
    EXPECT_DOUBLE_EQ(np->params().debye_amplitude, 0.4);
    EXPECT_DOUBLE_EQ(np->params().debye_relaxation, 5e-8);
}

TEST(MaterialFile, BundledSimpleModels) {
    EXPECT_TRUE(std::holds_alternative<IdealMetal>(load_material(kDir / "ideal-metal.mat").model));
    EXPECT_TRUE(std::holds_alternative<Vacuum>(load_material(kDir / "vacuum.mat").model));
    const auto si = load_material(kDir / "si.mat");
    EXPECT_NEAR(static_permittivity(si.model, 300).value, 11.66, 1e-9);
}

TEST(MaterialFile, BundledConductive) {
    const auto m = load_material(kDir / "si-conductive.mat");
    const auto* c = std::get_if<ConductiveDielectric>(&m.model);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->law().form(), ConductivityForm::bandgap);
    EXPECT_DOUBLE_EQ(c->law().activation(), 1.12 * casimir::constants::e_charge);
    EXPECT_DOUBLE_EQ(c->law().prefactor(), resistivity_to_sigma(9.0e-7));
    const auto metal = load_material(kDir / "si-doped-metallic.mat");
    EXPECT_EQ(std::get<ConductiveDielectric>(metal.model).law().form(), ConductivityForm::constant);
    const auto mott = load_material(kDir / "mott-dielectric.mat");
    EXPECT_EQ(std::get<ConductiveDielectric>(mott.model).law().form(), ConductivityForm::mott);
}

TEST(MaterialFile, EveryBundledFileLoads) {
    int count = 0;
    for (const auto& entry : fs::directory_iterator(kDir)) {
        if (entry.path().extension() != ".mat") continue;
        EXPECT_NO_THROW(load_material(entry.path())) << entry.path();
        ++count;
    }
    EXPECT_GE(count, 8);
}

TEST(MaterialFile, ZeroFrequencyIsInvariantViolation) {
    const std::string err = error_of(
        "name: bad\nmodel: oscillator\noscillators:\n  - strength: 1 eV^2\n    frequency: 0 eV\n");
    EXPECT_NE(err.find("invariant violation"), std::string::npos) << err;
    EXPECT_NE(err.find("test.mat:4:"), std::string::npos) << err;
}

TEST(MaterialFile, Errors) {
    EXPECT_NE(error_of("name: x\nmodel: drude\n").find("unknown model 'drude'"), std::string::npos);
    EXPECT_NE(error_of("name: x\nmodel: vacuum\ncolour: red\n").find("unknown key 'colour'"), std::string::npos);
    EXPECT_NE(error_of("name: x\nmodel: oscillator\noscillators:\n  - strength: 1 eV^2\n    frequency: 2 Hz\n")
                  .find("unit 'Hz' not accepted"),
              std::string::npos);
    EXPECT_NE(error_of("name: x\nmodel: oscillator\noscillators:\n  - strength: 1 eV^2\n    frequency: abc eV\n")
                  .find("cannot parse number"),
              std::string::npos);
    EXPECT_NE(error_of("name: x\nmodel: oscillator\n").find("missing required key 'oscillators'"),
              std::string::npos);
    EXPECT_NE(error_of("name: [unclosed\n").find("parse error"), std::string::npos);
    EXPECT_NE(error_of("model: vacuum\n").find("missing required key 'name'"), std::string::npos);
    EXPECT_NE(error_of("name: x\nmodel: conductive\noscillators:\n  - {strength: 1 eV^2, frequency: 1 eV}\n"
                       "conductivity: {law: constant, prefactor: 1 ohm.cm, activation: 1 eV}\n")
                  .find("not allowed"),
              std::string::npos);
    EXPECT_THROW(load_material(kDir / "does-not-exist.mat"), MaterialFileError);
}

TEST(MaterialFile, RoundTripPreservesResponse) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> logxi(8.0, 18.0);
    std::uniform_real_distribution<double> temp(0.0, 600.0);
    const fs::path tmp = fs::temp_directory_path() / "casimir_roundtrip.mat";
    for (const char* file : {"mica.mat", "si-conductive.mat", "mott-dielectric.mat", "mica-oscillator.mat"}) {
        const Material original = load_material(kDir / file);
        save_material(original, tmp);
        const Material copy = load_material(tmp);
        EXPECT_EQ(copy.name, original.name);
        EXPECT_EQ(copy.model, original.model) << file;
        for (int i = 0; i < 100; ++i) {
            const double xi = std::pow(10.0, logxi(rng));
            const double T = temp(rng);
            const double a = eval_eps(original.model, xi, T).value;
            const double b = eval_eps(copy.model, xi, T).value;
            EXPECT_NEAR(b / a, 1.0, 1e-12) << file << " xi = " << xi << " T = " << T;
        }
    }
    fs::remove(tmp);
}

}  // namespace
