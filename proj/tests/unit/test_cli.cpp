#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/csv.hpp"
#include "cli/parallel.hpp"
#include "cli/verify.hpp"
#include "casimir/material_file.hpp"

namespace {

using namespace casimir::cli;
namespace fs = std::filesystem;
using casimir::materials::PermittivityModel;

const fs::path kDir = CASIMIR_MATERIALS_DIR;

TEST(Range, Forms) {
    EXPECT_EQ(parse_range("300"), std::vector<double>{300.0});
    EXPECT_EQ(parse_range("1:3:3"), (std::vector<double>{1.0, 2.0, 3.0}));
    const auto log = parse_range("1e-7:1e-5:3:log");
    ASSERT_EQ(log.size(), 3u);
    EXPECT_NEAR(log[1], 1e-6, 1e-18);
    EXPECT_EQ(parse_range("300:10:2"), (std::vector<double>{300.0, 10.0}));
}

TEST(Range, Errors) {
    for (const char* bad : {"", "abc", "1:2", "1:2:1", "1:2:2.5", "1:2:3:lin", "0:1:3:log", "1:2:3:log:x", "1e999"}) {
        EXPECT_THROW(parse_range(bad), ConfigError) << bad;
    }
}

TEST(Config, FlagsOverrideFile) {
    const fs::path dir = fs::temp_directory_path() / "casimir_cfg_test";
    fs::create_directories(dir);
    std::ofstream(dir / "run.yaml") << "mat1: mica.mat\na: 5e-7\nt: 1:300:4\ninclude_debye: false\nsum_rel_tol: 1e-12\n";
    ConfigLayer flags;
    flags.T = "300";
    const RunConfig cfg = resolve("free-energy", {load_config_layer(dir / "run.yaml"), flags});
    EXPECT_EQ(*cfg.mat1, dir / "mica.mat");
    EXPECT_EQ(*cfg.mat2, dir / "mica.mat");
    EXPECT_EQ(cfg.a, std::vector<double>{5e-7});
    EXPECT_EQ(cfg.T, std::vector<double>{300.0});
    EXPECT_FALSE(cfg.toggles.include_debye);
    EXPECT_EQ(cfg.numerics.sum_rel_tol, 1e-12);
    std::ofstream(dir / "bad.yaml") << "mat1: x\nfoo: 1\n";
    EXPECT_THROW(load_config_layer(dir / "bad.yaml"), ConfigError);
    fs::remove_all(dir);
}

TEST(Config, CommandFields) {
    ConfigLayer l;
    l.mat1 = "m.mat";
    EXPECT_THROW(resolve("free-energy", {l}), ConfigError);
    l.a = "1e-6";
    l.T = "300";
    EXPECT_NO_THROW(resolve("free-energy", {l}));
    EXPECT_THROW(resolve("fig4b", {l}), ConfigError);
    EXPECT_THROW(resolve("verify", {l}), ConfigError);
    EXPECT_THROW(resolve("transition", {l}), ConfigError);
    EXPECT_THROW(resolve("nonsense", {l}), ConfigError);
    ConfigLayer sep;
    sep.mat1 = "m.mat";
    sep.a = "1e-12";
    sep.T = "300";
    EXPECT_THROW(resolve("free-energy", {sep}), ConfigError);
}

TEST(Config, TogglesApplyToLoadedPlates) {
    RunConfig cfg;
    cfg.mat1 = kDir / "si-conductive.mat";
    cfg.mat2 = kDir / "mica.mat";
    cfg.toggles = {false, false};
    const auto [m1, m2] = load_plates(cfg);
    EXPECT_TRUE(std::holds_alternative<casimir::materials::OscillatorModel>(m1.model));
    EXPECT_FALSE(std::get<casimir::materials::NinhamParsegianModel>(m2.model).include_debye());
}

TEST(Csv, Format) {
    EXPECT_EQ(format_sci(1.0), "1.00000000000e+00");
    EXPECT_EQ(format_sci(-2.5e-10), "-2.50000000000e-10");
    std::ostringstream out;
    write_csv(out, {{"x", "y"}, {{"1", "2"}, {"3", "4"}}});
    EXPECT_EQ(out.str(), "x,y\n1,2\n3,4\n");
}

TEST(Parallel, OrderedResultsAndErrors) {
    const auto v = parallel_map(100, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i));
    EXPECT_THROW(parallel_map(10,
                              [](std::size_t i) {
                                  if (i == 3) throw std::runtime_error("boom");
                                  return 0;
                              }),
                 std::runtime_error);
}

TEST(Commands, FreeEnergyMicaDebyeOff) {
    const auto mica = casimir::materials::load_material(kDir / "mica.mat");
    const PermittivityModel off = casimir::materials::apply_toggles(mica.model, {true, false});
    const Table t = free_energy_table(off, off, {5e-7}, {300});
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.header.size(), 7u);
    EXPECT_NEAR(std::stod(t.rows[0][4]), 0.135, 0.015);
    EXPECT_EQ(t.rows[0][6], "true");
}

TEST(Commands, VacuumRowsAreZero) {
    const PermittivityModel vac = casimir::materials::Vacuum{};
    const Table t = free_energy_table(vac, vac, {1e-7, 1e-6}, {10, 300});
    ASSERT_EQ(t.rows.size(), 4u);
    for (const auto& r : t.rows) {
        EXPECT_EQ(std::stod(r[2]), 0.0);
        EXPECT_EQ(std::stod(r[3]), 0.0);
    }
    for (const auto& r : entropy_table(vac, vac, {1e-6}, {10, 300}).rows) EXPECT_EQ(std::stod(r[2]), 0.0);
}

TEST(Commands, SweepIsDeterministic) {
    const PermittivityModel m = reference::mica();
    std::ostringstream a;
    std::ostringstream b;
    write_csv(a, free_energy_table(m, m, {1e-7, 5e-7}, {50, 300}));
    write_csv(b, free_energy_table(m, m, {1e-7, 5e-7}, {50, 300}));
    EXPECT_EQ(a.str(), b.str());
}

TEST(Commands, EntropyColumns) {
    const PermittivityModel m = reference::mica_oscillator();
    const Table t = entropy_table(m, m, {1e-6}, {300, 100, 30, 10});
    double prev = INFINITY;
    for (const auto& r : t.rows) {
        const double S = std::stod(r[2]);
        EXPECT_GT(S, 0.0);
        EXPECT_LT(S, prev);
        prev = S;
    }
    const PermittivityModel c = reference::si_conductive();
    const Table tc = entropy_table(c, c, {1e-6}, {30, 10, 3});
    EXPECT_NEAR(std::stod(tc.rows[2][2]) / std::stod(tc.rows[1][2]), 1.0, 0.01);
}

TEST(Commands, TransitionScaling) {
    const auto r1 = transition(casimir::materials::IdealMetal{}, reference::si_doped_metallic(), 5e-6, 300);
    EXPECT_LT(r1.agreement, 0.01);
    EXPECT_LT(r1.jump_numeric, 0.0);
    const auto r2 = transition(casimir::materials::IdealMetal{}, reference::si_doped_metallic(), 10e-6, 300);
    EXPECT_NEAR(r2.jump_numeric / r1.jump_numeric, 0.25, 0.01);
    const casimir::materials::ConductiveDielectric stiff(
        casimir::materials::OscillatorModel({casimir::materials::Oscillator(1e40, 6.6e15)}),
        reference::si_doped_metallic().law());
    const auto r3 = transition(casimir::materials::IdealMetal{}, stiff, 5e-6, 300);
    EXPECT_LT(std::abs(r3.jump_numeric), 1e-3 * std::abs(r1.jump_numeric));
}

TEST(Commands, Fig4bRow) {
    const auto rows = fig4b(reference::mica(), {1.0, 300.0});
    ASSERT_EQ(rows.size(), 2u);
    for (int c = 0; c < 3; ++c) {
        EXPECT_LT(std::abs(rows[0].rel[2 * c]), 1e-6);
        // The Debye term's damping makes the correction linear in T.
        EXPECT_GT(rows[0].rel[2 * c + 1], 0.0);
        EXPECT_LT(rows[0].rel[2 * c + 1], 1e-3);
    }
    EXPECT_NEAR(rows[1].rel[2], 0.135, 0.015);
    for (int c = 0; c < 3; ++c) EXPECT_GT(rows[1].rel[2 * c + 1], rows[1].rel[2 * c]);
    const Table t = fig4b_table(rows);
    EXPECT_EQ(t.header.size(), 7u);
    EXPECT_EQ(default_fig4b_grid().front(), 1.0);
}

TEST(Reference, MatchesBundledFiles) {
    using casimir::materials::load_material;
    EXPECT_EQ(load_material(kDir / "mica.mat").model, PermittivityModel(reference::mica()));
    EXPECT_EQ(load_material(kDir / "mica-electronic.mat").model, PermittivityModel(reference::mica_electronic()));
    EXPECT_EQ(load_material(kDir / "mica-oscillator.mat").model, PermittivityModel(reference::mica_oscillator()));
    EXPECT_EQ(load_material(kDir / "si.mat").model, PermittivityModel(reference::si()));
    EXPECT_EQ(load_material(kDir / "si-conductive.mat").model, PermittivityModel(reference::si_conductive()));
    EXPECT_EQ(load_material(kDir / "si-doped-metallic.mat").model,
              PermittivityModel(reference::si_doped_metallic()));
}

}  // namespace
