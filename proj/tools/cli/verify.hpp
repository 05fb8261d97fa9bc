#pragma once

#include <functional>
#include <string>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir::cli {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;     // measured values against the bar
    double seconds = 0.0;
    double budget_seconds = 0.0;  // 0: no runtime bar
};

/// Reference plate models used by the acceptance checks. They match the
/// files in data/materials.
namespace reference {
materials::NinhamParsegianModel mica();
materials::OscillatorModel mica_electronic();
materials::OscillatorModel mica_oscillator();
materials::OscillatorModel si();
materials::ConductiveDielectric si_conductive();
materials::ConductiveDielectric si_doped_metallic();
}  // namespace reference

/// Run acceptance criteria 1-10 in order. `report` is called after each one.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& report = {});

/// "PASS [n] name: detail (t s)" or "FAIL ...".
std::string format_result(const CriterionResult& r);

}  // namespace casimir::cli
