#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"

namespace casimir::cli {

/// Bad command line or config file. Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse "VALUE" or "start:stop:count" or "start:stop:count:log".
/// Linear by default; the log form needs start, stop > 0.
std::vector<double> parse_range(std::string_view text);

struct RunConfig {
    std::optional<std::filesystem::path> mat1;
    std::optional<std::filesystem::path> mat2;  // defaults to mat1
    std::vector<double> a;                      // m
    std::vector<double> T;                      // K
    materials::Toggles toggles;
    /// Set when the Debye toggle was given explicitly; it then overrides the
    /// include_debye flag stored in a material file either way.
    std::optional<bool> debye_override;
    std::optional<std::filesystem::path> out;
    lifshitz::Options numerics;
};

/// Partial settings from one source. Unset fields leave the lower layer alone.
struct ConfigLayer {
    std::optional<std::filesystem::path> mat1;
    std::optional<std::filesystem::path> mat2;
    std::optional<std::string> a;
    std::optional<std::string> T;
    std::optional<bool> include_conductivity;
    std::optional<bool> include_debye;
    std::optional<std::filesystem::path> out;
    std::optional<double> quad_abs_tol;
    std::optional<double> sum_rel_tol;
    std::optional<long> max_terms;
    std::optional<double> energy_rel_tol;
};

/// Read a YAML config file. Keys: mat1, mat2, a, t, include_conductivity,
/// include_debye, out, quad_abs_tol, sum_rel_tol, max_terms, energy_rel_tol.
/// Relative material and output paths resolve against the file's directory.
ConfigLayer load_config_layer(const std::filesystem::path& path);

/// Merge layers (later ones win) and check that `command` gets every field it
/// needs and none it would ignore. Commands: free-energy, entropy, nernst,
/// transition, fig4b, verify.
RunConfig resolve(std::string_view command, const std::vector<ConfigLayer>& layers);

/// Load mat1 and mat2 with toggles applied. Throws ConfigError when mat1 is
/// missing.
std::pair<materials::Material, materials::Material> load_plates(const RunConfig& cfg);

}  // namespace casimir::cli
