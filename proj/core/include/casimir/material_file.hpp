#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "casimir/materials.hpp"

namespace casimir::materials {

// Material description files are YAML mappings. See data/materials/README.md
// for the grammar; every key not listed there is rejected.

/// Parse and validate a material description. `origin` names the source in
/// error messages. Throws MaterialFileError with a "origin:line:column" prefix.
Material parse_material(std::string_view text, const std::string& origin = "<string>");

Material load_material(const std::filesystem::path& path);

/// Serialise in canonical units (rad/s, (rad/s)^2, s, J) with round-trip
/// precision; parse_material(format_material(m)) reproduces m exactly.
std::string format_material(const Material& material);

void save_material(const Material& material, const std::filesystem::path& path);

}  // namespace casimir::materials
