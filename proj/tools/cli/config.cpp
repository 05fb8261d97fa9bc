#include "cli/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include <yaml-cpp/yaml.h>

#include "casimir/material_file.hpp"

namespace casimir::cli {
namespace {

double parse_number(std::string_view text, std::string_view what) {
    const std::string s(text);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        throw ConfigError(std::string(what) + ": cannot parse number '" + s + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <typename T>
void overlay(std::optional<T>& dst, const std::optional<T>& src) {
    if (src) dst = src;
}

}  // namespace

std::vector<double> parse_range(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() == 1) return {parse_number(parts[0], "value")};
    if (parts.size() != 3 && parts.size() != 4) {
        throw ConfigError("range '" + std::string(text) + "': expected start:stop:count(:log)");
    }
    const double start = parse_number(parts[0], "range start");
    const double stop = parse_number(parts[1], "range stop");
    const double count_d = parse_number(parts[2], "range count");
    if (count_d != std::floor(count_d) || count_d < 2 || count_d > 1e6) {
        throw ConfigError("range '" + std::string(text) + "': count must be an integer in [2, 1e6]");
    }
    const bool log = parts.size() == 4;
    if (log && parts[3] != "log") {
        throw ConfigError("range '" + std::string(text) + "': fourth field must be 'log'");
    }
    if (log && !(start > 0.0 && stop > 0.0)) {
        throw ConfigError("range '" + std::string(text) + "': log spacing needs positive ends");
    }
    const auto count = static_cast<std::size_t>(count_d);
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(count - 1);
        out[i] = log ? start * std::pow(stop / start, f) : start + (stop - start) * f;
    }
    out.front() = start;
    out.back() = stop;
    return out;
}

ConfigLayer load_config_layer(const std::filesystem::path& path) {
    YAML::Node root;
    try {
        root = YAML::LoadFile(path.string());
    } catch (const YAML::Exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    if (!root.IsMap()) throw ConfigError(path.string() + ": config must be a mapping");

    const auto base = path.parent_path();
    auto resolve_path = [&](const std::string& p) {
        std::filesystem::path q(p);
        return q.is_absolute() ? q : base / q;
    };

    ConfigLayer layer;
    for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        const YAML::Node& v = kv.second;
        try {
            if (key == "mat1") {
                layer.mat1 = resolve_path(v.as<std::string>());
            } else if (key == "mat2") {
                layer.mat2 = resolve_path(v.as<std::string>());
            } else if (key == "a") {
                layer.a = v.as<std::string>();
            } else if (key == "t") {
                layer.T = v.as<std::string>();
            } else if (key == "include_conductivity") {
                layer.include_conductivity = v.as<bool>();
            } else if (key == "include_debye") {
                layer.include_debye = v.as<bool>();
            } else if (key == "out") {
                layer.out = resolve_path(v.as<std::string>());
            } else if (key == "quad_abs_tol") {
                layer.quad_abs_tol = v.as<double>();
            } else if (key == "sum_rel_tol") {
                layer.sum_rel_tol = v.as<double>();
            } else if (key == "max_terms") {
                layer.max_terms = v.as<long>();
            } else if (key == "energy_rel_tol") {
                layer.energy_rel_tol = v.as<double>();
            } else {
                throw ConfigError(path.string() + ":" + std::to_string(kv.first.Mark().line + 1) +
                                  ": unknown key '" + key + "'");
            }
        } catch (const YAML::Exception& e) {
            throw ConfigError(path.string() + ":" + std::to_string(v.Mark().line + 1) + ": bad value for '" + key +
                              "': " + e.what());
        }
    }
    return layer;
}

namespace {

enum Field : unsigned {
    kMat1 = 1u << 0,
    kMat2 = 1u << 1,
    kA = 1u << 2,
    kT = 1u << 3,
    kConductivity = 1u << 4,
    kDebye = 1u << 5,
    kOut = 1u << 6,
    kNumerics = 1u << 7,
};

struct CommandFields {
    std::string_view command;
    unsigned required;
    unsigned optional;
};

constexpr CommandFields kCommands[] = {
    {"free-energy", kMat1 | kA | kT, kMat2 | kConductivity | kDebye | kOut | kNumerics},
    {"entropy", kMat1 | kA | kT, kMat2 | kConductivity | kDebye | kOut | kNumerics},
    {"nernst", kMat1 | kA, kMat2 | kT | kConductivity | kDebye | kOut | kNumerics},
    {"transition", kMat1 | kMat2 | kA | kT, kDebye | kOut | kNumerics},
    {"fig4b", kMat1, kT | kConductivity | kOut | kNumerics},
    {"verify", 0u, kOut},
};

constexpr std::pair<Field, std::string_view> kFieldNames[] = {
    {kMat1, "mat1"}, {kMat2, "mat2"}, {kA, "a"}, {kT, "t"}, {kConductivity, "include-conductivity"},
    {kDebye, "include-debye"}, {kOut, "out"}, {kNumerics, "tolerance overrides"},
};

void check_fields(std::string_view command, const ConfigLayer& m) {
    const CommandFields* fields = nullptr;
    for (const auto& c : kCommands) {
        if (c.command == command) fields = &c;
    }
    if (!fields) throw ConfigError("unknown command '" + std::string(command) + "'");

    unsigned present = 0;
    if (m.mat1) present |= kMat1;
    if (m.mat2) present |= kMat2;
    if (m.a) present |= kA;
    if (m.T) present |= kT;
    if (m.include_conductivity) present |= kConductivity;
    if (m.include_debye) present |= kDebye;
    if (m.out) present |= kOut;
    if (m.quad_abs_tol || m.sum_rel_tol || m.max_terms || m.energy_rel_tol) present |= kNumerics;

    for (const auto& [bit, name] : kFieldNames) {
        if ((fields->required & bit) && !(present & bit)) {
            throw ConfigError(std::string(command) + ": missing required field '" + std::string(name) + "'");
        }
        if ((present & bit) && !((fields->required | fields->optional) & bit)) {
            throw ConfigError(std::string(command) + ": field '" + std::string(name) + "' does not apply");
        }
    }
}

}  // namespace

RunConfig resolve(std::string_view command, const std::vector<ConfigLayer>& layers) {
    ConfigLayer merged;
    for (const auto& l : layers) {
        overlay(merged.mat1, l.mat1);
        overlay(merged.mat2, l.mat2);
        overlay(merged.a, l.a);
        overlay(merged.T, l.T);
        overlay(merged.include_conductivity, l.include_conductivity);
        overlay(merged.include_debye, l.include_debye);
        overlay(merged.out, l.out);
        overlay(merged.quad_abs_tol, l.quad_abs_tol);
        overlay(merged.sum_rel_tol, l.sum_rel_tol);
        overlay(merged.max_terms, l.max_terms);
        overlay(merged.energy_rel_tol, l.energy_rel_tol);
    }
    check_fields(command, merged);

    RunConfig cfg;
    cfg.mat1 = merged.mat1;
    cfg.mat2 = merged.mat2 ? merged.mat2 : merged.mat1;
    if (merged.a) cfg.a = parse_range(*merged.a);
    if (merged.T) cfg.T = parse_range(*merged.T);
    for (double a : cfg.a) {
        if (!(a >= lifshitz::PlateSystem::kMinSeparation && a <= lifshitz::PlateSystem::kMaxSeparation)) {
            throw ConfigError("separation " + std::to_string(a) + " m outside [1e-9, 1e-4]");
        }
    }
    for (double T : cfg.T) {
        if (!(T > 0.0)) throw ConfigError("temperatures must be > 0");
    }
    if (merged.include_conductivity) cfg.toggles.include_conductivity = *merged.include_conductivity;
    if (merged.include_debye) {
        cfg.toggles.include_debye = *merged.include_debye;
        cfg.debye_override = *merged.include_debye;
    }
    cfg.out = merged.out;

    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) throw ConfigError(std::string(name) + " must be > 0");
        return v;
    };
    if (merged.quad_abs_tol) cfg.numerics.quad_abs_tol = positive(*merged.quad_abs_tol, "quad_abs_tol");
    if (merged.sum_rel_tol) cfg.numerics.sum_rel_tol = positive(*merged.sum_rel_tol, "sum_rel_tol");
    if (merged.energy_rel_tol) cfg.numerics.energy_rel_tol = positive(*merged.energy_rel_tol, "energy_rel_tol");
    if (merged.max_terms) {
        if (*merged.max_terms < 1) throw ConfigError("max_terms must be >= 1");
        cfg.numerics.max_terms = *merged.max_terms;
    }
    return cfg;
}

std::pair<materials::Material, materials::Material> load_plates(const RunConfig& cfg) {
    if (!cfg.mat1) throw ConfigError("--mat1 is required");
    auto load = [&](const std::filesystem::path& p) {
        materials::Material m = materials::load_material(p);
        m.model = materials::apply_toggles(m.model, cfg.toggles);
        if (const auto* np = std::get_if<materials::NinhamParsegianModel>(&m.model); np && cfg.debye_override) {
            m.model = np->with_debye(*cfg.debye_override);
        }
        return m;
    };
    return {load(*cfg.mat1), load(*cfg.mat2)};
}

}  // namespace casimir::cli
