#include "casimir/material_file.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <span>
#include <map>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir::materials {
namespace {

enum class Dimension { frequency, strength, time, energy, conductivity, dimensionless };

struct Unit {
    std::string_view suffix;
    double scale;  // multiply to reach the internal unit
};

class Parser {
public:
    explicit Parser(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const YAML::Node& node, const std::string& what) const {
        std::string loc = origin_;
        if (node.IsDefined() && node.Mark().line >= 0) {
            loc += ":" + std::to_string(node.Mark().line + 1) + ":" + std::to_string(node.Mark().column + 1);
        }
        throw MaterialFileError(loc, what);
    }

    void expect_map(const YAML::Node& node, const std::string& what) const {
        if (!node.IsMap()) fail(node, what + " must be a mapping");
    }

    void reject_unknown(const YAML::Node& node, std::initializer_list<std::string_view> allowed,
                        const std::string& context) const {
        for (const auto& kv : node) {
            const auto key = kv.first.as<std::string>();
            bool known = false;
            for (auto a : allowed) known = known || key == a;
            if (!known) fail(kv.first, "unknown key '" + key + "' in " + context);
        }
    }

    YAML::Node required(const YAML::Node& parent, const char* key, const std::string& context) const {
        const YAML::Node node = parent[key];
        if (!node) fail(parent, "missing required key '" + std::string(key) + "' in " + context);
        return node;
    }

    std::string scalar(const YAML::Node& node, const std::string& key) const {
        if (!node.IsScalar()) fail(node, "'" + key + "' must be a scalar");
        return node.Scalar();
    }

    double number(const YAML::Node& node, const std::string& text, const std::string& key) const {
        const char* begin = text.c_str();
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
            fail(node, "'" + key + "': cannot parse number '" + text + "'");
        }
        return v;
    }

    double quantity(const YAML::Node& node, const std::string& key, Dimension dim) const {
        const std::string text = scalar(node, key);
        std::istringstream in(text);
        std::string value_text;
        std::string unit_text;
        std::string extra;
        in >> value_text >> unit_text >> extra;
        if (!extra.empty()) fail(node, "'" + key + "': expected '<number> <unit>', got '" + text + "'");
        const double value = number(node, value_text, key);

        if (dim == Dimension::dimensionless) {
            if (!unit_text.empty()) fail(node, "'" + key + "' is dimensionless; unexpected unit '" + unit_text + "'");
            return value;
        }
        if (unit_text.empty()) fail(node, "'" + key + "': missing unit");

        if (dim == Dimension::conductivity) {
            if (unit_text == "rad/s") return value;
            if (unit_text == "ohm.cm" || unit_text == "ohm.m") {
                if (!(value > 0.0)) fail(node, "'" + key + "': resistivity must be > 0");
                return resistivity_to_sigma(unit_text == "ohm.cm" ? value * 1e-2 : value);
            }
            fail(node, "'" + key + "': unit '" + unit_text + "' not accepted (rad/s, ohm.cm, ohm.m)");
        }

        constexpr double ev = constants::ev_to_radps;
        static constexpr Unit kFrequency[] = {{"rad/s", 1.0}, {"eV", ev}};
        static constexpr Unit kStrength[] = {{"rad^2/s^2", 1.0}, {"eV^2", ev * ev}};
        static constexpr Unit kTime[] = {{"s", 1.0}};
        static constexpr Unit kEnergy[] = {{"J", 1.0}, {"eV", constants::e_charge}};
        std::span<const Unit> units;
        switch (dim) {
            case Dimension::frequency:
                units = kFrequency;
                break;
            case Dimension::strength:
                units = kStrength;
                break;
            case Dimension::time:
                units = kTime;
                break;
            case Dimension::energy:
                units = kEnergy;
                break;
            default:
                break;
        }
        std::string accepted;
        for (const auto& u : units) {
            if (unit_text == u.suffix) return value * u.scale;
            accepted += (accepted.empty() ? "" : ", ") + std::string(u.suffix);
        }
        fail(node, "'" + key + "': unit '" + unit_text + "' not accepted (" + accepted + ")");
    }

    template <class F>
    auto guarded(const YAML::Node& node, F&& make) const {
        try {
            return make();
        } catch (const DomainError& e) {
            fail(node, std::string("invariant violation: ") + e.what());
        }
    }

    OscillatorModel oscillators(const YAML::Node& root) const {
        const YAML::Node list = required(root, "oscillators", "oscillator model");
        if (!list.IsSequence() || list.size() == 0) fail(list, "'oscillators' must be a non-empty list");
        std::vector<Oscillator> out;
        for (const auto& item : list) {
            expect_map(item, "oscillator entry");
            reject_unknown(item, {"strength", "frequency", "damping"}, "oscillator entry");
            const double g = quantity(required(item, "strength", "oscillator"), "strength", Dimension::strength);
            const double w = quantity(required(item, "frequency", "oscillator"), "frequency", Dimension::frequency);
            const double gamma = item["damping"] ? quantity(item["damping"], "damping", Dimension::frequency) : 0.0;
            out.push_back(guarded(item, [&] { return Oscillator(g, w, gamma); }));
        }
        return OscillatorModel(std::move(out));
    }

    ConductivityLaw conductivity(const YAML::Node& node) const {
        expect_map(node, "'conductivity'");
        reject_unknown(node, {"law", "prefactor", "activation"}, "conductivity");
        const YAML::Node law_node = required(node, "law", "conductivity");
        const std::string law = scalar(law_node, "law");
        const double prefactor =
            quantity(required(node, "prefactor", "conductivity"), "prefactor", Dimension::conductivity);
        if (law == "constant") {
            if (node["activation"]) fail(node["activation"], "'activation' not allowed for a constant law");
            return guarded(node, [&] { return ConductivityLaw::constant(prefactor); });
        }
        ConductivityForm form;
        if (law == "bandgap") {
            form = ConductivityForm::bandgap;
        } else if (law == "mott") {
            form = ConductivityForm::mott;
        } else {
            fail(law_node, "unknown conductivity law '" + law + "' (bandgap, mott, constant)");
        }
        const double activation =
            quantity(required(node, "activation", "conductivity"), "activation", Dimension::energy);
        return guarded(node, [&] { return ConductivityLaw(form, prefactor, activation); });
    }

    NinhamParsegianModel ninham_parsegian(const YAML::Node& root) const {
        auto oscillator_block = [&](const char* key, double& strength, double& frequency) {
            const YAML::Node block = required(root, key, "ninham-parsegian model");
            expect_map(block, std::string("'") + key + "'");
            reject_unknown(block, {"strength", "frequency"}, key);
            strength = quantity(required(block, "strength", key), "strength", Dimension::strength);
            frequency = quantity(required(block, "frequency", key), "frequency", Dimension::frequency);
        };
        NinhamParsegianModel::Params p{};
        oscillator_block("uv", p.uv_strength, p.uv_frequency);
        oscillator_block("ir", p.ir_strength, p.ir_frequency);
        const YAML::Node debye = required(root, "debye", "ninham-parsegian model");
        expect_map(debye, "'debye'");
        reject_unknown(debye, {"amplitude", "relaxation"}, "debye");
        p.debye_amplitude = quantity(required(debye, "amplitude", "debye"), "amplitude", Dimension::dimensionless);
        p.debye_relaxation = quantity(required(debye, "relaxation", "debye"), "relaxation", Dimension::time);
        bool include = true;
        if (const YAML::Node flag = root["include_debye"]) {
            const std::string v = scalar(flag, "include_debye");
            if (v == "true") {
                include = true;
            } else if (v == "false") {
                include = false;
            } else {
                fail(flag, "'include_debye' must be true or false");
            }
        }
        return guarded(root, [&] { return NinhamParsegianModel(p, include); });
    }

    Material parse(const YAML::Node& root) const {
        if (!root.IsMap()) fail(root, "material file must be a mapping");
        const std::string name = scalar(required(root, "name", "material"), "name");
        const YAML::Node model_node = required(root, "model", "material");
        const std::string model = scalar(model_node, "model");

        if (model == "vacuum" || model == "ideal-metal") {
            reject_unknown(root, {"name", "model"}, model + " material");
            if (model == "vacuum") return {name, Vacuum{}};
            return {name, IdealMetal{}};
        }
        if (model == "oscillator") {
            reject_unknown(root, {"name", "model", "oscillators"}, "oscillator material");
            return {name, oscillators(root)};
        }
        if (model == "conductive") {
            reject_unknown(root, {"name", "model", "oscillators", "conductivity"}, "conductive material");
            OscillatorModel base = oscillators(root);
            ConductivityLaw law = conductivity(required(root, "conductivity", "conductive material"));
            return {name, ConductiveDielectric(std::move(base), law)};
        }
        if (model == "ninham-parsegian") {
            reject_unknown(root, {"name", "model", "uv", "ir", "debye", "include_debye"}, "ninham-parsegian material");
            return {name, ninham_parsegian(root)};
        }
        fail(model_node,
             "unknown model '" + model + "' (oscillator, conductive, ninham-parsegian, ideal-metal, vacuum)");
    }

private:
    std::string origin_;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_oscillators(std::ostringstream& out, const OscillatorModel& m) {
    out << "oscillators:\n";
    for (const auto& osc : m.oscillators()) {
        out << "  - strength: " << fmt(osc.strength()) << " rad^2/s^2\n"
            << "    frequency: " << fmt(osc.frequency()) << " rad/s\n"
            << "    damping: " << fmt(osc.damping()) << " rad/s\n";
    }
}

const char* law_name(ConductivityForm f) {
    switch (f) {
        case ConductivityForm::bandgap:
            return "bandgap";
        case ConductivityForm::mott:
            return "mott";
        case ConductivityForm::constant:
            return "constant";
    }
    return "";
}

}  // namespace

Material parse_material(std::string_view text, const std::string& origin) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        throw MaterialFileError(origin + ":" + std::to_string(e.mark.line + 1) + ":" + std::to_string(e.mark.column + 1),
                                "parse error: " + e.msg);
    }
    try {
        return Parser(origin).parse(root);
    } catch (const YAML::Exception& e) {
        throw MaterialFileError(origin, std::string("malformed material: ") + e.what());
    }
}

Material load_material(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MaterialFileError(path.string(), "cannot open material file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_material(buf.str(), path.string());
}

std::string format_material(const Material& material) {
    std::ostringstream out;
    out << "name: \"" << material.name << "\"\n";
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Vacuum>) {
                out << "model: vacuum\n";
            } else if constexpr (std::is_same_v<T, IdealMetal>) {
                out << "model: ideal-metal\n";
            } else if constexpr (std::is_same_v<T, OscillatorModel>) {
                out << "model: oscillator\n";
                write_oscillators(out, m);
            } else if constexpr (std::is_same_v<T, ConductiveDielectric>) {
                out << "model: conductive\n";
                write_oscillators(out, m.base());
                out << "conductivity:\n"
                    << "  law: " << law_name(m.law().form()) << "\n"
                    << "  prefactor: " << fmt(m.law().prefactor()) << " rad/s\n";
                if (m.law().form() != ConductivityForm::constant) {
                    out << "  activation: " << fmt(m.law().activation()) << " J\n";
                }
            } else {
                const auto& p = m.params();
                out << "model: ninham-parsegian\n"
                    << "uv:\n  strength: " << fmt(p.uv_strength) << " rad^2/s^2\n"
                    << "  frequency: " << fmt(p.uv_frequency) << " rad/s\n"
                    << "ir:\n  strength: " << fmt(p.ir_strength) << " rad^2/s^2\n"
                    << "  frequency: " << fmt(p.ir_frequency) << " rad/s\n"
                    << "debye:\n  amplitude: " << fmt(p.debye_amplitude) << "\n"
                    << "  relaxation: " << fmt(p.debye_relaxation) << " s\n"
                    << "include_debye: " << (m.include_debye() ? "true" : "false") << "\n";
            }
        },
        material.model);
    return out.str();
}

void save_material(const Material& material, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw MaterialFileError(path.string(), "cannot open file for writing");
    out << format_material(material);
    if (!out) throw MaterialFileError(path.string(), "write failed");
}

}  // namespace casimir::materials
