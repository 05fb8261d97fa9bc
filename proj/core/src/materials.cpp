#include "casimir/materials.hpp"

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir::materials {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

void check_frequency_and_temperature(double xi, double T) {
    require(std::isfinite(xi) && xi >= 0.0, "eval_eps: frequency must be finite and >= 0");
    require(std::isfinite(T) && T >= 0.0, "eval_eps: temperature must be finite and >= 0");
}

}  // namespace

Oscillator::Oscillator(double strength, double frequency, double damping)
    : strength_(strength), frequency_(frequency), damping_(damping) {
    require(std::isfinite(strength) && strength > 0.0, "oscillator strength must be > 0");
    require(std::isfinite(frequency) && frequency > 0.0, "oscillator frequency must be > 0");
    require(std::isfinite(damping) && damping >= 0.0, "oscillator damping must be >= 0");
}

double Oscillator::response(double xi) const {
    return strength_ / (frequency_ * frequency_ + xi * xi + damping_ * xi);
}

OscillatorModel::OscillatorModel(std::vector<Oscillator> oscillators) : oscillators_(std::move(oscillators)) {
    require(!oscillators_.empty(), "oscillator model needs at least one oscillator");
}

double OscillatorModel::eps(double xi) const {
    double sum = 1.0;
    for (const auto& osc : oscillators_) sum += osc.response(xi);
    return sum;
}

bool OscillatorModel::undamped() const {
    for (const auto& osc : oscillators_) {
        if (osc.damping() != 0.0) return false;
    }
    return true;
}

ConductivityLaw::ConductivityLaw(ConductivityForm form, double prefactor, double activation_J)
    : form_(form), prefactor_(prefactor), activation_(activation_J) {
    require(std::isfinite(prefactor) && prefactor > 0.0, "conductivity prefactor must be > 0");
    if (form == ConductivityForm::constant) {
        activation_ = 0.0;
    } else {
        require(std::isfinite(activation_J) && activation_J > 0.0, "activation energy must be > 0");
    }
}

ConductivityLaw ConductivityLaw::bandgap_ev(double prefactor, double gap_ev) {
    return {ConductivityForm::bandgap, prefactor, gap_ev * constants::e_charge};
}

ConductivityLaw ConductivityLaw::mott_ev(double prefactor, double c_ev) {
    return {ConductivityForm::mott, prefactor, c_ev * constants::e_charge};
}

ConductivityLaw ConductivityLaw::constant(double prefactor) {
    return {ConductivityForm::constant, prefactor, 0.0};
}

NinhamParsegianModel::NinhamParsegianModel(const Params& p, bool include_debye)
    : params_(p), include_debye_(include_debye) {
    require(std::isfinite(p.uv_strength) && p.uv_strength > 0.0, "UV oscillator strength must be > 0");
    require(std::isfinite(p.uv_frequency) && p.uv_frequency > 0.0, "UV frequency must be > 0");
    require(std::isfinite(p.ir_strength) && p.ir_strength > 0.0, "IR oscillator strength must be > 0");
    require(std::isfinite(p.ir_frequency) && p.ir_frequency > 0.0, "IR frequency must be > 0");
    require(std::isfinite(p.debye_amplitude) && p.debye_amplitude >= 0.0, "Debye amplitude must be >= 0");
    require(std::isfinite(p.debye_relaxation) && p.debye_relaxation > 0.0, "Debye relaxation time must be > 0");
}

double NinhamParsegianModel::eps(double xi) const {
    const auto& p = params_;
    double v = 1.0 + p.uv_strength / (p.uv_frequency * p.uv_frequency + xi * xi) +
               p.ir_strength / (p.ir_frequency * p.ir_frequency + xi * xi);
    if (include_debye_) v += p.debye_amplitude / (1.0 + xi * p.debye_relaxation);
    return v;
}

double NinhamParsegianModel::static_eps_ei() const {
    const auto& p = params_;
    return 1.0 + p.uv_strength / (p.uv_frequency * p.uv_frequency) +
           p.ir_strength / (p.ir_frequency * p.ir_frequency);
}

OscillatorModel NinhamParsegianModel::oscillator_part() const {
    return OscillatorModel({Oscillator(params_.uv_strength, params_.uv_frequency),
                            Oscillator(params_.ir_strength, params_.ir_frequency)});
}

double sigma0(const ConductivityLaw& law, double T) {
    require(std::isfinite(T) && T >= 0.0, "sigma0: temperature must be >= 0");
    switch (law.form()) {
        case ConductivityForm::constant:
            return law.prefactor();
        case ConductivityForm::bandgap:
            if (T == 0.0) return 0.0;
            return law.prefactor() * std::exp(-law.activation() / (2.0 * constants::k_B * T));
        case ConductivityForm::mott:
            if (T == 0.0) return 0.0;
            return law.prefactor() * std::exp(-law.activation() / (constants::k_B * T));
    }
    return 0.0;
}

double beta(const ConductivityLaw& law, double T) {
    require(std::isfinite(T) && T >= 0.0, "beta: temperature must be >= 0");
    if (T == 0.0) {
        if (law.form() == ConductivityForm::constant) {
            throw DomainError("beta: diverges at T = 0 for a constant conductivity");
        }
        return 0.0;
    }
    return 2.0 * constants::hbar * sigma0(law, T) / (constants::k_B * T);
}

double resistivity_to_sigma(double rho_ohm_m) {
    require(!std::isnan(rho_ohm_m) && rho_ohm_m > 0.0, "resistivity must be > 0");
    if (std::isinf(rho_ohm_m)) return 0.0;
    return 1.0 / (constants::epsilon_vac * rho_ohm_m) / (4.0 * constants::pi);
}

double ev_to_radps(double energy_ev) { return energy_ev * constants::ev_to_radps; }

EpsValue eval_eps(const PermittivityModel& model, double xi, double T) {
    check_frequency_and_temperature(xi, T);
    return std::visit(
        overloaded{
            [](const Vacuum&) { return EpsValue::finite(1.0); },
            [&](const OscillatorModel& m) { return EpsValue::finite(m.eps(xi)); },
            [&](const NinhamParsegianModel& m) { return EpsValue::finite(m.eps(xi)); },
            [](const IdealMetal&) { return EpsValue::perfect_conductor(); },
            [&](const ConductiveDielectric& m) {
                const double base = m.base().eps(xi);
                const bool conducting = T > 0.0 || m.law().form() == ConductivityForm::constant;
                if (!conducting) return EpsValue::finite(base);
                if (xi == 0.0) return EpsValue::dc_divergent();
                return EpsValue::finite(base + 4.0 * constants::pi * sigma0(m.law(), T) / xi);
            },
        },
        model);
}

EpsValue static_permittivity(const PermittivityModel& model, double T) { return eval_eps(model, 0.0, T); }

PermittivityModel apply_toggles(const PermittivityModel& model, const Toggles& toggles) {
    if (const auto* c = std::get_if<ConductiveDielectric>(&model); c && !toggles.include_conductivity) {
        return c->base();
    }
    if (const auto* np = std::get_if<NinhamParsegianModel>(&model); np && !toggles.include_debye) {
        return np->with_debye(false);
    }
    return model;
}

std::optional<OscillatorModel> as_oscillator_model(const PermittivityModel& model) {
    if (const auto* m = std::get_if<OscillatorModel>(&model)) return *m;
    if (const auto* np = std::get_if<NinhamParsegianModel>(&model); np && !np->include_debye()) {
        return np->oscillator_part();
    }
    return std::nullopt;
}

std::vector<double> feature_frequencies(const PermittivityModel& model) {
    std::vector<double> out;
    auto add_oscillators = [&](const OscillatorModel& m) {
        for (const auto& osc : m.oscillators()) out.push_back(osc.frequency());
    };
    std::visit(overloaded{
                   [](const Vacuum&) {},
                   [](const IdealMetal&) {},
                   [&](const OscillatorModel& m) { add_oscillators(m); },
                   [&](const ConductiveDielectric& m) { add_oscillators(m.base()); },
                   [&](const NinhamParsegianModel& m) {
                       out.push_back(m.params().uv_frequency);
                       out.push_back(m.params().ir_frequency);
                       if (m.include_debye()) out.push_back(1.0 / m.params().debye_relaxation);
                   },
               },
               model);
    return out;
}

std::string model_tag(const PermittivityModel& model) {
    return std::visit(overloaded{
                          [](const Vacuum&) { return std::string("vacuum"); },
                          [](const OscillatorModel&) { return std::string("oscillator"); },
                          [](const ConductiveDielectric&) { return std::string("conductive"); },
                          [](const NinhamParsegianModel&) { return std::string("ninham-parsegian"); },
                          [](const IdealMetal&) { return std::string("ideal-metal"); },
                      },
                      model);
}

}  // namespace casimir::materials
