#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace casimir::materials {

/// Dielectric permittivity on the imaginary frequency axis.
///
/// A divergent permittivity is carried explicitly so that reflection
/// coefficients can take their exact limits instead of working with a huge
/// float. dc_conduction is the xi -> 0 divergence of a conducting dielectric
/// (TM reflects fully, TE vanishes); perfect_conductor is the ideal metal at
/// every frequency.
struct EpsValue {
    enum class Kind { finite, dc_conduction, perfect_conductor };

    double value = 1.0;
    Kind kind = Kind::finite;

    static constexpr EpsValue finite(double v) { return {v, Kind::finite}; }
    static constexpr EpsValue dc_divergent() { return {0.0, Kind::dc_conduction}; }
    static constexpr EpsValue perfect_conductor() { return {0.0, Kind::perfect_conductor}; }

    constexpr bool is_finite() const { return kind == Kind::finite; }
};

/// Lorentz oscillator: strength g in (rad/s)^2, resonance omega > 0 in rad/s,
/// damping gamma >= 0 in rad/s.
class Oscillator {
public:
    Oscillator(double strength, double frequency, double damping = 0.0);

    double strength() const { return strength_; }
    double frequency() const { return frequency_; }
    double damping() const { return damping_; }

    /// g / (omega^2 + xi^2 + gamma xi)
    double response(double xi) const;

    bool operator==(const Oscillator&) const = default;

private:
    double strength_;
    double frequency_;
    double damping_;
};

/// eps(i xi) = 1 + sum_j g_j / (omega_j^2 + xi^2 + gamma_j xi)
class OscillatorModel {
public:
    explicit OscillatorModel(std::vector<Oscillator> oscillators);

    const std::vector<Oscillator>& oscillators() const { return oscillators_; }
    double eps(double xi) const;
    double static_eps() const { return eps(0.0); }
    bool undamped() const;

    bool operator==(const OscillatorModel&) const = default;

private:
    std::vector<Oscillator> oscillators_;
};

enum class ConductivityForm {
    bandgap,  // sigma_a exp(-Delta / (2 k_B T))
    mott,     // sigma_a exp(-C / (k_B T))
    constant  // sigma_a at all T, including T = 0 (metallic side of a transition)
};

/// Temperature law of the dc conductivity. The prefactor is the Gaussian
/// conductivity sigma_a in rad/s; the activation energy is stored in J.
class ConductivityLaw {
public:
    ConductivityLaw(ConductivityForm form, double prefactor, double activation_J);

    static ConductivityLaw bandgap_ev(double prefactor, double gap_ev);
    static ConductivityLaw mott_ev(double prefactor, double c_ev);
    static ConductivityLaw constant(double prefactor);

    ConductivityForm form() const { return form_; }
    double prefactor() const { return prefactor_; }
    double activation() const { return activation_; }

    bool operator==(const ConductivityLaw&) const = default;

private:
    ConductivityForm form_;
    double prefactor_;
    double activation_;
};

/// eps~(i xi, T) = eps_base(i xi) + 4 pi sigma0(T) / xi
class ConductiveDielectric {
public:
    ConductiveDielectric(OscillatorModel base, ConductivityLaw law)
        : base_(std::move(base)), law_(law) {}

    const OscillatorModel& base() const { return base_; }
    const ConductivityLaw& law() const { return law_; }

    bool operator==(const ConductiveDielectric&) const = default;

private:
    OscillatorModel base_;
    ConductivityLaw law_;
};

/// One UV and one IR oscillator (undamped) plus a Debye relaxation term:
/// eps(i xi) = 1 + f_UV/(w_UV^2 + xi^2) + f_IR/(w_IR^2 + xi^2) + d/(1 + xi tau_D)
class NinhamParsegianModel {
public:
    struct Params {
        double uv_strength;
        double uv_frequency;
        double ir_strength;
        double ir_frequency;
        double debye_amplitude;
        double debye_relaxation;

        bool operator==(const Params&) const = default;
    };

    explicit NinhamParsegianModel(const Params& p, bool include_debye = true);

    const Params& params() const { return params_; }
    bool include_debye() const { return include_debye_; }
    NinhamParsegianModel with_debye(bool on) const { return NinhamParsegianModel(params_, on); }

    double eps(double xi) const;
    /// Electronic + ionic static value, Debye term excluded.
    double static_eps_ei() const;
    /// The two oscillators as an undamped OscillatorModel.
    OscillatorModel oscillator_part() const;

    bool operator==(const NinhamParsegianModel&) const = default;

private:
    Params params_;
    bool include_debye_;
};

struct IdealMetal {
    bool operator==(const IdealMetal&) const = default;
};

/// eps == 1. Reflects nothing; used for null checks.
struct Vacuum {
    bool operator==(const Vacuum&) const = default;
};

using PermittivityModel =
    std::variant<Vacuum, OscillatorModel, ConductiveDielectric, NinhamParsegianModel, IdealMetal>;

/// Named model as read from a material file.
struct Material {
    std::string name;
    PermittivityModel model;
};

struct Toggles {
    bool include_conductivity = true;
    bool include_debye = true;
};

/// eps(i xi, T). Throws DomainError for negative or non-finite xi, T.
EpsValue eval_eps(const PermittivityModel& model, double xi, double T);

/// eval_eps at xi = 0.
EpsValue static_permittivity(const PermittivityModel& model, double T);

/// Gaussian dc conductivity in rad/s. sigma0(law, 0) is the T -> 0 limit.
double sigma0(const ConductivityLaw& law, double T);

/// beta(T) = 2 hbar sigma0(T) / (k_B T); the T = 0 limit is 0 for activated laws.
double beta(const ConductivityLaw& law, double T);

/// Gaussian conductivity sigma0 in rad/s for an SI resistivity in ohm m,
/// fixed by 4 pi sigma0 = 1 / (epsilon_vac rho).
double resistivity_to_sigma(double rho_ohm_m);

double ev_to_radps(double energy_ev);

/// Apply CLI/model toggles: drop conductivity (keep base) and/or the Debye term.
PermittivityModel apply_toggles(const PermittivityModel& model, const Toggles& toggles);

/// Undamped or damped oscillator content of a model free of conductivity and
/// Debye terms; empty for any other model.
std::optional<OscillatorModel> as_oscillator_model(const PermittivityModel& model);

/// Frequencies (rad/s) where the model's eps(i xi) changes character:
/// oscillator resonances and 1/tau_D. Empty for structureless models.
std::vector<double> feature_frequencies(const PermittivityModel& model);

/// Short tag for diagnostics: "vacuum", "oscillator", "conductive",
/// "ninham-parsegian", "ideal-metal".
std::string model_tag(const PermittivityModel& model);

}  // namespace casimir::materials
