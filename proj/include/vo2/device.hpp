#pragma once

#include <cassert>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace vo2 {

enum class Phase { Insulating, Metallic };

// Lumped parameters of one VO2 switch. The I-V characteristic is two linear
// branches (r_off, r_on) joined by hysteretic switching between them: the
// device turns on when v_sw reaches the threshold voltage and off when v_sw
// falls to the holding voltage. Both thresholds shrink with ambient
// temperature, halving per `halving_interval` kelvin, and vanish at the
// metal-insulator transition temperature.
struct SwitchParams {
    double r_off = 57.6e3; // ohm, insulating branch
    double r_on = 630.0;   // ohm, metallic branch

    double v_th_ref = 5.0;    // V, switch-on voltage at t_ref
    double i_th_ref = 1.3e-4; // A, switch-on current (informational)
    double v_h_ref = 1.45;    // V, switch-off voltage at t_ref
    double i_h_ref = 1.7e-3;  // A, switch-off current (informational)

    double t_ref = 300.0;          // K, ambient at which *_ref hold
    double t_transition = 340.0;   // K, metal-insulator transition
    double halving_interval = 10.0; // K of ambient rise that halves v_th

    double tau_on_base = 120e-9;     // s, turn-on delay at zero overdrive
    double tau_on_sensitivity = 1.437; // 1/V, overdrive decay rate of tau_on
    double tau_off = 80e-9;          // s, turn-off delay

    double thermal_time_constant = 25e-9; // s, channel temperature relaxation
    double thermal_conductance = 2e-5;    // W/K, channel-to-substrate
};

// A scheduled phase change that commits when its countdown reaches zero.
struct PendingTransition {
    Phase target = Phase::Metallic;
    double time_remaining = 0.0; // s
};

// Dynamic state of one switch. `ambient_eff` is the ambient the device
// currently sees, T0' = T0 + T_P, where T_P is the externally induced
// temperature rise at the channel.
struct SwitchState {
    Phase phase = Phase::Insulating;
    double channel_temp = 300.0; // K
    std::optional<PendingTransition> transition_timer;
    double ambient_eff = 300.0; // K
};

// Switch-on voltage at the given effective ambient temperature. Halves per
// `halving_interval` of ambient rise above t_ref; identically zero at and
// above the transition temperature, where no insulating branch exists.
inline double threshold_voltage(const SwitchParams& p, double ambient_eff) {
    if (!std::isfinite(ambient_eff))
        throw std::invalid_argument("threshold_voltage: ambient_eff must be finite");
    if (ambient_eff >= p.t_transition)
        return 0.0;
    return p.v_th_ref * std::exp2(-(ambient_eff - p.t_ref) / p.halving_interval);
}

// Switch-off voltage; same temperature law as threshold_voltage applied to
// v_h_ref, so it stays strictly below the threshold at every ambient.
inline double holding_voltage(const SwitchParams& p, double ambient_eff) {
    if (!std::isfinite(ambient_eff))
        throw std::invalid_argument("holding_voltage: ambient_eff must be finite");
    if (ambient_eff >= p.t_transition)
        return 0.0;
    return p.v_h_ref * std::exp2(-(ambient_eff - p.t_ref) / p.halving_interval);
}

// Current through the switch at voltage v_sw on the branch selected by
// `phase`. Linear and odd per branch.
inline double branch_current(const SwitchParams& p, Phase phase, double v_sw) {
    return v_sw / (phase == Phase::Insulating ? p.r_off : p.r_on);
}

// Turn-on delay as a function of overdrive (drive voltage above the
// instantaneous threshold, measured at the switch terminal). Exponentially
// decreasing; the effective delay is never shorter than one integration step
// because pending timers are quantized to the step in update_phase.
inline double turn_on_delay(const SwitchParams& p, double overdrive) {
    if (!(overdrive >= 0.0))
        throw std::invalid_argument("turn_on_delay: overdrive must be >= 0");
    return p.tau_on_base * std::exp(-p.tau_on_sensitivity * overdrive);
}

// One step of the hysteretic phase machine.
//
// Insulating, v_sw >= V_th(T0')  -> schedule Metallic after turn_on_delay
// Metallic,   v_sw <= V_h(T0')   -> schedule Insulating after tau_off
//
// A pending timer counts down by dt on subsequent steps and commits when it
// reaches zero; it is cancelled if its trigger condition ceases to hold
// before the commit (a drive pulse shorter than the delay does not switch).
inline SwitchState update_phase(SwitchState state, const SwitchParams& p, double v_sw,
                                double /*i_sw*/, double dt) {
    assert(dt > 0.0);
    const bool trigger = state.phase == Phase::Insulating
                             ? v_sw >= threshold_voltage(p, state.ambient_eff)
                             : v_sw <= holding_voltage(p, state.ambient_eff);
    if (state.transition_timer) {
        if (!trigger) {
            state.transition_timer.reset();
        } else {
            state.transition_timer->time_remaining -= dt;
            if (state.transition_timer->time_remaining <= 0.0) {
                state.phase = state.transition_timer->target;
                state.transition_timer.reset();
            }
        }
    } else if (trigger) {
        const Phase target =
            state.phase == Phase::Insulating ? Phase::Metallic : Phase::Insulating;
        const double delay =
            target == Phase::Metallic
                ? turn_on_delay(p, v_sw - threshold_voltage(p, state.ambient_eff))
                : p.tau_off;
        state.transition_timer = PendingTransition{target, delay};
    }
    return state;
}

// Advance the channel temperature by dt under constant Joule power and
// effective ambient:
//
//   dT/dt = (P - G (T - T0')) / (G tau)
//
// integrated exactly over the step, T(t+dt) = Tinf + (T - Tinf) e^(-dt/tau)
// with Tinf = T0' + P/G. Exact stepping is unconditionally stable and two
// half steps compose to one full step.
inline SwitchState channel_thermal_step(SwitchState state, double joule_power,
                                        double ambient_eff, const SwitchParams& p,
                                        double dt) {
    assert(dt > 0.0);
    assert(joule_power >= 0.0);
    const double t_inf = ambient_eff + joule_power / p.thermal_conductance;
    state.channel_temp = t_inf + (state.channel_temp - t_inf) *
                                     std::exp(-dt / p.thermal_time_constant);
    return state;
}

} // namespace vo2
