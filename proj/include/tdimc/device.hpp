#pragma once

#include <vector>

namespace tdimc {

// Geometry and square-law parameters of one ferroelectric FET.
struct FeFetGeometry {
    double width_m = 90e-9;
    double length_m = 90e-9;
    double transconductance_k = 2.2e-4;  // A/V^2
    double vt_min_v = 0.2;               // fully programmed (LVT) threshold
    double vt_max_v = 1.1;               // fully erased (HVT) threshold
};

// Model constants shared by every FeFET in a macro.
struct DeviceModel {
    FeFetGeometry geometry;
    double coercive_field_v_per_m = 2.9e8;  // mean hysteron coercive field
    double coercive_sigma_frac = 0.10;      // sigma of the coercive distribution / mean
    double fe_thickness_m = 10e-9;          // gate-to-bulk field = voltage / thickness
    int n_hysterons = 64;
    double r_off_ohm = 2.0202e7;            // subthreshold floor (fixed off-resistance)
    double write_pulse_s = 1e-6;            // nominal write pulse width
};

// One bistable dipole domain. The polarization of a device is the
// weight-sum of hysteron signs.
struct Hysteron {
    double coercive_up_v_per_m = 0.0;    // field at or above which sign flips to +1
    double coercive_down_v_per_m = 0.0;  // |field| at or above which sign flips to -1
    int sign = 1;
    double weight = 0.0;  // weights sum to 1 over the population
};

// Nonvolatile state of a single FeFET.
struct FeFetState {
    std::vector<Hysteron> hysterons;
    double polarization = 1.0;    // normalized remanent polarization in [-1, +1]
    double effective_vt_v = 0.2;  // derived from polarization (plus static offset)
    double vt_offset_v = 0.0;     // device-to-device offset; shifts the whole window
};

// Line voltages seen by one device during a write.
struct WritePulse {
    double v_wl_v = 0.0;
    double v_bl_v = 0.0;
    double v_sl_v = 0.0;
    double v_bul_v = 0.0;
    double duration_s = 1e-6;
};

void validate(const DeviceModel& model);

FeFetState make_lvt_state(const DeviceModel& model, double vt_offset_v = 0.0);
FeFetState make_hvt_state(const DeviceModel& model, double vt_offset_v = 0.0);

// Threshold voltage implied by a polarization value: affine, decreasing in P.
double vt_from_polarization(const FeFetGeometry& geom, double polarization,
                            double vt_offset_v = 0.0);

// Preisach update: each hysteron flips when the effective gate-to-bulk field
// strictly exceeds its coercive field. Deterministic; saturates at the
// field extremes.
FeFetState apply_write_pulse(const DeviceModel& model, FeFetState state,
                             const WritePulse& pulse);

// Static square-law drain current plus an ohmic subthreshold floor
// (v_ds / r_off) so the off-resistance stays finite.
double drain_current_a(const DeviceModel& model, const FeFetState& state,
                       double v_gs_v, double v_ds_v);

// Small-signal channel resistance at gate voltage v_g: reciprocal of
// k*(W/L)*(v_g - vt) in parallel with the fixed off-resistance.
double channel_resistance_ohm(const DeviceModel& model, const FeFetState& state,
                              double v_g_v);

}  // namespace tdimc
