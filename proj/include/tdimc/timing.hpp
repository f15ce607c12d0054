#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "tdimc/array.hpp"
#include "tdimc/device.hpp"

namespace tdimc {

// Measured word-line drive range.
inline constexpr double kDriveMinV = -0.2;
inline constexpr double kDriveMaxV = 1.8;

// Always-on NMOS bounding the discharge current when the CAM cell is off.
struct LeakerGeometry {
    double width_m = 90e-9;
    double length_m = 900e-9;
    double transconductance_k = 2.2e-4;  // A/V^2
    double vt_v = 0.2;
};

// Electrical parameters of one delay element.
struct DelayStageConfig {
    double c_bank_f = 10e-15;  // programmable load; overridden per compute mode
    LeakerGeometry leaker;
    double v_leak_v = 0.65;
    double r_nmos_ohm = 1000.0;  // pull-down series resistance
    double t_intr_s = 50e-12;    // intrinsic stage delay
    double v_dd_v = 0.85;
    double threshold_fraction = 0.5;  // restoring-inverter switching point
};

// Per-trial timing noise terms.
struct VariabilityModel {
    double sigma_dl_s = 30e-12;   // short-delay stage dispersion
    double sigma_dh_s = 15e-12;   // long-delay stage dispersion
    double sigma_jit_s = 20e-12;  // chain-output edge jitter
    double sigma_tdc_s = 10e-12;  // per-reference sampling noise
    double vt_sigma_v = 0.0;      // static per-device threshold offsets
    // When > 0, short-delay stages draw a calibrated residual uniform over
    // +-window/2 instead of the Gaussian sigma_dl term.
    double calibrated_window_s = 0.0;
    std::uint64_t seed = 1;
};

// Gate voltages applied to a stage's word-line pair.
struct StageDrive {
    double v_wl_v = 0.0;
    double v_wlbar_v = 0.0;
};

void validate(const DelayStageConfig& cfg);
void validate(const VariabilityModel& model);
void validate(const StageDrive& drive);

// Parallel combination of the two cell branches at the given drive.
double cam_resistance_ohm(const DeviceModel& model, const CamCell& cell,
                          const StageDrive& drive);

// (L/W) / (k * (v_leak - vt)); throws when the leaker would not conduct.
double leaker_resistance_ohm(const DelayStageConfig& cfg);

// True when at least one branch of the cell conducts above its threshold.
bool stage_is_short(const DeviceModel& model, const CamCell& cell,
                    const StageDrive& drive);

// Single-pole RC threshold crossing:
//   t = t_intr + ln(1/threshold) * ((R_cam || R_leaker) + R_nmos) * C_bank
// plus an additive perturbation; clamped to stay positive.
double stage_delay_s(const DeviceModel& model, const DelayStageConfig& cfg,
                     const CamCell& cell, const StageDrive& drive,
                     double perturbation_s = 0.0);

struct PerturbationSample {
    std::vector<double> stage_s;  // one additive term per stage
    double jitter_s = 0.0;        // applied once to the chain output
};

// Independent Gaussian draws, sigma chosen by each stage's short/long state;
// plus one output jitter draw. Draw order: stages first, then jitter.
PerturbationSample sample_perturbations(const VariabilityModel& model,
                                        std::span<const bool> stage_short,
                                        std::mt19937_64& rng);

struct ChainResult {
    double total_s = 0.0;
    std::vector<double> per_stage_s;
};

// Accumulated delay across the chain; per-stage trace retained for export.
ChainResult chain_delay(const DeviceModel& model,
                        std::span<const DelayStageConfig> cfgs,
                        std::span<const CamCell> cells,
                        std::span<const StageDrive> drives,
                        const PerturbationSample& noise = {});

}  // namespace tdimc
