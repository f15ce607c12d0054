#include "tdimc/timing.hpp"

#include <cmath>
#include <stdexcept>

#include "tdimc/rng.hpp"

namespace tdimc {

void validate(const DelayStageConfig& cfg) {
    if (cfg.c_bank_f <= 0) {
        throw std::invalid_argument("stage: capacitor bank must be positive");
    }
    if (cfg.leaker.width_m <= 0 || cfg.leaker.length_m <= 0 ||
        cfg.leaker.transconductance_k <= 0) {
        throw std::invalid_argument("stage: leaker geometry must be positive");
    }
    if (cfg.r_nmos_ohm < 0 || cfg.t_intr_s < 0) {
        throw std::invalid_argument("stage: r_nmos and t_intr must be >= 0");
    }
    if (cfg.v_dd_v <= 0) {
        throw std::invalid_argument("stage: supply must be positive");
    }
    if (!(cfg.threshold_fraction > 0.0 && cfg.threshold_fraction < 1.0)) {
        throw std::invalid_argument("stage: threshold fraction must be in (0,1)");
    }
    if (!(cfg.v_leak_v > cfg.leaker.vt_v)) {
        throw std::invalid_argument("stage: leaker must conduct (v_leak > vt)");
    }
}

void validate(const VariabilityModel& m) {
    if (m.sigma_dl_s < 0 || m.sigma_dh_s < 0 || m.sigma_jit_s < 0 ||
        m.sigma_tdc_s < 0 || m.vt_sigma_v < 0 || m.calibrated_window_s < 0) {
        throw std::invalid_argument("variability: sigma terms must be >= 0");
    }
}

void validate(const StageDrive& d) {
    if (d.v_wl_v < kDriveMinV || d.v_wl_v > kDriveMaxV ||
        d.v_wlbar_v < kDriveMinV || d.v_wlbar_v > kDriveMaxV) {
        throw std::invalid_argument("drive: word-line voltage outside [-0.2, 1.8] V");
    }
}

double cam_resistance_ohm(const DeviceModel& m, const CamCell& cell,
                          const StageDrive& drive) {
    double r_main = channel_resistance_ohm(m, cell.main, drive.v_wl_v);
    double r_compl = channel_resistance_ohm(m, cell.complement, drive.v_wlbar_v);
    return 1.0 / (1.0 / r_main + 1.0 / r_compl);
}

double leaker_resistance_ohm(const DelayStageConfig& cfg) {
    double ov = cfg.v_leak_v - cfg.leaker.vt_v;
    if (ov <= 0) {
        throw std::invalid_argument("leaker: v_leak must exceed vt");
    }
    return (cfg.leaker.length_m / cfg.leaker.width_m) /
           (cfg.leaker.transconductance_k * ov);
}

bool stage_is_short(const DeviceModel& m, const CamCell& cell,
                    const StageDrive& drive) {
    return drive.v_wl_v > cell.main.effective_vt_v ||
           drive.v_wlbar_v > cell.complement.effective_vt_v;
}

double stage_delay_s(const DeviceModel& m, const DelayStageConfig& cfg,
                     const CamCell& cell, const StageDrive& drive,
                     double perturbation_s) {
    double r_cam = cam_resistance_ohm(m, cell, drive);
    double r_leak = leaker_resistance_ohm(cfg);
    double r_eff = 1.0 / (1.0 / r_cam + 1.0 / r_leak) + cfg.r_nmos_ohm;
    double t = cfg.t_intr_s +
               std::log(1.0 / cfg.threshold_fraction) * r_eff * cfg.c_bank_f +
               perturbation_s;
    return t > 1e-15 ? t : 1e-15;
}

PerturbationSample sample_perturbations(const VariabilityModel& model,
                                        std::span<const bool> stage_short,
                                        std::mt19937_64& rng) {
    PerturbationSample out;
    out.stage_s.reserve(stage_short.size());
    for (bool is_short : stage_short) {
        double d;
        if (is_short && model.calibrated_window_s > 0.0) {
            double half = 0.5 * model.calibrated_window_s;
            d = uniform_draw(rng, -half, half);
        } else {
            double sigma = is_short ? model.sigma_dl_s : model.sigma_dh_s;
            d = normal_draw(rng, 0.0, sigma);
        }
        out.stage_s.push_back(d);
    }
    out.jitter_s = normal_draw(rng, 0.0, model.sigma_jit_s);
    return out;
}

ChainResult chain_delay(const DeviceModel& m,
                        std::span<const DelayStageConfig> cfgs,
                        std::span<const CamCell> cells,
                        std::span<const StageDrive> drives,
                        const PerturbationSample& noise) {
    const std::size_t n = cfgs.size();
    if (cells.size() != n || drives.size() != n) {
        throw std::invalid_argument("chain_delay: stage list length mismatch");
    }
    if (!noise.stage_s.empty() && noise.stage_s.size() != n) {
        throw std::invalid_argument("chain_delay: perturbation list length mismatch");
    }
    ChainResult out;
    out.per_stage_s.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double pert = noise.stage_s.empty() ? 0.0 : noise.stage_s[i];
        double t = stage_delay_s(m, cfgs[i], cells[i], drives[i], pert);
        out.per_stage_s.push_back(t);
        out.total_s += t;
    }
    out.total_s += noise.jitter_s;
    return out;
}

}  // namespace tdimc
