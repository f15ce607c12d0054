#include "tdimc/device.hpp"

#include <cmath>
#include <stdexcept>

#include "tdimc/stats.hpp"

namespace tdimc {

void validate(const DeviceModel& m) {
    const FeFetGeometry& g = m.geometry;
    if (g.width_m <= 0 || g.length_m <= 0) {
        throw std::invalid_argument("device: width and length must be positive");
    }
    if (g.transconductance_k <= 0) {
        throw std::invalid_argument("device: transconductance must be positive");
    }
    if (!(g.vt_min_v < g.vt_max_v)) {
        throw std::invalid_argument("device: vt_min must be below vt_max");
    }
    if (m.coercive_field_v_per_m <= 0 || m.fe_thickness_m <= 0) {
        throw std::invalid_argument("device: coercive field and thickness must be positive");
    }
    if (m.coercive_sigma_frac < 0) {
        throw std::invalid_argument("device: coercive sigma fraction must be >= 0");
    }
    if (m.n_hysterons < 1) {
        throw std::invalid_argument("device: need at least one hysteron");
    }
    if (m.r_off_ohm <= 0) {
        throw std::invalid_argument("device: off-resistance must be positive");
    }
    if (m.write_pulse_s <= 0) {
        throw std::invalid_argument("device: write pulse width must be positive");
    }
}

namespace {

// Coercive fields placed at the quantiles of a Gaussian centered on the mean
// coercive field, truncated to [0.6, 1.4] times the mean. Deterministic
// placement keeps every device identical before mismatch injection.
std::vector<Hysteron> make_hysterons(const DeviceModel& m, int sign) {
    const int n = m.n_hysterons;
    const double ec = m.coercive_field_v_per_m;
    const double sigma = m.coercive_sigma_frac * ec;
    std::vector<Hysteron> hs(static_cast<std::size_t>(n));
    const double w = 1.0 / n;
    if (sigma <= 0.0) {
        for (auto& h : hs) {
            h.coercive_up_v_per_m = ec;
            h.coercive_down_v_per_m = ec;
            h.sign = sign;
            h.weight = w;
        }
        return hs;
    }
    const double lo = 0.6 * ec, hi = 1.4 * ec;
    const double pa = normal_cdf((lo - ec) / sigma);
    const double pb = normal_cdf((hi - ec) / sigma);
    for (int i = 0; i < n; ++i) {
        double q = pa + (i + 0.5) / n * (pb - pa);
        double field = ec + sigma * inverse_normal_cdf(q);
        if (field < lo) field = lo;
        if (field > hi) field = hi;
        hs[static_cast<std::size_t>(i)] = Hysteron{field, field, sign, w};
    }
    return hs;
}

double polarization_of(const std::vector<Hysteron>& hs) {
    double p = 0.0;
    for (const auto& h : hs) p += h.sign * h.weight;
    if (p > 1.0) p = 1.0;
    if (p < -1.0) p = -1.0;
    return p;
}

void refresh_derived(const FeFetGeometry& geom, FeFetState& s) {
    s.polarization = polarization_of(s.hysterons);
    s.effective_vt_v = vt_from_polarization(geom, s.polarization, s.vt_offset_v);
}

}  // namespace

double vt_from_polarization(const FeFetGeometry& geom, double polarization,
                            double vt_offset_v) {
    double mid = 0.5 * (geom.vt_min_v + geom.vt_max_v);
    double half = 0.5 * (geom.vt_max_v - geom.vt_min_v);
    return mid - polarization * half + vt_offset_v;
}

FeFetState make_lvt_state(const DeviceModel& m, double vt_offset_v) {
    FeFetState s;
    s.hysterons = make_hysterons(m, +1);
    s.vt_offset_v = vt_offset_v;
    refresh_derived(m.geometry, s);
    return s;
}

FeFetState make_hvt_state(const DeviceModel& m, double vt_offset_v) {
    FeFetState s;
    s.hysterons = make_hysterons(m, -1);
    s.vt_offset_v = vt_offset_v;
    refresh_derived(m.geometry, s);
    return s;
}

FeFetState apply_write_pulse(const DeviceModel& m, FeFetState state,
                             const WritePulse& pulse) {
    if (!std::isfinite(pulse.v_wl_v) || !std::isfinite(pulse.v_bl_v) ||
        !std::isfinite(pulse.v_sl_v) || !std::isfinite(pulse.v_bul_v)) {
        throw std::invalid_argument("apply_write_pulse: pulse voltages must be finite");
    }
    if (!(pulse.duration_s > 0)) {
        throw std::invalid_argument("apply_write_pulse: pulse duration must be positive");
    }
    const double field = (pulse.v_wl_v - pulse.v_bul_v) / m.fe_thickness_m;
    for (auto& h : state.hysterons) {
        if (field > h.coercive_up_v_per_m) {
            h.sign = +1;
        } else if (field < -h.coercive_down_v_per_m) {
            h.sign = -1;
        }
    }
    refresh_derived(m.geometry, state);
    return state;
}

double drain_current_a(const DeviceModel& m, const FeFetState& state,
                       double v_gs_v, double v_ds_v) {
    if (v_ds_v < 0) {
        throw std::invalid_argument("drain_current: v_ds must be >= 0");
    }
    const double floor_a = v_ds_v / m.r_off_ohm;
    const double ov = v_gs_v - state.effective_vt_v;
    if (ov <= 0) return floor_a;
    const double kwl =
        m.geometry.transconductance_k * m.geometry.width_m / m.geometry.length_m;
    if (v_ds_v < ov) {
        return kwl * (ov * v_ds_v - 0.5 * v_ds_v * v_ds_v) + floor_a;  // triode
    }
    return 0.5 * kwl * ov * ov + floor_a;  // saturation
}

double channel_resistance_ohm(const DeviceModel& m, const FeFetState& state,
                              double v_g_v) {
    const double kwl =
        m.geometry.transconductance_k * m.geometry.width_m / m.geometry.length_m;
    const double ov = v_g_v - state.effective_vt_v;
    double g = 1.0 / m.r_off_ohm;
    if (ov > 0) g += kwl * ov;
    return 1.0 / g;
}

}  // namespace tdimc
