#include "tdimc/array.hpp"

#include <stdexcept>

#include "tdimc/rng.hpp"

namespace tdimc {

namespace {

void check_indices(const CamArray& a, int row, int col) {
    if (row < 0 || row >= a.rows) {
        throw std::out_of_range("array: row index out of range");
    }
    if (col < 0 || col >= a.cols) {
        throw std::out_of_range("array: column index out of range");
    }
}

FeFetState& device_of(CamCell& cell, CellDevice which) {
    return which == CellDevice::main ? cell.main : cell.complement;
}

// One erase-side pulse group on a single word line: the target device gets
// v_bul_target, every other row on that line gets the protection bias.
CamArray pulse_column_devices(const DeviceModel& m, CamArray a, int row, int col,
                              CellDevice which, double v_bul_target) {
    for (int r = 0; r < a.rows; ++r) {
        double v_bul = (r == row) ? v_bul_target : kProtectBulV;
        WritePulse p{kEraseWlV, 0.0, 0.0, v_bul, m.write_pulse_s};
        if (r != row && a.disturb.sigma_v > 0.0) {
            auto rng = make_stream(a.disturb.seed, a.disturb.counter++);
            p.v_bul_v += normal_draw(rng, 0.0, a.disturb.sigma_v);
        }
        FeFetState& dev = device_of(a.cell(r, col), which);
        dev = apply_write_pulse(m, std::move(dev), p);
    }
    return a;
}

}  // namespace

CamCell& CamArray::cell(int r, int c) {
    return cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(c)];
}

const CamCell& CamArray::cell(int r, int c) const {
    return cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(c)];
}

CamArray make_array(const DeviceModel& m, int rows, int cols) {
    return make_array(m, rows, cols, 0.0, 0);
}

CamArray make_array(const DeviceModel& m, int rows, int cols, double vt_sigma_v,
                    std::uint64_t seed) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("array: dimensions must be positive");
    }
    CamArray a;
    a.rows = rows;
    a.cols = cols;
    a.cells.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            std::uint64_t device_id =
                2ull * (static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(cols) +
                        static_cast<std::uint64_t>(c));
            double off_main = 0.0, off_compl = 0.0;
            if (vt_sigma_v > 0.0) {
                auto rng_m = make_stream(seed, device_id);
                auto rng_c = make_stream(seed, device_id + 1);
                off_main = normal_draw(rng_m, 0.0, vt_sigma_v);
                off_compl = normal_draw(rng_c, 0.0, vt_sigma_v);
            }
            a.cells.push_back(
                CamCell{make_lvt_state(m, off_main), make_lvt_state(m, off_compl)});
        }
    }
    a.row_bul_v.assign(static_cast<std::size_t>(rows), 0.0);
    a.row_bl.assign(static_cast<std::size_t>(rows), BlMode::hi_z);
    return a;
}

CamArray program_column(const DeviceModel& m, CamArray a, int col) {
    check_indices(a, 0, col);
    const WritePulse p{kProgramWlV, 0.0, 0.0, 0.0, m.write_pulse_s};
    for (int r = 0; r < a.rows; ++r) {
        CamCell& cell = a.cell(r, col);
        cell.main = apply_write_pulse(m, std::move(cell.main), p);
        cell.complement = apply_write_pulse(m, std::move(cell.complement), p);
    }
    return a;
}

CamArray erase_cell(const DeviceModel& m, CamArray a, int row, int col,
                    CellDevice which) {
    check_indices(a, row, col);
    return pulse_column_devices(m, std::move(a), row, col, which, 0.0);
}

CamArray partial_erase(const DeviceModel& m, CamArray a, int row, int col,
                       CellDevice which, double v_bul_v) {
    check_indices(a, row, col);
    if (v_bul_v < -2.0 || v_bul_v > 0.0) {
        throw std::invalid_argument("partial_erase: v_bul must be in [-2, 0] V");
    }
    return pulse_column_devices(m, std::move(a), row, col, which, v_bul_v);
}

CamArray write_weights(const DeviceModel& m, CamArray a,
                       const std::vector<std::vector<int>>& weights,
                       WeightMode /*mode*/) {
    if (static_cast<int>(weights.size()) != a.rows) {
        throw std::invalid_argument("write_weights: row count mismatch");
    }
    for (const auto& row : weights) {
        if (static_cast<int>(row.size()) != a.cols) {
            throw std::invalid_argument("write_weights: column count mismatch");
        }
    }
    // Global program, then column-wise selective erase. Both modes store the
    // bit in the main device and its inverse in the complement.
    for (int c = 0; c < a.cols; ++c) {
        a = program_column(m, std::move(a), c);
    }
    for (int c = 0; c < a.cols; ++c) {
        for (int r = 0; r < a.rows; ++r) {
            CellDevice to_erase = weights[static_cast<std::size_t>(r)]
                                          [static_cast<std::size_t>(c)]
                                      ? CellDevice::complement
                                      : CellDevice::main;
            a = erase_cell(m, std::move(a), r, c, to_erase);
        }
    }
    return a;
}

CamArray select_row(CamArray a, int row) {
    check_indices(a, row, 0);
    for (int r = 0; r < a.rows; ++r) {
        a.row_bl[static_cast<std::size_t>(r)] =
            (r == row) ? BlMode::grounded : BlMode::hi_z;
    }
    return a;
}

std::vector<std::vector<int>> read_weights(const CamArray& a) {
    std::vector<std::vector<int>> w(static_cast<std::size_t>(a.rows));
    for (int r = 0; r < a.rows; ++r) {
        auto& row = w[static_cast<std::size_t>(r)];
        row.resize(static_cast<std::size_t>(a.cols));
        for (int c = 0; c < a.cols; ++c) {
            row[static_cast<std::size_t>(c)] = a.cell(r, c).main.polarization > 0 ? 1 : 0;
        }
    }
    return w;
}

}  // namespace tdimc
