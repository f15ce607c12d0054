#pragma once

#include <cstdint>
#include <vector>

#include "tdimc/device.hpp"

namespace tdimc {

// Write-scheme line voltages.
inline constexpr double kProgramWlV = 4.0;
inline constexpr double kEraseWlV = -4.0;
inline constexpr double kProtectBulV = -2.0;  // bulk bias shielding unselected rows

// Complementary FeFET pair storing one weight bit.
struct CamCell {
    FeFetState main;
    FeFetState complement;
};

enum class CellDevice { main, complement };
enum class BlMode { grounded, hi_z };
enum class WeightMode { xor_mode, and_mode };

// Optional stochastic disturb on protected writes; off by default so the
// bulk-bias protection is exactly non-switching.
struct DisturbModel {
    double sigma_v = 0.0;  // Gaussian voltage noise added to protection pulses
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;  // advances once per protected pulse
};

// Word/select lines are shared column-wise, bit/bulk lines row-wise. Each row
// sits in its own well, so its bulk can be biased independently.
struct CamArray {
    int rows = 0;
    int cols = 0;
    std::vector<CamCell> cells;   // row-major
    std::vector<double> row_bul_v;
    std::vector<BlMode> row_bl;
    DisturbModel disturb;

    CamCell& cell(int r, int c);
    const CamCell& cell(int r, int c) const;
};

CamArray make_array(const DeviceModel& model, int rows, int cols);

// As above, with static per-device threshold offsets drawn from
// N(0, vt_sigma_v) on seed-derived streams.
CamArray make_array(const DeviceModel& model, int rows, int cols,
                    double vt_sigma_v, std::uint64_t seed);

// Drives the whole column (both devices of every cell) fully LVT. Rows cannot
// be isolated during programming, so the column programs as one unit.
CamArray program_column(const DeviceModel& model, CamArray array, int col);

// Erases one device to HVT. Devices on the same word line in other rows see
// the erase voltage with the protective bulk bias; devices in other columns
// receive no pulse.
CamArray erase_cell(const DeviceModel& model, CamArray array, int row, int col,
                    CellDevice which);

// Partial erase through bulk bias v_bul in [-2, 0] V; lands the target on an
// intermediate threshold. Same protection pattern as erase_cell.
CamArray partial_erase(const DeviceModel& model, CamArray array, int row,
                       int col, CellDevice which, double v_bul_v);

// Program-then-selective-erase flow storing weights[r][c] in the main device
// and its complement in the paired device, for either compute mode.
CamArray write_weights(const DeviceModel& model, CamArray array,
                       const std::vector<std::vector<int>>& weights,
                       WeightMode mode);

// Grounds one bit line and floats the rest.
CamArray select_row(CamArray array, int row);

// Stored pattern read back from polarization signs.
std::vector<std::vector<int>> read_weights(const CamArray& array);

}  // namespace tdimc
