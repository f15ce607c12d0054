#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdimc {

// Flash converter geometry: n_refs evenly spaced references from a tunable
// reference delay line. A sampled edge coincident with a reference reads as
// "not yet arrived" (reference wins).
struct TdcConfig {
    int n_refs = 3;
    double step_s = 550e-12;
    double shift_s = 0.0;
};

void validate(const TdcConfig& cfg);

struct ThermometerCode {
    std::vector<std::uint8_t> bits;  // bits[i] = 1 iff the edge passed ref i

    bool is_monotone() const;        // all 1s precede all 0s
    std::string to_string() const;
    bool operator==(const ThermometerCode&) const = default;
};

// Raw flash sample flagged as a bubble: the bit pattern is not monotone.
class bubble_error : public std::runtime_error {
  public:
    explicit bubble_error(ThermometerCode code)
        : std::runtime_error("thermometer code has a bubble: " + code.to_string()),
          code_(std::move(code)) {}
    const ThermometerCode& code() const { return code_; }

  private:
    ThermometerCode code_;
};

// ref[i] = shift + (i+1) * step.
std::vector<double> generate_references(const TdcConfig& cfg);

// Raw comparator bank: bit[i] = 1 iff t_edge > refs[i]. No ordering
// requirement; disordered (noisy) references can yield bubble codes.
ThermometerCode sample_edge(double t_edge_s, std::span<const double> refs_s);

// Contracted conversion path; requires ascending references.
ThermometerCode digitize(double t_edge_s, std::span<const double> refs_s);

// Count of 1 bits; earlier edges produce lower codes. Throws bubble_error on
// a non-monotone code (flagged, not repaired).
int therm_to_binary(const ThermometerCode& code);

}  // namespace tdimc
