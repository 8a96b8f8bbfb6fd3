#pragma once

// Susceptibility maps over the grid, channel extraction, and the
// amplitude-guarded normalization that replaces nan-producing division.

#include <cmath>
#include <string>

#include "tripod/atomic.hpp"
#include "tripod/beam.hpp"
#include "tripod/errors.hpp"
#include "tripod/grid.hpp"

namespace tripod {

enum class SensingChannel { Absorption, Dispersion };

inline const char* channel_name(SensingChannel c) {
  return c == SensingChannel::Absorption ? "absorption" : "dispersion";
}

// A channel signal after the normalization guard. When active, the map
// holds values scaled so that max |value| = 1; when inactive, the raw
// values are preserved and raw_peak records the failed amplitude.
struct NormalizedSignal {
  RealMap map;
  double raw_peak = 0.0;
  bool active = false;
};

// Pointwise chi(x, y) at one probe detuning from the single-detuning
// coherence. Both control maps must share a grid.
inline ComplexMap susceptibility_map(const AtomicParams& params, double gamma,
                                     double delta_p, const RealMap& omega1,
                                     const RealMap& omega2) {
  params.validate();
  require_same_grid(omega1.grid, omega2.grid);
  ComplexMap chi(omega1.grid);
  const size_t n = chi.values.size();
  for (size_t i = 0; i < n; ++i) {
    const Complex rho = coherence_simplified(gamma, delta_p, omega1.values[i],
                                             omega2.values[i], params.probe_rabi);
    chi.values[i] = rho * (params.prefactor / params.probe_rabi);
  }
  if (!chi.all_finite()) throw Error("susceptibility map contains non-finite values");
  return chi;
}

// Absorption extracts -Im[chi]; Dispersion extracts Re[chi].
inline RealMap channel_signal(const ComplexMap& chi, SensingChannel channel) {
  RealMap out(chi.grid);
  const size_t n = out.values.size();
  if (channel == SensingChannel::Absorption) {
    for (size_t i = 0; i < n; ++i) out.values[i] = -chi.values[i].imag();
  } else {
    for (size_t i = 0; i < n; ++i) out.values[i] = chi.values[i].real();
  }
  return out;
}

// Normalize to unit peak unless the pre-normalization amplitude falls
// below epsilon_active; then keep the raw map and flag the channel
// inactive instead of emitting nan.
inline NormalizedSignal normalize_with_guard(const RealMap& signal,
                                             double epsilon_active) {
  if (!(epsilon_active > 0.0) || !std::isfinite(epsilon_active))
    throw ValidationError("epsilon_active must be > 0 and finite");
  NormalizedSignal out;
  out.map = signal;
  out.raw_peak = max_abs(signal);
  out.active = out.raw_peak >= epsilon_active;
  if (out.active) {
    for (double& v : out.map.values) v /= out.raw_peak;
  }
  return out;
}

}  // namespace tripod
