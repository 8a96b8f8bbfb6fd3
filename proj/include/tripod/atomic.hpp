#pragma once

// Steady-state response of the four-level tripod system under the
// weak-probe approximation. All rates and frequencies are in units of
// gamma, lengths in units of lambda; the susceptibility carries a
// dimensionless prefactor (default 1, i.e. the normalized response).

#include <cmath>
#include <complex>
#include <string>

#include "tripod/errors.hpp"

namespace tripod {

using Complex = std::complex<double>;

// Guard below which the coherence denominator counts as degenerate,
// in gamma^3 units. Physically unreachable while all decay rates > 0.
inline constexpr double kDenominatorFloor = 1e-12;

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Decay rates of the three lower levels against the shared excited
// state, the probe Rabi frequency, and the susceptibility prefactor
// standing in for the dimensional constant 2 N |d24|^2 / (eps0 hbar).
struct AtomicParams {
  double gamma14 = 1.0;
  double gamma24 = 1.0;
  double gamma34 = 1.0;
  double probe_rabi = 0.1;
  double prefactor = 1.0;

  void validate() const {
    auto positive = [](double v, const char* name) {
      if (!(v > 0.0) || !std::isfinite(v))
        throw ValidationError(std::string(name) + " must be a positive finite value");
    };
    positive(gamma14, "gamma14");
    positive(gamma24, "gamma24");
    positive(gamma34, "gamma34");
    positive(probe_rabi, "probe_rabi");
    positive(prefactor, "prefactor");
  }

  // Weak-probe regime check: Omega_p should stay well below the control
  // peaks. A false result is a warning condition, not an error; the
  // closed-form coherence is the model either way.
  bool weak_probe_ok(double control_peak1, double control_peak2) const {
    return probe_rabi <= 0.1 * std::min(control_peak1, control_peak2);
  }
};

// Detunings of the three driving fields; delta2 is the probe detuning.
struct Detunings {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta3 = 0.0;

  void validate() const {
    if (!std::isfinite(delta1)) throw ValidationError("delta1 must be finite");
    if (!std::isfinite(delta2)) throw ValidationError("delta2 must be finite");
    if (!std::isfinite(delta3)) throw ValidationError("delta3 must be finite");
  }
};

struct DecayParams {
  Complex a1, a2, a3;
};

// A_j = Gamma_j4 + i Delta_j for j = 1, 2, 3.
inline DecayParams decay_params(const AtomicParams& params, const Detunings& det) {
  params.validate();
  det.validate();
  return {Complex(params.gamma14, det.delta1),
          Complex(params.gamma24, det.delta2),
          Complex(params.gamma34, det.delta3)};
}

// General three-detuning steady-state coherence on the probe transition:
//
//   rho24 = -i A2 A3 Omega_p / (2 D),
//   D     = A1 A2 A3 + A3 |Omega1|^2 / 4 + A1 |Omega2|^2 / 4.
//
// The control intensities pair with the decay parameters of the two
// control transitions, so that D collapses to the single-detuning form
// under Delta1 = Delta3 = 0, equal decay rates.
inline Complex coherence_general(const AtomicParams& params, const Detunings& det,
                                 double omega1, double omega2) {
  const auto [a1, a2, a3] = decay_params(params, det);
  const Complex den =
      a1 * a2 * a3 + a3 * (omega1 * omega1 / 4.0) + a1 * (omega2 * omega2 / 4.0);
  if (std::abs(den) <= kDenominatorFloor)
    throw DegenerateDenominator("coherence denominator magnitude " +
                                std::to_string(std::abs(den)) + " below floor");
  return Complex(0.0, -1.0) * a2 * a3 * (params.probe_rabi / 2.0) / den;
}

// Single-detuning reduction (Delta1 = Delta3 = 0, common decay rate):
//
//   rho24 = -i (Gamma + i Dp) Gamma (Omega_p/2)
//           / (Gamma^3 + (Gamma/4)(|O1|^2 + |O2|^2) + i Gamma^2 Dp).
//
// At Dp = 0 the result is purely imaginary to machine precision: the
// numerator is purely imaginary and the denominator purely real, which
// is the analytic root of the inactive dispersion channel.
inline Complex coherence_simplified(double gamma, double delta_p, double omega1,
                                    double omega2, double omega_p) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw ValidationError("gamma must be a positive finite value");
  const Complex num =
      Complex(0.0, -1.0) * Complex(gamma, delta_p) * gamma * (omega_p / 2.0);
  const Complex den(gamma * gamma * gamma +
                        (gamma / 4.0) * (omega1 * omega1 + omega2 * omega2),
                    gamma * gamma * delta_p);
  return num / den;
}

// chi = prefactor * rho24 / Omega_p. Re is the dispersive response,
// Im the absorptive one; the absorption signal is -Im[chi].
inline Complex susceptibility(const AtomicParams& params, Complex rho24) {
  params.validate();
  if (!is_finite(rho24)) throw ValidationError("rho24 must be finite");
  return rho24 * (params.prefactor / params.probe_rabi);
}

// Position-dependent transparency linewidth:
// Gamma_EIT = Gamma + (|O1|^2 + |O2|^2) / (4 Gamma). Always >= Gamma.
inline double eit_linewidth(double gamma, double omega1, double omega2) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw ValidationError("gamma must be a positive finite value");
  return gamma + (omega1 * omega1 + omega2 * omega2) / (4.0 * gamma);
}

// Unscaled dispersive lineshape Dp / (Dp^2 + Gamma_EIT^2).
// The proportionality constant is left to callers; extrema sit at
// Dp = +-Gamma_EIT with values +-1/(2 Gamma_EIT).
inline double lorentzian_dispersion(double delta_p, double gamma_eit) {
  if (!(gamma_eit > 0.0) || !std::isfinite(gamma_eit))
    throw ValidationError("gamma_eit must be a positive finite value");
  return delta_p / (delta_p * delta_p + gamma_eit * gamma_eit);
}

}  // namespace tripod
