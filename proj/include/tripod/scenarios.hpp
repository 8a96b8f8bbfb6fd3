#pragma once

// The three comparison protocols (same / optimal / switched detuning),
// detuning scans, and waist calibration against reference ratios.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tripod/atomic.hpp"
#include "tripod/beam.hpp"
#include "tripod/errors.hpp"
#include "tripod/grid.hpp"
#include "tripod/metrics.hpp"
#include "tripod/response.hpp"

namespace tripod {

enum class ScenarioKind { SameDetuning, OptimalDetuning, SwitchedDetuning };

inline const char* scenario_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::SameDetuning: return "same";
    case ScenarioKind::OptimalDetuning: return "optimal";
    case ScenarioKind::SwitchedDetuning: return "switched";
  }
  return "?";
}

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::SameDetuning;
  double abs_detuning = 0.5;
  double eit_detuning = 0.5;
  std::vector<int> orders = {1, 2, 3, 10};
  AtomicParams atomic;
  double gamma = 1.0;
  SuperGaussianBeam beam_x{5.0, 0.2, 1, Axis::X};
  SuperGaussianBeam beam_y{5.0, 0.2, 1, Axis::Y};
  Grid2D grid;
  double epsilon_active_rel = 1e-9;

  static ScenarioConfig for_kind(ScenarioKind kind) {
    ScenarioConfig c;
    c.kind = kind;
    switch (kind) {
      case ScenarioKind::SameDetuning:
        c.abs_detuning = c.eit_detuning = 0.5;
        break;
      case ScenarioKind::OptimalDetuning:
        c.abs_detuning = 0.0;
        c.eit_detuning = 0.5;
        break;
      case ScenarioKind::SwitchedDetuning:
        c.abs_detuning = 0.5;
        c.eit_detuning = 0.0;
        break;
    }
    return c;
  }

  void validate() const {
    atomic.validate();
    beam_x.validate();
    beam_y.validate();
    grid.validate();
    if (!(gamma > 0.0) || !std::isfinite(gamma))
      throw ValidationError("gamma must be a positive finite value");
    if (!std::isfinite(abs_detuning) || !std::isfinite(eit_detuning))
      throw ValidationError("detunings must be finite");
    if (orders.empty()) throw ValidationError("orders must not be empty");
    for (int p : orders)
      if (p < 1)
        throw ValidationError("orders entries must be >= 1, got " + std::to_string(p));
    if (!(epsilon_active_rel > 0.0))
      throw ValidationError("epsilon_active_rel must be > 0");
    if (kind == ScenarioKind::SameDetuning && abs_detuning != eit_detuning)
      throw ValidationError("same-detuning scenario requires abs_detuning == eit_detuning");
    if (kind == ScenarioKind::SwitchedDetuning &&
        (abs_detuning != 0.5 || eit_detuning != 0.0))
      throw ValidationError(
          "switched scenario is pinned to abs_detuning=0.5, eit_detuning=0.0");
  }
};

namespace detail {

struct ChannelMaps {
  NormalizedSignal signal;
  double threshold = 0.0;
};

// Evaluate one channel at one detuning. The activity threshold is
// epsilon_rel times the peak of the absorption signal of the same chi
// map, so the guard is scale-free in the normalized units.
inline ChannelMaps evaluate_channel(const ScenarioConfig& cfg, double detuning,
                                    SensingChannel channel, const RealMap& omega1,
                                    const RealMap& omega2) {
  const ComplexMap chi =
      susceptibility_map(cfg.atomic, cfg.gamma, detuning, omega1, omega2);
  const RealMap raw = channel_signal(chi, channel);
  const double abs_peak = max_abs(channel_signal(chi, SensingChannel::Absorption));
  ChannelMaps out;
  out.threshold = cfg.epsilon_active_rel * abs_peak;
  out.signal = normalize_with_guard(raw, out.threshold);
  return out;
}

inline ChannelResult channel_metrics(const ScenarioConfig& cfg, double detuning,
                                     SensingChannel channel, const RealMap& omega1,
                                     const RealMap& omega2) {
  ChannelMaps maps = evaluate_channel(cfg, detuning, channel, omega1, omega2);
  ChannelResult result;
  result.channel = channel;
  result.detuning = detuning;
  result.active = maps.signal.active;
  if (!result.active) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "inactive: raw peak %.3e below threshold %.3e",
                  maps.signal.raw_peak, maps.threshold);
    result.note = buf;
    return result;
  }
  result.max_gradient = max_gradient(gradient_map(maps.signal));
  try {
    result.fwhm = fwhm_cross_section(maps.signal, Axis::X);
  } catch (const NoHalfCrossing& e) {
    result.note = std::string("fwhm undefined: ") + e.what();
  }
  return result;
}

}  // namespace detail

// One comparison row per configured order, computed through
// beams -> susceptibility maps -> channel metrics. Per-row failures are
// recorded in the row notes; they never abort the remaining rows.
inline std::vector<ComparisonRow> run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  std::vector<ComparisonRow> rows;
  rows.reserve(cfg.orders.size());
  for (int order : cfg.orders) {
    SuperGaussianBeam bx = cfg.beam_x;
    SuperGaussianBeam by = cfg.beam_y;
    bx.order = by.order = order;
    const auto [omega1, omega2] = control_field_maps(bx, by, cfg.grid);
    const ChannelResult abs_result = detail::channel_metrics(
        cfg, cfg.abs_detuning, SensingChannel::Absorption, omega1, omega2);
    const ChannelResult eit_result = detail::channel_metrics(
        cfg, cfg.eit_detuning, SensingChannel::Dispersion, omega1, omega2);
    rows.push_back(build_comparison_row(order, abs_result, eit_result));
  }
  return rows;
}

struct ScanResult {
  std::vector<double> detunings;
  std::vector<std::optional<double>> metric_values;  // max gradient, or inactive
  std::optional<double> best_detuning;
};

// Max-gradient of one channel across a detuning range. Inactive points
// carry no value; best_detuning maximizes the defined entries with ties
// broken toward positive detuning.
inline ScanResult detuning_scan(const ScenarioConfig& cfg, SensingChannel channel,
                                double range_min, double range_max, int steps) {
  cfg.validate();
  if (steps < 3) throw ValidationError("scan steps must be >= 3");
  if (!(range_min < range_max))
    throw ValidationError("scan range_min must be below range_max");
  const auto [omega1, omega2] = control_field_maps(cfg.beam_x, cfg.beam_y, cfg.grid);
  ScanResult result;
  result.detunings.reserve(steps);
  result.metric_values.reserve(steps);
  double best = -1.0;
  for (int i = 0; i < steps; ++i) {
    const double dp = range_min + (range_max - range_min) * i / (steps - 1);
    result.detunings.push_back(dp);
    detail::ChannelMaps maps = detail::evaluate_channel(cfg, dp, channel, omega1, omega2);
    if (!maps.signal.active) {
      result.metric_values.emplace_back();
      continue;
    }
    const double grad = max_gradient(gradient_map(maps.signal));
    result.metric_values.emplace_back(grad);
    if (grad > best || (grad == best && result.best_detuning && dp > *result.best_detuning)) {
      best = grad;
      result.best_detuning = dp;
    }
  }
  if (!result.best_detuning)
    throw AllInactive("every scan point produced an inactive channel");
  return result;
}

// Reference gradient-ratio targets for the same-detuning protocol,
// used by waist calibration.
struct CalibrationTarget {
  int order;
  double gradient_ratio;
};

inline const std::vector<CalibrationTarget>& same_detuning_reference_ratios() {
  static const std::vector<CalibrationTarget> targets = {
      {1, 2.35}, {2, 2.31}, {3, 2.21}, {10, 1.59}};
  return targets;
}

struct CalibrationOutcome {
  double waist = 0.0;
  // (candidate waist, summed squared relative error) per candidate,
  // in input order.
  std::vector<std::pair<double, double>> errors;
};

// Pick the candidate waist minimizing the summed squared relative error
// of the same-detuning gradient ratios against the targets. Rows whose
// ratio is undefined contribute a full (1.0) squared error.
inline CalibrationOutcome calibrate_waist(const ScenarioConfig& base,
                                          std::span<const CalibrationTarget> targets,
                                          std::span<const double> candidates) {
  if (candidates.empty()) throw ValidationError("waist candidates must not be empty");
  if (targets.empty()) throw ValidationError("calibration targets must not be empty");
  ScenarioConfig cfg = base;
  cfg.kind = ScenarioKind::SameDetuning;
  cfg.abs_detuning = cfg.eit_detuning = 0.5;
  cfg.orders.clear();
  for (const auto& t : targets) cfg.orders.push_back(t.order);

  CalibrationOutcome outcome;
  double best_err = std::numeric_limits<double>::infinity();
  for (double w : candidates) {
    if (!(w > 0.0)) throw ValidationError("waist candidates must be > 0");
    cfg.beam_x.waist = cfg.beam_y.waist = w;
    const std::vector<ComparisonRow> rows = run_scenario(cfg);
    double err = 0.0;
    for (size_t i = 0; i < targets.size(); ++i) {
      if (rows[i].gradient_ratio) {
        const double rel =
            (*rows[i].gradient_ratio - targets[i].gradient_ratio) / targets[i].gradient_ratio;
        err += rel * rel;
      } else {
        err += 1.0;
      }
    }
    outcome.errors.emplace_back(w, err);
    if (err < best_err) {
      best_err = err;
      outcome.waist = w;
    }
  }
  return outcome;
}

}  // namespace tripod
