#pragma once

#include "vacemit/config.hpp"
#include "vacemit/report.hpp"

namespace vacemit {

/// Current floor, F-N transform, linear fit, then (if enabled) nonlinear
/// refinement seeded from the linear fit. The pinned quantity from the config
/// converts the fit into beta or phi.
FitReport fit_curve(const RunConfig& config, const IVCurve& curve);

/// Turn-on read off measured data: the first crossing of threshold,
/// interpolated in log-current between bracketing samples.
double measured_turn_on(const IVCurve& curve, double threshold_current);

}  // namespace vacemit
