#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vacemit/types.hpp"

namespace vacemit {

/// One point of a Fowler-Nordheim plot: x = 1/V, y = ln(I / V^2).
struct FNPlotPoint {
  double x;
  double y;
};

struct FNTransform {
  std::vector<FNPlotPoint> points;
  std::size_t dropped = 0;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Voltage-space Fowler-Nordheim fit, I = C V^2 exp(-B / V).
struct FitResult {
  double prefactor_C = 0.0;  // A/V^2
  double slope_B = 0.0;      // V
  // Covariance of (C, B). Left zero when it cannot be estimated (two points).
  Matrix2 covariance{};
  bool covariance_determined = false;
  double r_squared = 0.0;
  double residual_norm = 0.0;
  std::size_t n_points = 0;
  int iterations = 0;
  std::optional<double> extracted_beta;  // m^-1
  std::optional<double> extracted_phi;   // eV
};

/// Samples with V > 0 and I > 0 only; throws InsufficientData below 2 points.
FNTransform fn_transform(const IVCurve& curve);

/// Drop samples whose current is below floor (instrument noise).
IVCurve apply_current_floor(const IVCurve& curve, double floor);

/// Ordinary least squares of y = ln C - B x.
FitResult fn_linear_fit(std::span<const FNPlotPoint> points);

struct TwoPointSolution {
  double prefactor_C;
  double slope_B;
};

/// Closed-form C and B through two (V, I) operating points.
TwoPointSolution two_point_solve(IVSample p1, IVSample p2);

enum class ResidualSpace { log_current, current };

struct RefineOptions {
  ResidualSpace residual_space = ResidualSpace::log_current;
  int max_iterations = 200;
  double relative_tolerance = 1e-10;
};

/// Levenberg-Marquardt refinement of (C, B) against the raw curve. Samples
/// with V <= 0 or I <= 0 are skipped. Accepted steps never increase the
/// residual norm.
FitResult nonlinear_refine(const IVCurve& curve, TwoPointSolution initial,
                           const RefineOptions& options = {});

/// Rows (dI/dC, dI/dB) = (V^2 e^{-B/V}, -C V e^{-B/V}); V = 0 rows are zero.
std::vector<std::array<double, 2>> residual_jacobian(TwoPointSolution params,
                                                     const IVCurve& curve);

/// beta = b_fn(phi) / B.
double extract_beta(const FitResult& fit, const Material& material);

/// phi = (B beta / k2)^{2/3} with beta from the geometry.
double extract_work_function(const FitResult& fit, const DeviceGeometry& geometry);

/// Model current C V^2 exp(-B/V), 0 at V <= 0.
double fn_model_current(TwoPointSolution params, double voltage);

/// Pairwise summation with a fixed split order.
double pairwise_sum(std::span<const double> values);

}  // namespace vacemit
