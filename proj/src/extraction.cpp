#include "vacemit/extraction.hpp"

#include <algorithm>
#include <cmath>

#include "vacemit/constants.hpp"
#include "vacemit/emission.hpp"
#include "vacemit/errors.hpp"

namespace vacemit {

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

double sum_of(std::size_t n, auto&& term) {
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) terms[i] = term(i);
  return pairwise_sum(terms);
}

struct UsableSample {
  double voltage;
  double current;
};

std::vector<UsableSample> usable_samples(const IVCurve& curve) {
  std::vector<UsableSample> out;
  for (const auto& s : curve.samples) {
    if (s.voltage > 0.0 && s.current > 0.0 && std::isfinite(s.voltage) &&
        std::isfinite(s.current)) {
      out.push_back({s.voltage, s.current});
    }
  }
  return out;
}

// R^2 of the F-N linearisation y = ln(I/V^2) against ln C - B/V.
double fn_r_squared(const std::vector<UsableSample>& samples, double c, double b) {
  const std::size_t n = samples.size();
  auto y = [&](std::size_t i) {
    return std::log(samples[i].current / (samples[i].voltage * samples[i].voltage));
  };
  const double mean = sum_of(n, y) / static_cast<double>(n);
  const double sst = sum_of(n, [&](std::size_t i) { return (y(i) - mean) * (y(i) - mean); });
  const double ln_c = std::log(c);
  const double ssr = sum_of(n, [&](std::size_t i) {
    const double r = y(i) - (ln_c - b / samples[i].voltage);
    return r * r;
  });
  if (sst <= 0.0) return ssr == 0.0 ? 1.0 : 0.0;
  return std::clamp(1.0 - ssr / sst, 0.0, 1.0);
}

}  // namespace

FNTransform fn_transform(const IVCurve& curve) {
  validate(curve);
  FNTransform out;
  for (const auto& s : curve.samples) {
    if (s.voltage > 0.0 && s.current > 0.0) {
      out.points.push_back({1.0 / s.voltage, std::log(s.current / (s.voltage * s.voltage))});
    } else {
      ++out.dropped;
    }
  }
  if (out.points.size() < 2) {
    throw InsufficientData("fn_transform: fewer than 2 samples with V > 0 and I > 0");
  }
  return out;
}

IVCurve apply_current_floor(const IVCurve& curve, double floor) {
  IVCurve out;
  out.metadata = curve.metadata;
  for (const auto& s : curve.samples) {
    if (s.current >= floor) out.samples.push_back(s);
  }
  return out;
}

FitResult fn_linear_fit(std::span<const FNPlotPoint> input) {
  const std::size_t n = input.size();
  if (n < 2) throw InsufficientData("fn_linear_fit: need at least 2 points");

  // Sorting first makes the summation order, and so the result bits,
  // independent of the caller's point order.
  std::vector<FNPlotPoint> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end(), [](const FNPlotPoint& a, const FNPlotPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InvalidInput("fn_linear_fit: non-finite point");
    }
  }
  if (pts.front().x == pts.back().x) throw SingularFit("fn_linear_fit: all x values are equal");

  const double dn = static_cast<double>(n);
  const double x_mean = sum_of(n, [&](std::size_t i) { return pts[i].x; }) / dn;
  const double y_mean = sum_of(n, [&](std::size_t i) { return pts[i].y; }) / dn;
  const double sxx =
      sum_of(n, [&](std::size_t i) { return (pts[i].x - x_mean) * (pts[i].x - x_mean); });
  const double sxy =
      sum_of(n, [&](std::size_t i) { return (pts[i].x - x_mean) * (pts[i].y - y_mean); });
  const double syy =
      sum_of(n, [&](std::size_t i) { return (pts[i].y - y_mean) * (pts[i].y - y_mean); });
  if (!(sxx > 0.0)) throw SingularFit("fn_linear_fit: degenerate x spread");

  const double slope = sxy / sxx;
  const double intercept = y_mean - slope * x_mean;
  const double ssr = sum_of(n, [&](std::size_t i) {
    const double r = pts[i].y - (intercept + slope * pts[i].x);
    return r * r;
  });

  FitResult fit;
  fit.prefactor_C = std::exp(intercept);
  fit.slope_B = -slope;
  fit.n_points = n;
  fit.residual_norm = std::sqrt(ssr);
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ssr / syy, 0.0, 1.0) : 1.0;
  if (n == 2) fit.r_squared = 1.0;

  if (n > 2) {
    const double s2 = ssr / (dn - 2.0);
    const double var_slope = s2 / sxx;
    const double var_intercept = s2 * (1.0 / dn + x_mean * x_mean / sxx);
    const double cov_intercept_slope = -x_mean * s2 / sxx;
    const double c = fit.prefactor_C;
    // Delta method: C = exp(intercept), B = -slope.
    fit.covariance = {{{c * c * var_intercept, -c * cov_intercept_slope},
                       {-c * cov_intercept_slope, var_slope}}};
    fit.covariance_determined = true;
  }
  return fit;
}

TwoPointSolution two_point_solve(IVSample p1, IVSample p2) {
  for (const auto& p : {p1, p2}) {
    if (!std::isfinite(p.voltage) || p.voltage <= 0.0) {
      throw InvalidInput("two_point_solve: voltages must be > 0");
    }
    if (!std::isfinite(p.current) || p.current <= 0.0) {
      throw InvalidInput("two_point_solve: currents must be > 0");
    }
  }
  if (p1.voltage == p2.voltage) throw InvalidInput("two_point_solve: degenerate input, equal voltages");

  const double y1 = std::log(p1.current / (p1.voltage * p1.voltage));
  const double y2 = std::log(p2.current / (p2.voltage * p2.voltage));
  const double b = (y1 - y2) / (1.0 / p2.voltage - 1.0 / p1.voltage);
  return TwoPointSolution{std::exp(y1 + b / p1.voltage), b};
}

double fn_model_current(TwoPointSolution params, double voltage) {
  if (!(voltage > 0.0)) return 0.0;
  return params.prefactor_C * voltage * voltage * std::exp(-params.slope_B / voltage);
}

std::vector<std::array<double, 2>> residual_jacobian(TwoPointSolution params,
                                                     const IVCurve& curve) {
  std::vector<std::array<double, 2>> rows;
  rows.reserve(curve.size());
  for (const auto& s : curve.samples) {
    const double v = s.voltage;
    if (!(v > 0.0)) {
      rows.push_back({0.0, 0.0});
      continue;
    }
    const double e = std::exp(-params.slope_B / v);
    rows.push_back({v * v * e, -params.prefactor_C * v * e});
  }
  return rows;
}

namespace {

struct Linearization {
  std::vector<double> residuals;
  std::vector<std::array<double, 2>> jacobian;
};

Linearization linearize(const std::vector<UsableSample>& samples, double c, double b,
                        ResidualSpace space) {
  Linearization lin;
  lin.residuals.reserve(samples.size());
  lin.jacobian.reserve(samples.size());
  for (const auto& s : samples) {
    if (space == ResidualSpace::log_current) {
      lin.residuals.push_back(std::log(c) + 2.0 * std::log(s.voltage) - b / s.voltage -
                              std::log(s.current));
      lin.jacobian.push_back({1.0 / c, -1.0 / s.voltage});
    } else {
      const double e = std::exp(-b / s.voltage);
      lin.residuals.push_back(c * s.voltage * s.voltage * e - s.current);
      lin.jacobian.push_back({s.voltage * s.voltage * e, -c * s.voltage * e});
    }
  }
  return lin;
}

double cost_of(const std::vector<double>& residuals) {
  return sum_of(residuals.size(), [&](std::size_t i) { return residuals[i] * residuals[i]; });
}

struct Normal {
  Matrix2 jtj;
  std::array<double, 2> jtr;
};

Normal normal_equations(const Linearization& lin) {
  const std::size_t n = lin.residuals.size();
  const auto& jac = lin.jacobian;
  Normal ne;
  ne.jtj[0][0] = sum_of(n, [&](std::size_t i) { return jac[i][0] * jac[i][0]; });
  ne.jtj[0][1] = sum_of(n, [&](std::size_t i) { return jac[i][0] * jac[i][1]; });
  ne.jtj[1][1] = sum_of(n, [&](std::size_t i) { return jac[i][1] * jac[i][1]; });
  ne.jtj[1][0] = ne.jtj[0][1];
  ne.jtr[0] = sum_of(n, [&](std::size_t i) { return jac[i][0] * lin.residuals[i]; });
  ne.jtr[1] = sum_of(n, [&](std::size_t i) { return jac[i][1] * lin.residuals[i]; });
  return ne;
}

bool singular(const Matrix2& m) {
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return !(m[0][0] > 0.0 && m[1][1] > 0.0) || !(det > 1e-14 * m[0][0] * m[1][1]);
}

}  // namespace

FitResult nonlinear_refine(const IVCurve& curve, TwoPointSolution initial,
                           const RefineOptions& options) {
  if (!std::isfinite(initial.prefactor_C) || initial.prefactor_C <= 0.0 ||
      !std::isfinite(initial.slope_B) || initial.slope_B <= 0.0) {
    throw InvalidInput("nonlinear_refine: initial C and B must be finite and > 0");
  }
  const auto samples = usable_samples(curve);
  if (samples.size() < 3) throw InsufficientData("nonlinear_refine: need at least 3 points");

  double c = initial.prefactor_C;
  double b = initial.slope_B;
  Linearization lin = linearize(samples, c, b, options.residual_space);
  double cost = cost_of(lin.residuals);
  double lambda = 1e-3;
  bool converged = false;
  int iteration = 0;

  while (iteration < options.max_iterations) {
    ++iteration;
    const Normal ne = normal_equations(lin);
    if (singular(ne.jtj)) throw SingularFit("nonlinear_refine: singular normal equations");

    // Marquardt scaling: damp each parameter relative to its own curvature.
    const double a00 = ne.jtj[0][0] * (1.0 + lambda);
    const double a11 = ne.jtj[1][1] * (1.0 + lambda);
    const double a01 = ne.jtj[0][1];
    const double det = a00 * a11 - a01 * a01;
    const double dc = -(a11 * ne.jtr[0] - a01 * ne.jtr[1]) / det;
    const double db = -(a00 * ne.jtr[1] - a01 * ne.jtr[0]) / det;

    const bool small_step = std::abs(dc) <= options.relative_tolerance * std::abs(c) &&
                            std::abs(db) <= options.relative_tolerance * std::abs(b);

    const double c_trial = c + dc;
    const double b_trial = b + db;
    if (c_trial > 0.0 && std::isfinite(c_trial) && std::isfinite(b_trial)) {
      Linearization trial = linearize(samples, c_trial, b_trial, options.residual_space);
      const double trial_cost = cost_of(trial.residuals);
      if (trial_cost <= cost) {
        c = c_trial;
        b = b_trial;
        cost = trial_cost;
        lin = std::move(trial);
        lambda = std::max(lambda * 0.1, 1e-12);
        if (small_step) {
          converged = true;
          break;
        }
        continue;
      }
    }
    if (small_step) {
      converged = true;
      break;
    }
    lambda *= 10.0;
  }

  if (!converged) {
    throw NonConvergence("nonlinear_refine: no convergence after " +
                             std::to_string(options.max_iterations) + " iterations",
                         c, b, iteration);
  }

  FitResult fit;
  fit.prefactor_C = c;
  fit.slope_B = b;
  fit.n_points = samples.size();
  fit.iterations = iteration;
  fit.residual_norm = std::sqrt(cost);
  fit.r_squared = fn_r_squared(samples, c, b);

  const Normal ne = normal_equations(lin);
  if (!singular(ne.jtj)) {
    const double s2 = cost / static_cast<double>(samples.size() - 2);
    const double det = ne.jtj[0][0] * ne.jtj[1][1] - ne.jtj[0][1] * ne.jtj[1][0];
    fit.covariance = {{{s2 * ne.jtj[1][1] / det, -s2 * ne.jtj[0][1] / det},
                       {-s2 * ne.jtj[0][1] / det, s2 * ne.jtj[0][0] / det}}};
    fit.covariance_determined = true;
  }
  return fit;
}

double extract_beta(const FitResult& fit, const Material& material) {
  if (!(fit.slope_B > 0.0)) throw UnphysicalFit("extract_beta: slope B must be > 0");
  return fn_coefficients(material).b_fn / fit.slope_B;
}

double extract_work_function(const FitResult& fit, const DeviceGeometry& geometry) {
  if (!(fit.slope_B > 0.0)) throw UnphysicalFit("extract_work_function: slope B must be > 0");
  validate(geometry);
  const double ratio =
      fit.slope_B * geometry.field_conversion_beta / constants::fowler_nordheim().k2;
  return std::cbrt(ratio * ratio);
}

}  // namespace vacemit
