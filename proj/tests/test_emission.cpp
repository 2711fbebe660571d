#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "vacemit/constants.hpp"
#include "vacemit/emission.hpp"
#include "vacemit/errors.hpp"

using namespace vacemit;

namespace {

// Fixtures from tests/oracles/emission_oracle.py (mpmath, 50 digits).
constexpr double k1_oracle = 3.0828677458430855e-6;
constexpr double k2_oracle = 6830889626.2332408;
constexpr double a_fn_45_oracle = 6.8508172129846345e-7;
constexpr double b_fn_45_oracle = 65207273079.325936;
constexpr double j_full_45_oracle = 37140745.198275724;     // phi = mu = 4.5 eV, F = 5e9
constexpr double j_full_al_oracle = 88943956.628693615;     // phi 4.28, mu 11.7, F = 5e9
constexpr double thermionic_2500_oracle = 6360.0459569866006;  // k = 8.617333e-5 eV/K

Material tungsten_like() { return Material{"w", 4.5, 4.5, 1.20e6}; }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Constants, PositiveAndConsistent) {
  const auto& c = constants::physical();
  EXPECT_GT(c.boltzmann_J_per_K, 0.0);
  EXPECT_GT(c.boltzmann_eV_per_K, 0.0);
  EXPECT_GT(c.reduced_planck_hbar, 0.0);
  EXPECT_GT(c.electron_charge_q, 0.0);
  EXPECT_GT(c.electron_mass_m, 0.0);
  EXPECT_LT(rel(c.boltzmann_eV_per_K * c.electron_charge_q, c.boltzmann_J_per_K), 1e-12);
}

TEST(Constants, FowlerNordheimMatchOracle) {
  EXPECT_LT(rel(constants::fowler_nordheim().k1, k1_oracle), 1e-14);
  EXPECT_LT(rel(constants::fowler_nordheim().k2, k2_oracle), 1e-14);
}

TEST(Thermionic, ZeroTemperatureIsZero) {
  EXPECT_EQ(thermionic_current_density(tungsten_like(), 0.0), 0.0);
}

TEST(Thermionic, DeskCheck2500K) {
  // The library uses exact CODATA k; the hand value uses k = 8.617333e-5.
  EXPECT_LT(rel(thermionic_current_density(tungsten_like(), 2500.0), thermionic_2500_oracle), 1e-5);
}

TEST(Thermionic, RoomTemperatureNegligible) {
  const double j = thermionic_current_density(tungsten_like(), 300.0);
  EXPECT_GE(j, 0.0);
  EXPECT_LT(j, 1e-60);
}

TEST(Thermionic, RejectsBadTemperature) {
  EXPECT_THROW(thermionic_current_density(tungsten_like(), -1.0), InvalidInput);
  EXPECT_THROW(thermionic_current_density(tungsten_like(), std::nan("")), InvalidInput);
  EXPECT_THROW(thermionic_current_density(tungsten_like(), INFINITY), InvalidInput);
}

TEST(FowlerNordheim, CoefficientsAtUnitWorkFunction) {
  const auto c = fn_coefficients(1.0);
  EXPECT_DOUBLE_EQ(c.a_fn, c.k1);
  EXPECT_DOUBLE_EQ(c.b_fn, c.k2);
}

TEST(FowlerNordheim, CoefficientScaling) {
  const auto c45 = fn_coefficients(tungsten_like());
  EXPECT_NEAR(c45.b_fn / fn_coefficients(1.0).b_fn, std::pow(4.5, 1.5), 1e-12);
  EXPECT_NEAR(c45.b_fn / fn_coefficients(1.0).b_fn, 9.545, 1e-3);
  EXPECT_LT(rel(c45.a_fn, a_fn_45_oracle), 1e-14);
  EXPECT_LT(rel(c45.b_fn, b_fn_45_oracle), 1e-14);
  EXPECT_LT(rel(c45.a_fn * 4.5, c45.k1), 1e-12);
  EXPECT_LT(rel(c45.b_fn / std::pow(4.5, 1.5), c45.k2), 1e-12);
}

TEST(FowlerNordheim, FullMatchesOracle) {
  EXPECT_LT(rel(fn_current_density_full(tungsten_like(), 5e9), j_full_45_oracle), 1e-12);
  EXPECT_LT(rel(fn_current_density_full(Material{"al", 4.28, 11.7, 1.2e6}, 5e9), j_full_al_oracle),
            1e-12);
}

TEST(FowlerNordheim, ZeroFieldIsZero) {
  EXPECT_EQ(fn_current_density_full(tungsten_like(), 0.0), 0.0);
  EXPECT_EQ(fn_current_density_simplified(fn_coefficients(4.5), 0.0), 0.0);
}

TEST(FowlerNordheim, SimplifiedUnitEvaluation) {
  EXPECT_NEAR(fn_current_density_simplified({1.0, 1.0, 0.0, 0.0}, 1.0), std::exp(-1.0), 1e-15);
  EXPECT_DOUBLE_EQ(fn_current_density_simplified({2.5, 0.0, 0.0, 0.0}, 3.0), 2.5 * 9.0);
}

TEST(FowlerNordheim, NegativeFieldRejected) {
  EXPECT_THROW(fn_current_density_full(tungsten_like(), -1.0), InvalidInput);
  EXPECT_THROW(fn_current_density_simplified(fn_coefficients(4.5), -1.0), InvalidInput);
}

TEST(FowlerNordheim, FullEqualsSimplifiedWhenMuEqualsPhi) {
  std::mt19937_64 rng(7);
  // Above ~4.7 eV the density at 1e8 V/m drops into the subnormal range,
  // where relative comparisons are meaningless.
  std::uniform_real_distribution<double> phi_dist(1.0, 4.6);
  for (int trial = 0; trial < 20; ++trial) {
    const double phi = phi_dist(rng);
    const Material m{"x", phi, phi, 1.2e6};
    for (int i = 0; i < 100; ++i) {
      const double field = std::pow(10.0, 8.0 + 2.0 * i / 99.0);
      const double full = fn_current_density_full(m, field);
      const double simple = fn_current_density_simplified(fn_coefficients(m), field);
      ASSERT_GT(full, 0.0);
      ASSERT_LT(rel(simple, full), 1e-12) << "phi=" << phi << " F=" << field;
    }
  }
}

TEST(FowlerNordheim, TinyFieldUnderflowsToZero) {
  for (double f : {1e-3, 1.0, 1e3}) {
    const double full = fn_current_density_full(tungsten_like(), f);
    const double simple = fn_current_density_simplified(fn_coefficients(4.5), f);
    EXPECT_TRUE(std::isfinite(full));
    EXPECT_EQ(full, 0.0);
    EXPECT_EQ(simple, 0.0);
  }
}

TEST(FowlerNordheim, MonotoneInField) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_f(8.0, 11.0);
  const auto c = fn_coefficients(4.28);
  for (int i = 0; i < 500; ++i) {
    double f1 = std::pow(10.0, log_f(rng));
    double f2 = std::pow(10.0, log_f(rng));
    if (f1 == f2) continue;
    if (f1 > f2) std::swap(f1, f2);
    EXPECT_LT(fn_current_density_simplified(c, f1), fn_current_density_simplified(c, f2));
  }
}

TEST(FowlerNordheim, FNPlotIsAffine) {
  const auto c = fn_coefficients(4.28);
  // ln(J/F^2) = ln a - b (1/F): every point lies on the line through the
  // first and last sample.
  const double f0 = 2e9, f1 = 2e10;
  auto y = [&](double f) { return std::log(fn_current_density_simplified(c, f) / (f * f)); };
  const double slope = (y(f1) - y(f0)) / (1.0 / f1 - 1.0 / f0);
  for (int i = 1; i < 50; ++i) {
    const double f = f0 + (f1 - f0) * i / 50.0;
    const double predicted = y(f0) + slope * (1.0 / f - 1.0 / f0);
    EXPECT_LT(std::abs(y(f) - predicted) / std::abs(predicted), 1e-10);
  }
  EXPECT_NEAR(-slope / c.b_fn, 1.0, 1e-10);
}

TEST(LocalField, ProductAndEnhancement) {
  DeviceGeometry g;
  g.field_conversion_beta = 5e8;
  g.gap_d = 2e-6;
  EXPECT_EQ(local_field(g, 0.0).field, 0.0);
  EXPECT_DOUBLE_EQ(local_field(g, 100.0).field, 5e10);
  EXPECT_NEAR(local_field(g, 1.0).enhancement, 1000.0, 1e-9);
  EXPECT_THROW(local_field(g, -1.0), InvalidInput);
}

TEST(MaterialValidation, RejectsNonPositive) {
  EXPECT_THROW(fn_coefficients(Material{"bad", 0.0, 4.0, 1.2e6}), InvalidInput);
  EXPECT_THROW(fn_current_density_full(Material{"bad", 4.0, -1.0, 1.2e6}, 1e9), InvalidInput);
  EXPECT_THROW(thermionic_current_density(Material{"bad", 4.0, 4.0, 0.0}, 300.0), InvalidInput);
}
