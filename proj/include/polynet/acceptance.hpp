#pragma once

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "census_io.hpp"
#include "enumeration.hpp"
#include "exponents.hpp"
#include "fitting.hpp"

namespace polynet {

// ---------------------------------------------------------------------------
// enumeration-backed acceptance battery
// ---------------------------------------------------------------------------
//
// The exact identity suites (verify.hpp) answer in milliseconds; the checks
// here run the enumeration engine and the fitting pipeline end to end, so
// they cost seconds to minutes. Tolerances are frozen from calibration runs
// of the shipped engine at the stated sizes — they gate regressions, they do
// not chase the asymptotic values (N <= 28 censuses cannot).

struct LabCheck {
  std::string name;
  bool passed = false;
  bool informational = false;  // reported but never gates a battery
  std::string detail;
};

inline bool lab_all_passed(const std::vector<LabCheck>& checks) {
  for (const auto& c : checks)
    if (!c.informational && !c.passed) return false;
  return true;
}

namespace lab {

// frozen battery shape
inline constexpr int kSquareNMax = 20;
inline constexpr int kHexNMax = 26;

// frozen tolerances for the square-lattice desk runs at N_max = 20
inline constexpr double kGammaTol = 0.10;
inline constexpr double kNuTol = 0.05;
inline constexpr double kBridgeTol = 0.12;
inline constexpr double kArchTol = 0.15;
inline constexpr double kDiffTol = 0.10;

// the weighting shift lands near +1/2 but drifts with N, hence a wide fence
inline constexpr double kShiftLo = 0.2;
inline constexpr double kShiftHi = 0.8;

// successive-ratio fence around the hexagonal growth constant sqrt(2+sqrt 2)
inline constexpr double kRatioTol = 0.05;

inline std::string fmt(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(5) << v;
  return os.str();
}

inline WalkCensus run_square(EnsembleTag tag, int threads) {
  Lattice lattice{LatticeTag::Square};
  Ensemble ensemble;
  ensemble.tag = tag;
  return enumerate(lattice, ensemble, kSquareNMax, threads);
}

// one fitted quantity: the three-point solve is the headline number, the
// ratio extrapolation must agree with it within joint spreads
inline LabCheck exponent_check(const std::string& name, const WalkCensus& census,
                               double target, double tol, FitResult* keep = nullptr) {
  const FitResult tps = fit_entropic(census, FitMethod::ThreePointSolve);
  const FitResult ratio = fit_entropic(census, FitMethod::RatioExtrapolation);
  if (keep) *keep = tps;
  LabCheck check;
  check.name = name;
  const bool close = std::abs(tps.exponent_estimate - target) <= tol;
  const bool agree = fits_agree(tps, ratio);
  check.passed = close && agree;
  check.detail = "three-point " + fmt(tps.exponent_estimate) + " (spread " +
                 fmt(tps.exponent_spread) + "), ratio " +
                 fmt(ratio.exponent_estimate) + " (spread " +
                 fmt(ratio.exponent_spread) + "), target " + fmt(target) +
                 " +- " + fmt(tol) + (agree ? "" : ", methods disagree");
  return check;
}

}  // namespace lab

// square-lattice exponent recovery at N_max = 20: gamma, nu, the bridge and
// arch surface exponents, and their difference against nu
inline std::vector<LabCheck> desk_scale_exponent_checks(int threads) {
  using namespace lab;
  std::vector<LabCheck> out;

  const WalkCensus free_walks = run_square(EnsembleTag::Free, threads);
  const WalkCensus bridges = run_square(EnsembleTag::Bridge, threads);
  const WalkCensus arches = run_square(EnsembleTag::Arch, threads);

  FitResult gamma_fit, bridge_fit, arch_fit;
  out.push_back(exponent_check("gamma (free walks)", free_walks, 43.0 / 32.0,
                               kGammaTol, &gamma_fit));

  const FitResult nu_fit = fit_nu(free_walks);
  {
    LabCheck check;
    check.name = "nu (mean squared extent)";
    check.passed = std::abs(nu_fit.exponent_estimate - 0.75) <= kNuTol;
    check.detail = "estimate " + fmt(nu_fit.exponent_estimate) + " (spread " +
                   fmt(nu_fit.exponent_spread) + "), target 0.75000 +- " +
                   fmt(kNuTol);
    out.push_back(check);
  }

  out.push_back(exponent_check("gamma_b (bridges)", bridges, 9.0 / 16.0,
                               kBridgeTol, &bridge_fit));
  out.push_back(exponent_check("gamma_11 (arches)", arches, -3.0 / 16.0,
                               kArchTol, &arch_fit));

  {
    // difference of the two headline fits; its ingredients carry their own
    // method-agreement gates already
    LabCheck check;
    check.name = "gamma_b - gamma_11";
    const double diff = bridge_fit.exponent_estimate - arch_fit.exponent_estimate;
    check.passed = std::abs(diff - 0.75) <= kDiffTol;
    check.detail = "estimate " + fmt(diff) + ", target 0.75000 +- " + fmt(kDiffTol);
    out.push_back(check);
  }

  {
    // cross-ensemble consistency: the same difference should track the
    // independently fitted nu (exactly gamma_b - gamma_11 = nu)
    LabCheck check;
    check.name = "consistency triangle";
    check.informational = true;
    const double diff = bridge_fit.exponent_estimate - arch_fit.exponent_estimate;
    const double gap = std::abs(diff - nu_fit.exponent_estimate);
    const double allowance = bridge_fit.exponent_spread + arch_fit.exponent_spread +
                             nu_fit.exponent_spread;
    check.passed = gap <= allowance;
    check.detail = "|(gamma_b - gamma_11) - nu| = " + fmt(gap) +
                   ", joint spread " + fmt(allowance);
    out.push_back(check);
  }

  return out;
}

// polygon weighting shift on the honeycomb at the adsorption point: weighting
// each polygon by its wall-contact count shifts the size exponent by +1/2
// (the fitted difference is gated by a deliberately loose fence)
inline std::vector<LabCheck> polygon_weighting_checks(int threads) {
  using namespace lab;
  Lattice lattice{LatticeTag::Hexagonal};
  Ensemble unit;
  unit.tag = EnsembleTag::Polygon;
  unit.surface_fugacity = ExactScalar(Rational(1), Rational(1), 2);  // 1 + sqrt 2
  Ensemble weighted = unit;
  weighted.weighting = PolygonWeighting::ContactCount;

  const WalkCensus unit_census = enumerate(lattice, unit, kHexNMax, threads);
  const WalkCensus weighted_census = enumerate(lattice, weighted, kHexNMax, threads);
  const FitResult shift = fit_polygon_shift(unit_census, weighted_census);

  LabCheck check;
  check.name = "contact-weighting shift (hexagonal polygons)";
  check.passed = shift.exponent_estimate > 0.0 &&
                 shift.exponent_estimate >= kShiftLo &&
                 shift.exponent_estimate <= kShiftHi;
  check.detail = "estimate " + fmt(shift.exponent_estimate) + " (spread " +
                 fmt(shift.exponent_spread) + ") over N in [" +
                 std::to_string(shift.window_lo) + ", " +
                 std::to_string(shift.window_hi) + "], fence [" + fmt(kShiftLo) +
                 ", " + fmt(kShiftHi) + "], target +0.5";
  return {check};
}

// free-walk successive count ratios on the honeycomb settle onto the growth
// constant sqrt(2 + sqrt 2) from above; the last five must sit inside the
// fence (enclosure from both sides is impossible here: the subleading
// correction has one sign)
inline std::vector<LabCheck> connective_constant_checks(int threads) {
  using namespace lab;
  Lattice lattice{LatticeTag::Hexagonal};
  Ensemble ensemble;  // free walks
  const WalkCensus census = enumerate(lattice, ensemble, kHexNMax, threads);

  const double target = std::sqrt(2.0 + std::sqrt(2.0));
  LabCheck check;
  check.name = "hexagonal growth-constant bracket";
  check.passed = true;
  std::string ratios;
  for (int n = kHexNMax - 4; n <= kHexNMax; ++n) {
    const double r = census.counts.at(n).to_double() /
                     census.counts.at(n - 1).to_double();
    if (std::abs(r - target) > kRatioTol) check.passed = false;
    if (!ratios.empty()) ratios += " ";
    ratios += fmt(r);
  }
  check.detail = "last five ratios " + ratios + ", target " + fmt(target) +
                 " +- " + fmt(kRatioTol);
  return {check};
}

inline std::vector<LabCheck> run_lab_battery(int threads) {
  std::vector<LabCheck> all;
  for (auto* group : {&desk_scale_exponent_checks, &polygon_weighting_checks,
                      &connective_constant_checks}) {
    auto checks = (*group)(threads);
    all.insert(all.end(), checks.begin(), checks.end());
  }
  return all;
}

}  // namespace polynet
