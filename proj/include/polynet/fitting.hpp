#pragma once

// Series analysis on walk censuses: extract the growth constant mu and the
// entropic exponent from the model c_N ~ mu^N N^(g-1), and the metric
// exponent nu from mean squared end-to-end distances.  Everything here is
// double precision and deterministic; spreads are heuristics (max deviation
// of the raw per-N estimators from the extrapolated value), not confidence
// intervals.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <polynet/enumeration.hpp>
#include <polynet/errors.hpp>

namespace polynet {

enum class FitMethod { ThreePointSolve, RatioExtrapolation };

inline std::string fit_method_name(FitMethod m) {
  return m == FitMethod::ThreePointSolve ? "three_point_solve" : "ratio_extrapolation";
}

struct FitResult {
  double mu_estimate = 0.0;
  double exponent_estimate = 0.0;
  double exponent_spread = 0.0;
  FitMethod method = FitMethod::ThreePointSolve;
  int window_lo = 0;  // smallest N entering the final extrapolation
  int window_hi = 0;
};

// two fits are consistent when their estimates overlap within joint spreads;
// a small absolute floor keeps two fully converged fits (both spreads ~0)
// from "disagreeing" over float-level residue
inline bool fits_agree(const FitResult& a, const FitResult& b) {
  return std::abs(a.exponent_estimate - b.exponent_estimate) <=
         a.exponent_spread + b.exponent_spread + 2e-3;
}

namespace detail {

// trailing uniformly spaced run of lengths with positive counts; censuses
// with a parity constraint (polygons) enter with stride 2
struct SeriesTail {
  std::vector<int> n;
  std::vector<double> log_count;
  int stride = 1;
};

inline SeriesTail census_tail(const WalkCensus& census, std::size_t min_points) {
  std::vector<int> keys;
  keys.reserve(census.counts.size());
  for (const auto& [n, c] : census.counts) keys.push_back(n);
  if (keys.size() < min_points)
    throw Error(Errc::InsufficientData,
                "need at least " + std::to_string(min_points) + " counts, have " +
                    std::to_string(keys.size()));
  int stride = 0;
  for (std::size_t i = 1; i < keys.size(); ++i)
    stride = stride == 0 ? keys[i] - keys[i - 1] : std::min(stride, keys[i] - keys[i - 1]);
  std::size_t begin = keys.size() - 1;
  while (begin > 0 && keys[begin] - keys[begin - 1] == stride) --begin;
  if (keys.size() - begin < min_points)
    throw Error(Errc::InsufficientData,
                "need " + std::to_string(min_points) + " evenly spaced counts, have " +
                    std::to_string(keys.size() - begin));
  SeriesTail tail;
  tail.stride = stride;
  for (std::size_t i = begin; i < keys.size(); ++i) {
    const double c = census.counts.at(keys[i]).to_double();
    if (!(c > 0.0))
      throw Error(Errc::NonPositiveCount,
                  "count at N=" + std::to_string(keys[i]) + " is not positive");
    tail.n.push_back(keys[i]);
    tail.log_count.push_back(std::log(c));
  }
  return tail;
}

// least squares line y = a + b*x, returning (a, b)
inline std::pair<double, double> ls_line(const std::vector<double>& x,
                                         const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  return {(sy * sxx - sx * sxy) / det, (n * sxy - sx * sy) / det};
}

// extrapolate per-N estimates to N -> infinity: fit the last (up to) five
// points linearly in 1/N and keep the intercept; spread = worst deviation
inline FitResult extrapolate_tail(const std::vector<int>& n,
                                  const std::vector<double>& est, FitMethod method) {
  const std::size_t tail = std::min<std::size_t>(5, est.size());
  const std::size_t first = est.size() - tail;
  std::vector<double> x, y;
  for (std::size_t i = first; i < est.size(); ++i) {
    x.push_back(1.0 / n[i]);
    y.push_back(est[i]);
  }
  const auto [intercept, slope] = ls_line(x, y);
  (void)slope;
  FitResult r;
  r.method = method;
  r.exponent_estimate = intercept;
  for (std::size_t i = first; i < est.size(); ++i)
    r.exponent_spread = std::max(r.exponent_spread, std::abs(est[i] - intercept));
  r.window_lo = n[first];
  r.window_hi = n.back();
  return r;
}

// consecutive lengths carry a strong even/odd oscillation (the alternating
// correction from the singularity at -mu), so solves on a stride-1 census
// hop two entries at a time and compare same-parity counts only; censuses
// already restricted to one parity (polygons) keep their natural spacing
inline std::size_t parity_hop(const SeriesTail& t) { return t.stride == 1 ? 2 : 1; }

inline FitResult fit_three_point(const SeriesTail& t) {
  const std::size_t hop = parity_hop(t);
  const int s = t.stride * static_cast<int>(hop);
  std::vector<int> ns;
  std::vector<double> g, mu;
  for (std::size_t i = 2 * hop; i < t.n.size(); ++i) {
    const double N = t.n[i];
    const double d1 = t.log_count[i] - t.log_count[i - hop];
    const double d2 = t.log_count[i - hop] - t.log_count[i - 2 * hop];
    const double denom = std::log(N * (N - 2 * s) / ((N - s) * (N - s)));
    const double gm1 = (d1 - d2) / denom;
    const double log_mu = (d1 - gm1 * std::log(N / (N - s))) / s;
    ns.push_back(t.n[i]);
    g.push_back(gm1 + 1.0);
    mu.push_back(std::exp(log_mu));
  }
  FitResult r = extrapolate_tail(ns, g, FitMethod::ThreePointSolve);
  const std::size_t tail = std::min<std::size_t>(5, mu.size());
  std::vector<double> x, y;
  for (std::size_t i = mu.size() - tail; i < mu.size(); ++i) {
    x.push_back(1.0 / ns[i]);
    y.push_back(mu[i]);
  }
  r.mu_estimate = ls_line(x, y).first;
  return r;
}

inline FitResult fit_ratio_extrapolation(const SeriesTail& t) {
  const std::size_t hop = parity_hop(t);
  const int s = t.stride * static_cast<int>(hop);
  std::vector<int> ns;
  std::vector<double> log_ratio;
  for (std::size_t i = hop; i < t.n.size(); ++i) {
    ns.push_back(t.n[i]);
    log_ratio.push_back((t.log_count[i] - t.log_count[i - hop]) / s);
  }
  // r_N = mu (N/(N-s))^((g-1)/s) tends to mu.  Neville in 1/N on same-parity
  // nodes walking back from the top length, deepening one node at a time:
  // each extra node is exact progress on clean model data but amplifies
  // correction terms and noise on real censuses, so the usable depth is
  // where consecutive diagonal entries stop approaching each other
  const std::size_t depth_cap =
      std::min<std::size_t>(8, 1 + (ns.size() - 1) / hop);
  std::vector<double> x, diag, p, q;
  for (std::size_t k = 0; k < depth_cap; ++k) {
    const std::size_t i = ns.size() - 1 - k * hop;
    const double xk = 1.0 / ns[i];
    q.assign(1, std::exp(log_ratio[i]));
    for (std::size_t j = 1; j <= k; ++j)
      q.push_back((xk * p[j - 1] - x[k - j] * q[j - 1]) / (xk - x[k - j]));
    x.push_back(xk);
    p = q;
    diag.push_back(q.back());
  }
  std::size_t best = diag.size() - 1;
  for (std::size_t k = 2; k < diag.size(); ++k)
    if (std::abs(diag[k] - diag[k - 1]) > std::abs(diag[k - 1] - diag[k - 2])) {
      best = k - 1;
      break;
    }
  const double mu_hat = diag[best];
  const double mu_gap = std::abs(diag[best] - diag[best - 1]);
  // with mu fixed, one ratio determines the exponent exactly under the
  // model; residual 1/N drift is removed by the usual linear extrapolation
  std::vector<int> gn;
  std::vector<double> g;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double N = ns[i];
    gn.push_back(ns[i]);
    g.push_back(1.0 + s * (log_ratio[i] - std::log(mu_hat)) / std::log(N / (N - s)));
  }
  FitResult r = extrapolate_tail(gn, g, FitMethod::RatioExtrapolation);
  r.mu_estimate = mu_hat;
  // the exponent inherits any error in mu_hat amplified by ~N, so the
  // ladder's own convergence gap joins the spread
  r.exponent_spread += ns.back() * mu_gap / std::abs(mu_hat);
  return r;
}

}  // namespace detail

inline FitResult fit_entropic(const WalkCensus& census, FitMethod method) {
  const auto tail = detail::census_tail(census, 8);
  return method == FitMethod::ThreePointSolve ? detail::fit_three_point(tail)
                                              : detail::fit_ratio_extrapolation(tail);
}

// metric exponent from mean squared end-to-end distance ~ N^(2 nu); the
// method field keeps its ThreePointSolve default (local windowed solves
// extrapolated in 1/N, same pipeline shape)
inline FitResult fit_nu(const WalkCensus& census) {
  if (census.r2_sums.empty())
    throw Error(Errc::InsufficientData, "census lacks distance sums (free ensemble only)");
  const auto tail = detail::census_tail(census, 8);
  std::vector<double> log_n, log_mean;
  for (std::size_t i = 0; i < tail.n.size(); ++i) {
    const auto it = census.r2_sums.find(tail.n[i]);
    if (it == census.r2_sums.end() || it->second <= 0)
      throw Error(Errc::NonPositiveCount,
                  "distance sum at N=" + std::to_string(tail.n[i]) + " is not positive");
    log_n.push_back(std::log(static_cast<double>(tail.n[i])));
    log_mean.push_back(std::log(static_cast<double>(it->second)) - tail.log_count[i]);
  }
  // local slope over a sliding window, then the usual 1/N extrapolation
  constexpr std::size_t window = 6;
  std::vector<int> ns;
  std::vector<double> nu_est;
  for (std::size_t end = window; end <= log_n.size(); ++end) {
    std::vector<double> x(log_n.begin() + (end - window), log_n.begin() + end);
    std::vector<double> y(log_mean.begin() + (end - window), log_mean.begin() + end);
    ns.push_back(tail.n[end - 1]);
    nu_est.push_back(detail::ls_line(x, y).second / 2.0);
  }
  FitResult r = detail::extrapolate_tail(ns, nu_est, FitMethod::ThreePointSolve);
  const std::size_t last = tail.n.size() - 1;
  r.mu_estimate = std::exp((tail.log_count[last] - tail.log_count[last - 1]) / tail.stride);
  return r;
}

// exponent gap between two weightings of the same ensemble, fitted on the
// per-length count ratio: the growth constant and most of the shape noise
// cancel configuration by configuration, which matters for sparse polygon
// censuses where two independent entropic fits would drown in noise
inline FitResult fit_polygon_shift(const WalkCensus& unit, const WalkCensus& weighted) {
  WalkCensus ratio;
  ratio.n_max = std::max(unit.n_max, weighted.n_max);
  for (const auto& [n, cu] : unit.counts) {
    const auto it = weighted.counts.find(n);
    if (it == weighted.counts.end()) continue;
    if (cu.sign() <= 0)
      throw Error(Errc::NonPositiveCount, "count at N=" + std::to_string(n) + " is not positive");
    ratio.counts[n] = it->second / cu;
  }
  const auto tail = detail::census_tail(ratio, 8);
  // the ratio still alternates between the two length classes N mod 2*stride
  // (the residue of the singularity at -mu), and polygon tails are too short
  // to average that out; so fit each class separately on its own log-log
  // slopes, extrapolate both linearly in 1/N, and keep the class whose slope
  // sequence tracks its line best -- the other one's misfit goes into the
  // spread as an honest cross-class uncertainty
  const std::size_t m = tail.n.size();
  struct ClassFit {
    std::vector<int> ns;
    std::vector<double> slopes;
    double intercept = 0.0, misfit = 0.0;
    bool usable = false;
  };
  ClassFit cls[2];
  for (int c = 0; c < 2; ++c) {
    ClassFit& f = cls[c];
    int prev = -1;
    for (std::size_t i = 0; i < m; ++i) {
      if ((m - 1 - i) % 2 != static_cast<std::size_t>(c)) continue;
      if (prev >= 0) {
        f.ns.push_back(tail.n[i]);
        f.slopes.push_back((tail.log_count[i] - tail.log_count[prev]) /
                           (std::log(double(tail.n[i])) - std::log(double(tail.n[prev]))));
      }
      prev = static_cast<int>(i);
    }
    if (f.slopes.size() < 2) continue;
    std::vector<double> x;
    for (int n : f.ns) x.push_back(1.0 / n);
    const auto [a, b] = detail::ls_line(x, f.slopes);
    f.intercept = a;
    for (std::size_t i = 0; i < x.size(); ++i)
      f.misfit = std::max(f.misfit, std::abs(f.slopes[i] - (a + b * x[i])));
    f.usable = true;
  }
  if (!cls[0].usable && !cls[1].usable)
    throw Error(Errc::InsufficientData, "too few lengths per parity class");
  const ClassFit& pick = !cls[1].usable || (cls[0].usable && cls[0].misfit <= cls[1].misfit)
                             ? cls[0]
                             : cls[1];
  FitResult r;
  r.method = FitMethod::RatioExtrapolation;
  r.exponent_estimate = pick.intercept;
  for (std::size_t i = 0; i < pick.slopes.size(); ++i)
    r.exponent_spread = std::max(r.exponent_spread, std::abs(pick.slopes[i] - pick.intercept));
  if (cls[0].usable && cls[1].usable)
    r.exponent_spread =
        std::max(r.exponent_spread, std::abs(cls[0].intercept - cls[1].intercept));
  r.window_lo = pick.ns.front();
  r.window_hi = pick.ns.back();
  r.mu_estimate = 1.0;  // the growth constant cancels in the ratio
  return r;
}

}  // namespace polynet
