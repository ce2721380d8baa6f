#pragma once

#include <optional>
#include <string>
#include <variant>

#include "epsilon_series.hpp"
#include "exact_scalar.hpp"

namespace polynet {

enum class UniversalityClass { SAW, Theta, Brownian, MutuallyAvoiding };
enum class BoundaryCondition { Ordinary, Special, Mixed };

inline const char* class_name(UniversalityClass c) {
  switch (c) {
    case UniversalityClass::SAW: return "saw";
    case UniversalityClass::Theta: return "theta";
    case UniversalityClass::Brownian: return "brownian";
    case UniversalityClass::MutuallyAvoiding: return "maw";
  }
  return "?";
}

inline const char* bc_name(BoundaryCondition b) {
  switch (b) {
    case BoundaryCondition::Ordinary: return "ordinary";
    case BoundaryCondition::Special: return "special";
    case BoundaryCondition::Mixed: return "mixed";
  }
  return "?";
}

// Where the exponents live: exactly two dimensions, a general rational d
// (Brownian closed forms plus the anomalous-free d >= 4 cases), or the
// expansion around four dimensions truncated at the given order.
struct DimensionSetting {
  enum class Kind { Exact2D, GeneralD, Epsilon };
  Kind kind = Kind::Exact2D;
  Rational d = Rational(2);  // meaningful for GeneralD
  int order = 1;             // meaningful for Epsilon

  static DimensionSetting exact2d() { return {}; }
  static DimensionSetting general_d(const Rational& d) {
    if (d.sign() <= 0)
      throw Error(Errc::UnsupportedCombination, "dimension must be positive, got " + d.str());
    DimensionSetting s;
    s.kind = Kind::GeneralD;
    s.d = d;
    return s;
  }
  static DimensionSetting epsilon(int order) {
    if (order != 1 && order != 2)
      throw Error(Errc::UnsupportedCombination, "epsilon order must be 1 or 2");
    DimensionSetting s;
    s.kind = Kind::Epsilon;
    s.order = order;
    return s;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Exact2D: return "2d";
      case Kind::GeneralD: return "d=" + d.str();
      case Kind::Epsilon: return "eps" + std::to_string(order);
    }
    return "?";
  }
};

// Exact rational/radical in the closed-form settings, truncated series in the
// epsilon settings.
using ExponentValue = std::variant<ExactScalar, EpsilonSeries>;

namespace detail {
[[noreturn]] inline void unsupported(const std::string& what) {
  throw Error(Errc::UnsupportedCombination, what);
}
inline void require_L(long long L) {
  if (L < 1) unsupported("leg number L must be >= 1, got " + std::to_string(L));
}
}  // namespace detail

// Correlation-length exponent. SAW and Theta have exact 2D values; Brownian
// and mutually-avoiding walks are diffusive in every setting. SAW above four
// dimensions is anomalous-free, hence also 1/2. No epsilon series for nu is
// provided for SAW/Theta (none exists in closed form here).
inline ExactScalar nu(UniversalityClass cls, const DimensionSetting& setting) {
  using K = DimensionSetting::Kind;
  switch (cls) {
    case UniversalityClass::Brownian:
    case UniversalityClass::MutuallyAvoiding:
      return ExactScalar(Rational(1, 2));
    case UniversalityClass::SAW:
      if (setting.kind == K::Exact2D) return ExactScalar(Rational(3, 4));
      if (setting.kind == K::GeneralD && setting.d >= Rational(4))
        return ExactScalar(Rational(1, 2));
      detail::unsupported("nu for saw is available in 2d or d>=4 only");
    case UniversalityClass::Theta:
      if (setting.kind == K::Exact2D) return ExactScalar(Rational(4, 7));
      detail::unsupported("nu for theta is available in 2d only");
  }
  detail::unsupported("nu");
}

// Bulk L-leg scaling dimension x_L.
inline ExponentValue x_bulk(long long L, UniversalityClass cls,
                            const DimensionSetting& setting) {
  detail::require_L(L);
  using K = DimensionSetting::Kind;
  const Rational Lr(L);

  const auto brownian_general = [&](const Rational& d) {
    return ExactScalar(Lr * (d - Rational(2)) / Rational(2));
  };
  // Brownian part at d = 4 - eps: L(2-eps)/2, exact at every order.
  const auto brownian_series = [&](int order) {
    return EpsilonSeries(order, Lr, -Lr / Rational(2), Rational(0));
  };

  switch (cls) {
    case UniversalityClass::SAW:
      if (setting.kind == K::Exact2D)
        return ExactScalar(Rational((3 * L - 2) * (3 * L + 2), 48));
      if (setting.kind == K::GeneralD) {
        if (setting.d >= Rational(4)) return brownian_general(setting.d);
        detail::unsupported("saw bulk exponents at general d exist for d>=4 only");
      }
      {
        // anomalous correction (eps/8)L(L-1) + (eps/8)^2 (L/4)(-8L^2+33L-23)
        EpsilonSeries s = brownian_series(setting.order);
        EpsilonSeries corr(setting.order, Rational(0), Lr * (Lr - 1) / Rational(8),
                           setting.order >= 2
                               ? Lr * (Rational(-8) * Lr * Lr + Rational(33) * Lr - 23) /
                                     Rational(256)
                               : Rational(0));
        return s + corr;
      }
    case UniversalityClass::Theta:
      if (setting.kind == K::Exact2D) return ExactScalar(Rational(L * L - 1, 12));
      detail::unsupported("theta exponents are exact-2d only");
    case UniversalityClass::Brownian:
      if (setting.kind == K::Exact2D) return brownian_general(Rational(2));
      if (setting.kind == K::GeneralD) return brownian_general(setting.d);
      return brownian_series(setting.order);
    case UniversalityClass::MutuallyAvoiding:
      if (setting.kind == K::Exact2D)
        return ExactScalar(Rational(4 * L * L - 1, 12));
      if (setting.kind == K::GeneralD) {
        if (setting.d >= Rational(4)) return brownian_general(setting.d);
        detail::unsupported("maw bulk exponents at general d exist for d>=4 only");
      }
      {
        // anomalous correction (eps/4)L(L-1) - (eps/4)^2 L(L-1)(2L-5), as printed
        EpsilonSeries s = brownian_series(setting.order);
        EpsilonSeries corr(setting.order, Rational(0), Lr * (Lr - 1) / Rational(4),
                           setting.order >= 2
                               ? -Lr * (Lr - 1) * (Rational(2) * Lr - 5) / Rational(16)
                               : Rational(0));
        return s + corr;
      }
  }
  detail::unsupported("x_bulk");
}

// Surface L-leg scaling dimension x_L^S at the given boundary condition.
inline ExponentValue x_surface(long long L, UniversalityClass cls, BoundaryCondition bc,
                               const DimensionSetting& setting) {
  detail::require_L(L);
  using K = DimensionSetting::Kind;
  const Rational Lr(L);
  const std::string combo = std::string(class_name(cls)) + "/" + bc_name(bc) + "/" +
                            setting.str();

  if (bc != BoundaryCondition::Ordinary) {
    // special and mixed transitions exist only for SAW/Theta in exact 2D
    const bool ok = (cls == UniversalityClass::SAW || cls == UniversalityClass::Theta) &&
                    setting.kind == K::Exact2D;
    if (!ok) detail::unsupported("surface exponent " + combo);
  }
  if (setting.kind == K::Epsilon && setting.order > 1)
    detail::unsupported("surface epsilon series stop at first order (" + combo + ")");

  const auto brownian_general = [&](const Rational& d) {
    return ExactScalar(Lr * d / Rational(2));
  };

  switch (cls) {
    case UniversalityClass::SAW:
      if (setting.kind == K::Exact2D) {
        switch (bc) {
          case BoundaryCondition::Ordinary:
            return ExactScalar(Rational(L * (3 * L + 2), 8));
          case BoundaryCondition::Special:
            return ExactScalar(Rational((3 * L - 4) * (3 * L - 2), 24));
          case BoundaryCondition::Mixed:
            return ExactScalar(Rational(L * (3 * L - 2), 8));
        }
      }
      if (setting.kind == K::GeneralD) {
        if (setting.d >= Rational(4)) return brownian_general(setting.d);
        detail::unsupported("saw surface exponents at general d exist for d>=4 only");
      }
      // ordinary, first order: L(4-eps)/2 + (eps/8)L(L-2)
      return EpsilonSeries(1, Rational(2) * Lr,
                           -Lr / Rational(2) + Lr * (Lr - 2) / Rational(8));
    case UniversalityClass::Theta:
      if (setting.kind != K::Exact2D) detail::unsupported("theta exponents are exact-2d only");
      switch (bc) {
        case BoundaryCondition::Ordinary:
          return ExactScalar(Rational((L + 1) * (L + 2), 6));
        case BoundaryCondition::Special:
          return ExactScalar(Rational(L * (L - 1), 6));
        case BoundaryCondition::Mixed:
          return ExactScalar(Rational(L * (L + 1), 6));
      }
      detail::unsupported(combo);
    case UniversalityClass::Brownian:
      if (setting.kind == K::Exact2D) return brownian_general(Rational(2));
      if (setting.kind == K::GeneralD) return brownian_general(setting.d);
      return EpsilonSeries(1, Rational(2) * Lr, -Lr / Rational(2));
    case UniversalityClass::MutuallyAvoiding:
      if (setting.kind == K::Exact2D)
        return ExactScalar(Rational(L * (2 * L + 1), 3));
      if (setting.kind == K::GeneralD && setting.d >= Rational(4))
        return brownian_general(setting.d);
      detail::unsupported("maw surface exponents exist in 2d and d>=4 only");
  }
  detail::unsupported("x_surface " + combo);
}

// Power of log N multiplying the Theta-point L-star partition function.
inline Rational theta_star_log_power(long long L) {
  detail::require_L(L);
  if (L < 3) return Rational(0);
  const long long binom = L * (L - 1) * (L - 2) / 6;
  return Rational(-binom, 22);
}

struct HausdorffDims {
  Rational bulk;
  std::optional<Rational> adsorbed;  // SAW only
};

// Fractal dimensions 2 - x_2 (bulk) and 1 - x_2^S(sp) (adsorbed, SAW).
// Their ratio for SAW gives the crossover exponent 1/2.
inline HausdorffDims hausdorff_dimensions(UniversalityClass cls) {
  const auto two_d = DimensionSetting::exact2d();
  if (cls == UniversalityClass::SAW) {
    const Rational bulk =
        Rational(2) - std::get<ExactScalar>(x_bulk(2, cls, two_d)).as_rational();
    const Rational ads =
        Rational(1) -
        std::get<ExactScalar>(x_surface(2, cls, BoundaryCondition::Special, two_d))
            .as_rational();
    return {bulk, ads};
  }
  if (cls == UniversalityClass::Theta) {
    const Rational bulk =
        Rational(2) - std::get<ExactScalar>(x_bulk(2, cls, two_d)).as_rational();
    return {bulk, std::nullopt};
  }
  detail::unsupported("hausdorff dimensions are defined for saw and theta");
}

}  // namespace polynet
