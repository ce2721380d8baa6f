#pragma once

#include <cmath>
#include <string>

#include "exact_scalar.hpp"

namespace polynet {

// ---------------------------------------------------------------------------
// domain types
// ---------------------------------------------------------------------------

enum class KappaPhase { Simple, NonSimple };

// SLE parameter. Kept rational so every identity below is decidable exactly;
// irrational kappa goes through the *_f double-precision twins instead.
class Kappa {
 public:
  explicit Kappa(const Rational& v) : v_(v) {
    if (v.sign() <= 0)
      throw Error(Errc::UnsupportedCombination, "kappa must be positive, got " + v.str());
  }
  explicit Kappa(long long v) : Kappa(Rational(v)) {}
  Kappa(long long p, long long q) : Kappa(Rational(p, q)) {}

  const Rational& value() const { return v_; }
  KappaPhase phase() const {
    return v_ <= Rational(4) ? KappaPhase::Simple : KappaPhase::NonSimple;
  }
  std::string str() const { return v_.str(); }

 private:
  Rational v_;
};

inline const char* phase_name(KappaPhase p) {
  return p == KappaPhase::Simple ? "simple" : "non-simple";
}

enum class DimFlavor { Standard, Dual };

// quantum (Liouville) scaling dimension, tagged by which KPZ map it feeds:
// Standard pairs with the gamma-map U_gamma, Dual with the kappa-map U_kappa.
struct QuantumDim {
  ExactScalar value;
  DimFlavor flavor = DimFlavor::Standard;
};

enum class WeightKind { Wedge, Cone };

// weight of a quantum wedge (boundary) or cone (bulk); welding structures
// adds their weights, which is where the closed forms below come from.
struct WedgeWeight {
  ExactScalar W;
  WeightKind kind = WeightKind::Wedge;
};

// ---------------------------------------------------------------------------
// KPZ maps
// ---------------------------------------------------------------------------

// step function with the half-convention at the jump
inline Rational heaviside(const Rational& t) {
  const int s = t.sign();
  if (s > 0) return Rational(1);
  if (s < 0) return Rational(0);
  return Rational(1, 2);
}

// LQG coupling squared: gamma^2 = kappa for kappa<=4, 16/kappa above
inline Rational gamma_sq(const Kappa& kappa) {
  const Rational& k = kappa.value();
  const Rational dual = Rational(16) / k;
  return k <= dual ? k : dual;
}

// U_kappa(Delta) = (1/4) Delta (kappa Delta + 4 - kappa)
inline ExactScalar kpz_u(const Kappa& kappa, const ExactScalar& delta) {
  const ExactScalar k{kappa.value()};
  return delta * (k * delta + ExactScalar(Rational(4)) - k) / ExactScalar(Rational(4));
}

// V_kappa(Delta) = (1/(16 kappa)) [kappa^2 Delta^2 - (4-kappa)^2],
// which must coincide with U_kappa at the shifted argument (Delta+1-4/kappa)/2.
inline ExactScalar kpz_v(const Kappa& kappa, const ExactScalar& delta) {
  const Rational& k = kappa.value();
  const ExactScalar kd = ExactScalar(k) * delta;
  const Rational off = Rational(4) - k;
  const ExactScalar v =
      (kd * kd - ExactScalar(off * off)) / ExactScalar(Rational(16) * k);
  const ExactScalar shifted =
      (delta + ExactScalar(Rational(1) - Rational(4) / k)) / ExactScalar(Rational(2));
  if (!(v == kpz_u(kappa, shifted)))
    throw Error(Errc::InternalInconsistency, "kpz_v disagrees with shifted kpz_u");
  return v;
}

// positive inverse of U_kappa: (1/(2 kappa)) (sqrt(16 kappa x + (4-kappa)^2) + kappa - 4).
// the radical stays symbolic when the discriminant is not a perfect square;
// either way U_kappa round-trips exactly.
inline ExactScalar kpz_u_inverse(const Kappa& kappa, const ExactScalar& x) {
  const Rational& k = kappa.value();
  const Rational xr = x.as_rational();
  const Rational off = Rational(4) - k;
  const Rational disc = Rational(16) * k * xr + off * off;
  if (disc.sign() < 0)
    throw Error(Errc::NegativeDiscriminant,
                "kpz_u_inverse: 16*kappa*x + (4-kappa)^2 = " + disc.str() + " < 0");
  const ExactScalar root = ExactScalar::sqrt_of(disc);
  const ExactScalar inv =
      (root + ExactScalar(k - Rational(4))) / ExactScalar(Rational(2) * k);
  if (!(kpz_u(kappa, inv) == x))
    throw Error(Errc::InternalInconsistency, "kpz_u_inverse failed to round-trip");
  return inv;
}

// U^{-1}_kappa(0) = theta(kappa-4) (1 - 4/kappa): zero in the simple phase,
// positive for kappa>4 (a non-simple curve keeps a nonzero quantum dimension)
inline ExactScalar u_inv_zero(const Kappa& kappa) {
  const Rational& k = kappa.value();
  return ExactScalar(heaviside(k - Rational(4)) * (Rational(1) - Rational(4) / k));
}

// ---------------------------------------------------------------------------
// multiple-SLE exponent families x_{L,j}
// ---------------------------------------------------------------------------

namespace detail {
inline void require_positive_L(long long L) {
  if (L < 1)
    throw Error(Errc::UnsupportedCombination,
                "L must be >= 1, got " + std::to_string(L));
}
inline void require_j(long long j, long long j_max, const char* where) {
  if (j < 0 || j > j_max)
    throw Error(Errc::JOutOfRange, std::string(where) + ": j must be in [0, " +
                                       std::to_string(j_max) + "], got " +
                                       std::to_string(j));
}
}  // namespace detail

// dual quantum boundary exponent of L curves with j of them "detached":
// 2L/kappa + j U^{-1}_kappa(0)
inline QuantumDim delta_Lj(const Kappa& kappa, long long L, long long j) {
  detail::require_positive_L(L);
  if (j < 0) throw Error(Errc::JOutOfRange, "delta_Lj: j must be >= 0");
  const ExactScalar d = ExactScalar(Rational(2 * L) / kappa.value()) +
                        ExactScalar(Rational(j)) * u_inv_zero(kappa);
  return {d, DimFlavor::Dual};
}

// Euclidean surface exponent of the (L, j) family:
// (1/(4 kappa)) [2L + j(kappa-4)] [2L + (j-1)(kappa-4)].
// defined for every kappa>0; the j>0 conditioning only has its geometric
// meaning in the non-simple phase (see Kappa::phase()).
inline ExactScalar x_surface_Lj(const Kappa& kappa, long long L, long long j) {
  detail::require_positive_L(L);
  detail::require_j(j, L + 1, "x_surface_Lj");
  const Rational& k = kappa.value();
  const Rational off = k - Rational(4);
  const Rational a = Rational(2 * L) + Rational(j) * off;
  const Rational b = Rational(2 * L) + Rational(j - 1) * off;
  return ExactScalar(a * b / (Rational(4) * k));
}

// Euclidean bulk exponent of the (L, j) family:
// (1/(8 kappa)) [2L + (j+1)(kappa-4)] [2L + (j-1)(kappa-4)]
inline ExactScalar x_bulk_Lj(const Kappa& kappa, long long L, long long j) {
  detail::require_positive_L(L);
  detail::require_j(j, L, "x_bulk_Lj");
  const Rational& k = kappa.value();
  const Rational off = k - Rational(4);
  const Rational a = Rational(2 * L) + Rational(j + 1) * off;
  const Rational b = Rational(2 * L) + Rational(j - 1) * off;
  return ExactScalar(a * b / (Rational(8) * k));
}

// boundary exponent of L curves with SLE_kappa(rho1, rho2) weightings
// (dilute phase only): (1/(4 kappa)) (2L+rho1+rho2) (2L+rho1+rho2+4-kappa)
inline ExactScalar x_L_rho(const Kappa& kappa, long long L, const Rational& rho1,
                           const Rational& rho2) {
  detail::require_positive_L(L);
  if (kappa.value() > Rational(4))
    throw Error(Errc::UnsupportedCombination, "x_L_rho is defined for kappa <= 4");
  const Rational& k = kappa.value();
  const Rational s = Rational(2 * L) + rho1 + rho2;
  return ExactScalar(s * (s + Rational(4) - k) / (Rational(4) * k));
}

// boundary-intersection exponent of a single SLE_kappa(rho):
// beta = (1/kappa)(2+rho)(2+rho+2-kappa/2). the formula is total; the
// Hausdorff-dimension reading 1-beta needs rho strictly inside
// (max(-2, kappa/2-4), kappa/2-2), reported via in_range.
struct RhoBeta {
  ExactScalar beta;
  bool in_range = false;
};

inline RhoBeta sle_rho_boundary_beta(const Kappa& kappa, const Rational& rho) {
  const Rational& k = kappa.value();
  const Rational two_r = Rational(2) + rho;
  const ExactScalar beta((two_r * (two_r + Rational(2) - k / Rational(2))) / k);
  const Rational lo_a = Rational(-2);
  const Rational lo_b = k / Rational(2) - Rational(4);
  const Rational lo = lo_a > lo_b ? lo_a : lo_b;
  const Rational hi = k / Rational(2) - Rational(2);
  return {beta, rho > lo && rho < hi};
}

// 1 - beta, only meaningful inside the allowed rho window
inline ExactScalar sle_rho_intersection_dimension(const Kappa& kappa,
                                                  const Rational& rho) {
  const RhoBeta rb = sle_rho_boundary_beta(kappa, rho);
  if (!rb.in_range)
    throw Error(Errc::RhoOutOfRange,
                "rho = " + rho.str() + " outside the dimension window for kappa = " +
                    kappa.str());
  return ExactScalar(Rational(1)) - rb.beta;
}

// ---------------------------------------------------------------------------
// quantum wedges and cones (non-simple phase welding, gamma^2 = 16/kappa)
// ---------------------------------------------------------------------------

namespace detail {
inline void require_non_simple(const Kappa& kappa, const char* where) {
  if (kappa.phase() != KappaPhase::NonSimple)
    throw Error(Errc::UnsupportedCombination,
                std::string(where) + " needs kappa > 4, got " + kappa.str());
}
}  // namespace detail

// boundary structure: L quantum strips of weight 2 - gamma^2/2 welded with
// L+1-j thick wedges of weight gamma^2 - 2 and j weight-2 wedges; the total is
// W = L gamma^2/2 + (4 - gamma^2) j + gamma^2 - 2
inline WedgeWeight wedge_weight_boundary(const Kappa& kappa, long long L, long long j) {
  detail::require_positive_L(L);
  detail::require_non_simple(kappa, "wedge_weight_boundary");
  detail::require_j(j, L + 1, "wedge_weight_boundary");
  const Rational g2 = gamma_sq(kappa);
  const Rational W = Rational(L) * g2 / Rational(2) +
                     (Rational(4) - g2) * Rational(j) + g2 - Rational(2);
  return {ExactScalar(W), WeightKind::Wedge};
}

// bulk structure: the same strips and j detached paths folded into a cone,
// W = L gamma^2/2 + j (4 - gamma^2)
inline WedgeWeight cone_weight_bulk(const Kappa& kappa, long long L, long long j) {
  detail::require_positive_L(L);
  detail::require_non_simple(kappa, "cone_weight_bulk");
  detail::require_j(j, L, "cone_weight_bulk");
  const Rational g2 = gamma_sq(kappa);
  const Rational W =
      Rational(L) * g2 / Rational(2) + Rational(j) * (Rational(4) - g2);
  return {ExactScalar(W), WeightKind::Cone};
}

// simple-phase wedge of L curves with rho weightings: W = 2(L+1) + rho1 + rho2
inline WedgeWeight wedge_weight_rho(const Kappa& kappa, long long L,
                                    const Rational& rho1, const Rational& rho2) {
  detail::require_positive_L(L);
  if (kappa.value() > Rational(4))
    throw Error(Errc::UnsupportedCombination, "wedge_weight_rho is defined for kappa <= 4");
  return {ExactScalar(Rational(2 * (L + 1)) + rho1 + rho2), WeightKind::Wedge};
}

struct DimPair {
  QuantumDim standard;
  QuantumDim dual;
};

// gamma(1 - Delta) = (4/gamma)(1 - Delta~), cleared of radicals
inline bool dual_pairing_holds(const QuantumDim& standard, const QuantumDim& dual,
                               const Kappa& kappa) {
  const ExactScalar one{Rational(1)};
  const ExactScalar lhs = ExactScalar(gamma_sq(kappa)) * (one - standard.value);
  const ExactScalar rhs = ExactScalar(Rational(4)) * (one - dual.value);
  return lhs == rhs;
}

// read the (standard, dual) quantum dimensions off a weight.
// wedges: W = 2 + gamma^2 Delta and W = gamma^2 - 2 + 4 Delta~.
// cones: go through the log-singularity strength alpha = Q - W/(2 gamma) with
// Q = gamma/2 + 2/gamma, then Delta = 1 - alpha/gamma, Delta~ = 1 - gamma alpha/4.
inline DimPair weight_to_dims(const WedgeWeight& w, const Kappa& kappa) {
  const Rational g2 = gamma_sq(kappa);
  DimPair out;
  if (w.kind == WeightKind::Wedge) {
    out.standard = {(w.W - ExactScalar(Rational(2))) / ExactScalar(g2),
                    DimFlavor::Standard};
    out.dual = {(w.W + ExactScalar(Rational(2)) - ExactScalar(g2)) /
                    ExactScalar(Rational(4)),
                DimFlavor::Dual};
  } else {
    const ExactScalar gamma = ExactScalar::sqrt_of(g2);
    const ExactScalar two{Rational(2)};
    const ExactScalar q = gamma / two + two / gamma;
    const ExactScalar alpha = q - w.W / (two * gamma);
    const ExactScalar one{Rational(1)};
    out.standard = {one - alpha / gamma, DimFlavor::Standard};
    out.dual = {one - gamma * alpha / ExactScalar(Rational(4)), DimFlavor::Dual};
  }
  if (!dual_pairing_holds(out.standard, out.dual, kappa))
    throw Error(Errc::InternalInconsistency, "weight_to_dims broke the dual pairing");
  return out;
}

// one welding sanity sweep: the standard map on the wedge dimension, the dual
// map on its dual, and the direct x_{L,j} surface formula must agree; the cone
// (available for j <= L) must reproduce the bulk formula via 2 U_gamma.
inline bool welding_consistency(const Kappa& kappa, long long L, long long j) {
  detail::require_positive_L(L);
  detail::require_non_simple(kappa, "welding_consistency");
  detail::require_j(j, L + 1, "welding_consistency");
  const Kappa kappa_gamma(gamma_sq(kappa));  // U_gamma == U at kappa' = gamma^2

  const DimPair surf = weight_to_dims(wedge_weight_boundary(kappa, L, j), kappa);
  const ExactScalar via_standard = kpz_u(kappa_gamma, surf.standard.value);
  const ExactScalar via_dual = kpz_u(kappa, surf.dual.value);
  if (!(via_standard == via_dual)) return false;
  if (!(via_standard == x_surface_Lj(kappa, L, j))) return false;

  if (j <= L) {
    const DimPair bulk = weight_to_dims(cone_weight_bulk(kappa, L, j), kappa);
    const ExactScalar doubled =
        ExactScalar(Rational(2)) * kpz_u(kappa_gamma, bulk.standard.value);
    if (!(doubled == x_bulk_Lj(kappa, L, j))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// special transition and the modified KPZ map (dilute range 2 <= kappa <= 4)
// ---------------------------------------------------------------------------

namespace detail {
inline void require_dilute(const Kappa& kappa, const char* where) {
  if (kappa.value() < Rational(2) || kappa.value() > Rational(4))
    throw Error(Errc::UnsupportedCombination,
                std::string(where) + " needs 2 <= kappa <= 4, got " + kappa.str());
}
}  // namespace detail

// special-transition quantum boundary dimension Delta = 2L/kappa - 1
inline QuantumDim special_quantum_dim(const Kappa& kappa, long long L) {
  detail::require_positive_L(L);
  detail::require_dilute(kappa, "special_quantum_dim");
  return {ExactScalar(Rational(2 * L) / kappa.value() - Rational(1)), DimFlavor::Dual};
}

// special-transition surface exponent (1/(4 kappa)) (2L-kappa)(2L+4-2kappa);
// equals U_kappa of the dimension above and x_L_rho at rho1=rho2=-kappa/2
inline ExactScalar special_x(const Kappa& kappa, long long L) {
  detail::require_positive_L(L);
  detail::require_dilute(kappa, "special_x");
  const Rational& k = kappa.value();
  const Rational x = (Rational(2 * L) - k) * (Rational(2 * L) + Rational(4) - Rational(2) * k) /
                     (Rational(4) * k);
  return ExactScalar(x);
}

// mixed-condition map U^(Delta) = (gamma^2/4) Delta^2 + (1 - gamma^2/2) Delta;
// differs from the standard map in the linear term only
inline ExactScalar modified_kpz(const ExactScalar& gamma_lqg, const ExactScalar& delta) {
  const ExactScalar g2 = gamma_lqg * gamma_lqg;
  const ExactScalar four{Rational(4)};
  const ExactScalar one{Rational(1)};
  const ExactScalar two{Rational(2)};
  return g2 / four * delta * delta + (one - g2 / two) * delta;
}

// ---------------------------------------------------------------------------
// double-precision twins (irrational kappa); compare with kFloatTol
// ---------------------------------------------------------------------------

inline constexpr double kFloatTol = 1e-12;

inline double kpz_u_f(double kappa, double delta) {
  return 0.25 * delta * (kappa * delta + 4.0 - kappa);
}

inline double kpz_v_f(double kappa, double delta) {
  const double kd = kappa * delta;
  const double off = 4.0 - kappa;
  return (kd * kd - off * off) / (16.0 * kappa);
}

inline double kpz_u_inverse_f(double kappa, double x) {
  const double off = 4.0 - kappa;
  const double disc = 16.0 * kappa * x + off * off;
  if (disc < 0.0)
    throw Error(Errc::NegativeDiscriminant, "kpz_u_inverse_f: negative discriminant");
  return (std::sqrt(disc) + kappa - 4.0) / (2.0 * kappa);
}

inline double u_inv_zero_f(double kappa) {
  return kappa > 4.0 ? 1.0 - 4.0 / kappa : 0.0;
}

inline double x_surface_Lj_f(double kappa, long long L, long long j) {
  const double off = kappa - 4.0;
  const double ld = static_cast<double>(L), jd = static_cast<double>(j);
  return (2.0 * ld + jd * off) * (2.0 * ld + (jd - 1.0) * off) / (4.0 * kappa);
}

inline double x_bulk_Lj_f(double kappa, long long L, long long j) {
  const double off = kappa - 4.0;
  const double ld = static_cast<double>(L), jd = static_cast<double>(j);
  return (2.0 * ld + (jd + 1.0) * off) * (2.0 * ld + (jd - 1.0) * off) / (8.0 * kappa);
}

}  // namespace polynet
