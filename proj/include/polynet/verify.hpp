#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "network.hpp"
#include "sle_kpz.hpp"

namespace polynet {

// ---------------------------------------------------------------------------
// one-shot identity battery
// ---------------------------------------------------------------------------
//
// Every suite below re-derives a family of exact identities through the
// public headers and reports pass/fail. Everything is rational (or
// quadratic-irrational) arithmetic: a suite either holds identically or
// names the first counterexample. Enumeration never runs here, so the whole
// battery stays in CI-gate territory (well under a second).

struct SuiteResult {
  std::string name;
  bool passed = true;
  long long checks = 0;      // identities evaluated
  std::string first_fail;    // empty while passed
};

namespace verify_detail {

class Checker {
 public:
  explicit Checker(const char* name) { r_.name = name; }

  void that(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.first_fail = what;
    }
  }

  // equality with a readable counterexample; strings are built lazily
  template <class T>
  void equal(const T& got, const T& want, const std::string& what) {
    ++r_.checks;
    if (got == want) return;
    if (r_.passed) {
      r_.passed = false;
      r_.first_fail = what + ": got " + got.str() + ", want " + want.str();
    }
  }

  long long checks() const { return r_.checks; }
  SuiteResult take() { return std::move(r_); }

 private:
  SuiteResult r_;
};

// -- small construction helpers ---------------------------------------------

inline Rational gamma2d(const std::string& text, UniversalityClass cls) {
  return std::get<ExactScalar>(
             gamma_exponent(parse_network(text), cls, DimensionSetting::exact2d()))
      .as_rational();
}

// star with a single center of the given kind and L one-leg tips
inline std::string star_text(long long L, const std::string& center_kind,
                             const std::string& tip_kind) {
  std::string s = "vertex c " + center_kind + "\n";
  for (long long i = 0; i < L; ++i) {
    s += "vertex t" + std::to_string(i) + " " + tip_kind + "\n";
    s += "chain c t" + std::to_string(i) + "\n";
  }
  return s;
}

inline const char* kChainText = "vertex a bulk\nvertex b bulk\nchain a b\n";
inline const char* kTawText = "vertex s surface\nvertex e bulk\nchain s e\n";
inline const char* kArchText = "vertex s surface\nvertex t surface\nchain s t\n";
inline const char* kBridgeText = "vertex s surface\nvertex t bridge\nchain s t\n";

// random connected multigraph over b bulk and w wall vertices: a spanning
// tree keeps everything connected and degree >= 1, a few extra chains (self
// loops allowed on bulk) add cycles and wall-wall arcs
inline std::string random_network_text(std::mt19937_64& eng, int bulk, int wall,
                                       int extra_chains) {
  const int n = bulk + wall;
  std::string s;
  std::vector<std::string> id(n);
  for (int i = 0; i < n; ++i) {
    id[i] = "v" + std::to_string(i);
    s += "vertex " + id[i] + (i < bulk ? " bulk\n" : " surface\n");
  }
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    s += "chain " + id[i] + " " + id[pick(eng)] + "\n";
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int e = 0; e < extra_chains; ++e) {
    const int a = any(eng);
    int b = any(eng);
    if (a == b && a >= bulk) b = 0;  // keep self loops off the wall
    s += "chain " + id[a] + " " + id[b] + "\n";
  }
  return s;
}

// -- suites ------------------------------------------------------------------

// every closed-form gamma value of the named network families, zero tolerance
inline SuiteResult golden_gamma_table() {
  Checker c("gamma-golden-table");
  using C = UniversalityClass;

  c.equal(gamma2d(kChainText, C::SAW), Rational(43, 32), "gamma");

  // bulk L-leg stars
  for (long long L = 1; L <= 9; ++L)
    c.equal(gamma2d(star_text(L, "bulk", "bulk"), C::SAW),
            Rational(1) + Rational(4 + 9 * L * (3 - L), 64),
            "bulk star L=" + std::to_string(L));

  // single-bridge values per wall condition
  const auto special_bridge = "vertex s surface_special\nvertex t bridge\nchain s t\n";
  const auto mixed_bridge = "vertex s surface_mixed\nvertex t bridge\nchain s t\n";
  c.equal(gamma2d(kBridgeText, C::SAW), Rational(9, 16), "saw bridge");
  c.equal(gamma2d(mixed_bridge, C::SAW), Rational(15, 16), "saw mixed bridge");
  c.equal(gamma2d(special_bridge, C::SAW), Rational(17, 16), "saw special bridge");

  // all-bridge stars, both classes (the stars carry an N-1 chain penalty)
  for (long long L = 1; L <= 9; ++L) {
    const Rational shift(L - 1);
    const std::string tag = " L=" + std::to_string(L);
    c.equal(gamma2d(star_text(L, "surface", "bridge"), C::SAW) + shift,
            Rational(9 * L * (3 - L), 32), "saw bridge star" + tag);
    c.equal(gamma2d(star_text(L, "surface_mixed", "bridge"), C::SAW) + shift,
            Rational(3 * L * (13 - 3 * L), 32), "saw mixed bridge star" + tag);
    c.equal(gamma2d(star_text(L, "surface_special", "bridge"), C::SAW) + shift,
            Rational(51 * L - 9 * L * L - 8, 32), "saw special bridge star" + tag);
    c.equal(gamma2d(star_text(L, "surface_special", "bridge"), C::Theta) + shift,
            Rational(2 * L * (7 - L), 21), "theta special bridge star" + tag);
    c.equal(gamma2d(star_text(L, "surface_mixed", "bridge"), C::Theta) + shift,
            Rational(2 * L * (5 - L), 21), "theta mixed bridge star" + tag);
    c.equal(gamma2d(star_text(L, "surface", "bridge"), C::Theta) + shift,
            Rational(2 * (3 * L - L * L - 2), 21), "theta bridge star" + tag);
  }

  // tricritical singles
  const auto special_taw = "vertex s surface_special\nvertex e bulk\nchain s e\n";
  const auto special_both =
      "vertex s surface_special\nvertex t surface_special\nchain s t\n";
  const auto mixed_taw = "vertex s surface_mixed\nvertex e bulk\nchain s e\n";
  c.equal(gamma2d(kChainText, C::Theta), Rational(8, 7), "theta gamma");
  c.equal(gamma2d(kTawText, C::Theta), Rational(4, 7), "theta gamma1");
  c.equal(gamma2d(kArchText, C::Theta), Rational(-4, 7), "theta gamma11");
  c.equal(gamma2d(special_taw, C::Theta), Rational(8, 7), "theta gamma1 sp");
  c.equal(gamma2d(special_both, C::Theta), Rational(4, 7), "theta gamma11 sp");
  c.equal(gamma2d(kBridgeText, C::Theta), Rational(0), "theta bridge");
  c.equal(gamma2d(special_bridge, C::Theta), Rational(4, 7), "theta special bridge");
  c.equal(gamma2d(mixed_taw, C::Theta), Rational(20, 21), "theta gamma1 mixed");
  c.equal(gamma2d(mixed_bridge, C::Theta), Rational(8, 21), "theta mixed bridge");

  // dilute surface singles
  c.equal(gamma2d(kTawText, C::SAW), Rational(61, 64), "saw gamma1");
  c.equal(gamma2d(kArchText, C::SAW), Rational(-3, 16), "saw gamma11");
  c.equal(gamma2d(special_taw, C::SAW), Rational(93, 64), "saw gamma1 sp");
  c.equal(gamma2d(special_both, C::SAW), Rational(13, 16), "saw gamma11 sp");

  // rooted loops
  c.equal(gamma2d("vertex a bulk\nchain a a\n", C::SAW), Rational(-1, 2),
          "rooted bulk loop");
  c.equal(gamma2d("vertex a surface_special\nchain a a\n", C::SAW), Rational(-1, 4),
          "rooted special loop");
  c.equal(gamma2d("vertex a surface_mixed\nchain a a\n", C::SAW), Rational(-3, 4),
          "rooted mixed loop");

  return c.take();
}

// 2 gamma_1 - gamma_11 = gamma + nu in five class / wall-condition settings
inline SuiteResult barber_relation() {
  Checker c("barber-relation");
  using C = UniversalityClass;
  const auto k2d = DimensionSetting::exact2d();

  struct Combo {
    C cls;
    const char* taw;
    const char* arch;
    const char* tag;
  };
  const auto special_taw = "vertex s surface_special\nvertex e bulk\nchain s e\n";
  const auto special_both =
      "vertex s surface_special\nvertex t surface_special\nchain s t\n";
  const Combo combos[] = {
      {C::SAW, kTawText, kArchText, "saw ordinary"},
      {C::SAW, special_taw, special_both, "saw special"},
      {C::Theta, kTawText, kArchText, "theta ordinary"},
      {C::Theta, special_taw, special_both, "theta special"},
  };
  for (const auto& combo : combos) {
    const Rational lhs = Rational(2) * gamma2d(combo.taw, combo.cls) -
                         gamma2d(combo.arch, combo.cls);
    const Rational rhs =
        gamma2d(kChainText, combo.cls) + nu(combo.cls, k2d).as_rational();
    c.equal(lhs, rhs, std::string("barber ") + combo.tag);
  }

  // fifth setting: the first-order series around four dimensions
  const auto e1 = DimensionSetting::epsilon(1);
  const auto series = [&](const char* text) {
    return std::get<EpsilonSeries>(gamma_exponent(parse_network(text), C::SAW, e1));
  };
  c.equal(Rational(2) * series(kTawText) - series(kArchText),
          series(kChainText) + EpsilonSeries(1, Rational(1, 2), Rational(0)),
          "barber saw series");

  return c.take();
}

// freeing wall vertices into bridges shifts gamma by exact multiples of nu
inline SuiteResult bridge_gamma_identities() {
  Checker c("bridge-gamma-identities");
  using C = UniversalityClass;
  const auto k2d = DimensionSetting::exact2d();
  const auto special_bridge = "vertex s surface_special\nvertex t bridge\nchain s t\n";
  const auto special_both =
      "vertex s surface_special\nvertex t surface_special\nchain s t\n";

  for (auto cls : {C::SAW, C::Theta}) {
    const Rational nu_v = nu(cls, k2d).as_rational();
    const std::string tag = cls == C::SAW ? "saw" : "theta";
    c.equal(gamma2d(kBridgeText, cls), gamma2d(kArchText, cls) + nu_v,
            tag + " bridge = gamma11 + nu");
    c.equal(gamma2d(special_bridge, cls),
            (gamma2d(special_both, cls) + gamma2d(kArchText, cls)) / Rational(2) +
                nu_v,
            tag + " special bridge midpoint");
    // the checker sees the same pair as a one-vertex conversion
    const auto shift = bridge_shift_check(parse_network(kBridgeText),
                                          parse_network(kArchText), cls, k2d);
    c.that(shift.equal, tag + " bridge pair difference is not nu");
  }
  return c.take();
}

// two-leg dimensions close the correlation-length and wall sum rules
inline SuiteResult watermelon_dimensions() {
  Checker c("watermelon-dimensions");
  using C = UniversalityClass;
  const auto k2d = DimensionSetting::exact2d();

  const auto x2_closes = [&](C cls, const DimensionSetting& setting,
                             const Rational& d, const std::string& tag) {
    const auto x2 = std::get<ExactScalar>(x_bulk(2, cls, setting)).as_rational();
    const auto x2s =
        std::get<ExactScalar>(
            x_surface(2, cls, BoundaryCondition::Ordinary, setting))
            .as_rational();
    const Rational inv_nu = Rational(1) / nu(cls, setting).as_rational();
    c.equal(x2, d - inv_nu, tag + " x2 = d - 1/nu");
    c.equal(x2s, d, tag + " x2^S = d");
  };

  x2_closes(C::SAW, k2d, Rational(2), "saw");
  x2_closes(C::Theta, k2d, Rational(2), "theta");
  for (const auto& d : {Rational(1), Rational(2), Rational(3), Rational(4),
                        Rational(7, 2)})
    x2_closes(C::Brownian, DimensionSetting::general_d(d), d, "ideal d=" + d.str());

  return c.take();
}

// gamma of an ideal network collapses to loop and wall counting alone
inline SuiteResult brownian_network_reduction() {
  Checker c("brownian-network-reduction");
  std::mt19937_64 eng(20250614);
  const Rational dims[] = {Rational(1), Rational(2), Rational(3), Rational(4),
                           Rational(7, 2)};

  std::uniform_int_distribution<int> bulk_n(1, 5);
  std::uniform_int_distribution<int> wall_n(0, 3);
  std::uniform_int_distribution<int> extra_n(0, 4);
  for (int trial = 0; trial < 220; ++trial) {
    int bulk = bulk_n(eng);
    const int wall = trial % 2 == 0 ? wall_n(eng) : 0;  // alternate anchored/bulk
    if (bulk + wall < 2) bulk = 2;
    const auto net = parse_network(random_network_text(eng, bulk, wall, extra_n(eng)));
    for (const auto& d : dims) {
      const auto r = brownian_reduction_check(net, d);
      c.that(r.equal, "reduction at d=" + d.str() + " gave " +
                          r.gamma_full.str() + " vs " + r.gamma_reduced.str());
    }
  }
  // 220 trials x 5 dimensions must stay above the thousand-check mark
  c.that(c.checks() >= 1000, "not enough random networks exercised");
  return c.take();
}

// converting k ordinary wall vertices into bridges adds exactly k nu
inline SuiteResult multi_bridge_shift() {
  Checker c("multi-bridge-shift");
  using C = UniversalityClass;
  std::mt19937_64 eng(20250615);

  std::uniform_int_distribution<int> bulk_n(1, 4);
  std::uniform_int_distribution<int> wall_n(2, 4);
  std::uniform_int_distribution<int> extra_n(0, 3);
  for (int trial = 0; trial < 120; ++trial) {
    const int bulk = bulk_n(eng);
    const int wall = wall_n(eng);
    const std::string base = random_network_text(eng, bulk, wall, extra_n(eng));
    std::uniform_int_distribution<int> k_n(1, wall - 1);
    const int k = k_n(eng);  // keep at least one vertex on the wall
    std::string freed = base;
    for (int i = 0; i < k; ++i) {
      const std::string from =
          "vertex v" + std::to_string(bulk + i) + " surface";
      freed.replace(freed.find(from), from.size(),
                    "vertex v" + std::to_string(bulk + i) + " bridge");
    }
    for (auto cls : {C::SAW, C::Theta}) {
      const Rational nu_v =
          nu(cls, DimensionSetting::exact2d()).as_rational();
      c.equal(gamma2d(freed, cls), gamma2d(base, cls) + Rational(k) * nu_v,
              "k=" + std::to_string(k) + " conversion, trial " +
                  std::to_string(trial));
    }
  }
  return c.take();
}

// kappa = 8/3 SLE families land on the dilute two-dimensional tables
inline SuiteResult kpz_saw_collapse() {
  Checker c("kpz-saw-collapse");
  const Kappa kappa(8, 3);
  const auto k2d = DimensionSetting::exact2d();
  for (long long L = 1; L <= 50; ++L) {
    const std::string tag = "L=" + std::to_string(L);
    c.equal(x_bulk_Lj(kappa, L, 0),
            std::get<ExactScalar>(x_bulk(L, UniversalityClass::SAW, k2d)),
            "bulk " + tag);
    c.equal(x_surface_Lj(kappa, L, 0),
            std::get<ExactScalar>(x_surface(L, UniversalityClass::SAW,
                                            BoundaryCondition::Ordinary, k2d)),
            "surface " + tag);
  }
  return c.take();
}

// kappa = 6 SLE families land on the tricritical tables, all wall conditions
inline SuiteResult kpz_theta_collapse() {
  Checker c("kpz-theta-collapse");
  const Kappa kappa(6);
  const auto k2d = DimensionSetting::exact2d();
  using B = BoundaryCondition;
  for (long long L = 1; L <= 50; ++L) {
    const std::string tag = "L=" + std::to_string(L);
    const auto xs = [&](B bc) {
      return std::get<ExactScalar>(x_surface(L, UniversalityClass::Theta, bc, k2d));
    };
    c.equal(x_bulk_Lj(kappa, L, 0),
            std::get<ExactScalar>(x_bulk(L, UniversalityClass::Theta, k2d)),
            "bulk " + tag);
    c.equal(x_surface_Lj(kappa, L, 2), xs(B::Ordinary), "ordinary " + tag);
    c.equal(x_surface_Lj(kappa, L, 0), xs(B::Special), "special " + tag);
    c.equal(x_surface_Lj(kappa, L, 1), xs(B::Mixed), "mixed " + tag);
  }
  return c.take();
}

// the two-leg surface family is invariant under kappa -> 16/kappa
inline SuiteResult kpz_duality() {
  Checker c("kpz-duality");
  for (const auto& k :
       {Rational(5), Rational(6), Rational(8), Rational(16, 3)}) {
    c.equal(x_surface_Lj(Kappa(k), 2, 2), x_surface_Lj(Kappa(Rational(16) / k), 2, 0),
            "dual pair kappa=" + k.str());
  }
  // kappa = 4 is the self-dual point
  c.equal(x_surface_Lj(Kappa(4), 2, 2), x_surface_Lj(Kappa(4), 2, 0), "self dual");
  return c.take();
}

// path-crossing and mutual-intersection families sit at the kappa = 6 ends
inline SuiteResult percolation_brownian_endpoints() {
  Checker c("percolation-brownian-endpoints");
  const auto k2d = DimensionSetting::exact2d();
  using C = UniversalityClass;
  for (long long L = 1; L <= 20; ++L) {
    const std::string tag = "L=" + std::to_string(L);
    c.equal(x_bulk_Lj(Kappa(6), L, 0), ExactScalar(Rational(L * L - 1, 12)),
            "bulk crossing " + tag);
    c.equal(x_surface_Lj(Kappa(6), L, 1), ExactScalar(Rational(L * (L + 1), 6)),
            "half-plane crossing " + tag);
    c.equal(x_bulk_Lj(Kappa(6), L, L),
            std::get<ExactScalar>(x_bulk(L, C::MutuallyAvoiding, k2d)),
            "bulk intersection " + tag);
    c.equal(x_surface_Lj(Kappa(6), L, L + 1),
            std::get<ExactScalar>(
                x_surface(L, C::MutuallyAvoiding, BoundaryCondition::Ordinary, k2d)),
            "wall intersection " + tag);
    // additivity of quantum dimensions through the dilute maps
    c.equal(kpz_u(Kappa(8, 3), ExactScalar(Rational(L))),
            ExactScalar(Rational(L * (2 * L + 1), 3)), "boundary additivity " + tag);
    c.equal(ExactScalar(Rational(2)) * kpz_v(Kappa(8, 3), ExactScalar(Rational(L))),
            ExactScalar(Rational(4 * L * L - 1, 12)), "bulk additivity " + tag);
  }
  return c.take();
}

// conformal-weight bookkeeping survives welding the wedges back together
inline SuiteResult wedge_welding() {
  Checker c("wedge-welding");
  for (const auto& k : {Rational(5), Rational(6), Rational(8)}) {
    const Kappa kappa(k);
    for (long long L = 1; L <= 10; ++L)
      for (long long j = 0; j <= L + 1; ++j)
        c.that(welding_consistency(kappa, L, j),
               "welding failed at kappa=" + k.str() + " L=" + std::to_string(L) +
                   " j=" + std::to_string(j));
  }
  return c.take();
}

// the quadratic map for the mixed wall condition
inline SuiteResult modified_kpz_identity() {
  Checker c("modified-kpz");
  const ExactScalar gamma_dilute = ExactScalar::sqrt_of(Rational(8, 3));
  for (long long L = 1; L <= 20; ++L)
    c.equal(modified_kpz(gamma_dilute, ExactScalar(Rational(3 * L, 4))),
            ExactScalar(Rational(L * (3 * L - 2), 8)),
            "mixed dilute L=" + std::to_string(L));
  // at gamma^2 = kappa the map evaluates to L(L + 2 - kappa)/kappa
  for (const auto& k : {Rational(8, 3), Rational(3), Rational(4)}) {
    const ExactScalar gamma = ExactScalar::sqrt_of(k);
    for (long long L = 1; L <= 10; ++L)
      c.equal(modified_kpz(gamma, ExactScalar(Rational(2 * L) / k)),
              ExactScalar(Rational(L) * (Rational(L) + Rational(2) - k) / k),
              "kappa=" + k.str() + " L=" + std::to_string(L));
  }
  return c.take();
}

// one special-transition value, three independent routes
inline SuiteResult special_transition_triple() {
  Checker c("special-transition-triple");
  for (const auto& k : {Rational(8, 3), Rational(3), Rational(4)}) {
    const Kappa kappa(k);
    const Rational g = Rational(4) / k;
    for (long long L = 1; L <= 20; ++L) {
      const std::string tag = "kappa=" + k.str() + " L=" + std::to_string(L);
      const auto dim = special_quantum_dim(kappa, L);
      const auto x = special_x(kappa, L);
      c.equal(kpz_u(kappa, dim.value), x, "forward map route " + tag);
      c.equal(x_L_rho(kappa, L, -k / Rational(2), -k / Rational(2)), x,
              "rho route " + tag);
      const Rational kac = ((g * Rational(L + 1) - Rational(3)) *
                                (g * Rational(L + 1) - Rational(3)) -
                            (g - Rational(1)) * (g - Rational(1))) /
                           (Rational(4) * g);
      c.equal(x, ExactScalar(kac), "degenerate-weight route " + tag);
    }
  }
  return c.take();
}

}  // namespace verify_detail

// -- registry -----------------------------------------------------------------

struct VerificationSuite {
  const char* name;
  const char* summary;
  SuiteResult (*run)();
};

inline const std::vector<VerificationSuite>& verification_suites() {
  static const std::vector<VerificationSuite> suites = {
      {"gamma-golden-table", "closed-form gamma of the named network families",
       &verify_detail::golden_gamma_table},
      {"barber-relation", "2 gamma_1 - gamma_11 = gamma + nu in five settings",
       &verify_detail::barber_relation},
      {"bridge-gamma-identities", "bridge values against their wall partners",
       &verify_detail::bridge_gamma_identities},
      {"watermelon-dimensions", "x_2 = d - 1/nu and x_2^S = d sum rules",
       &verify_detail::watermelon_dimensions},
      {"brownian-network-reduction", "ideal gamma collapses to loop counting",
       &verify_detail::brownian_network_reduction},
      {"multi-bridge-shift", "k wall conversions shift gamma by k nu",
       &verify_detail::multi_bridge_shift},
      {"kpz-saw-collapse", "kappa = 8/3 families equal the dilute tables",
       &verify_detail::kpz_saw_collapse},
      {"kpz-theta-collapse", "kappa = 6 families equal the tricritical tables",
       &verify_detail::kpz_theta_collapse},
      {"kpz-duality", "surface two-leg family under kappa -> 16/kappa",
       &verify_detail::kpz_duality},
      {"percolation-brownian-endpoints", "crossing and intersection endpoints",
       &verify_detail::percolation_brownian_endpoints},
      {"wedge-welding", "weight bookkeeping for kappa in {5,6,8}, L <= 10",
       &verify_detail::wedge_welding},
      {"modified-kpz", "quadratic map for the mixed wall condition",
       &verify_detail::modified_kpz_identity},
      {"special-transition-triple", "three routes to the special dimensions",
       &verify_detail::special_transition_triple},
  };
  return suites;
}

inline std::vector<SuiteResult> run_verification() {
  std::vector<SuiteResult> results;
  results.reserve(verification_suites().size());
  for (const auto& suite : verification_suites()) results.push_back(suite.run());
  return results;
}

}  // namespace polynet
