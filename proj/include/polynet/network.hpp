#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exponents.hpp"

namespace polynet {

// ---------------------------------------------------------------------------
// topology
// ---------------------------------------------------------------------------

enum class VertexKind { Bulk, Surface, SurfaceSpecial, SurfaceMixed, Bridge };

inline const char* vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Bulk: return "bulk";
    case VertexKind::Surface: return "surface";
    case VertexKind::SurfaceSpecial: return "surface_special";
    case VertexKind::SurfaceMixed: return "surface_mixed";
    case VertexKind::Bridge: return "bridge";
  }
  return "?";
}

// vertices pinned to the real wall; a bridge hangs from its own movable line
// and is not one of them
inline bool is_wall_kind(VertexKind k) {
  return k == VertexKind::Surface || k == VertexKind::SurfaceSpecial ||
         k == VertexKind::SurfaceMixed;
}

struct NetworkVertex {
  std::string id;
  VertexKind kind = VertexKind::Bulk;
};

// A polymer network: vertices joined by flexible chains of equal length.
// Multigraph semantics: parallel chains allowed, self-pairs allowed (they add
// two to the vertex degree). Validated once on construction, immutable after.
class NetworkTopology {
 public:
  static constexpr long long kDefaultDegreeCap = 20;

  NetworkTopology(std::vector<NetworkVertex> vertices,
                  std::vector<std::pair<std::size_t, std::size_t>> chains,
                  long long degree_cap = kDefaultDegreeCap)
      : vertices_(std::move(vertices)), chains_(std::move(chains)) {
    if (vertices_.empty() || chains_.empty())
      throw Error(Errc::EmptyNetwork, "a network needs at least one chain");
    for (auto& c : chains_) {
      if (c.first >= vertices_.size() || c.second >= vertices_.size())
        throw Error(Errc::UnknownVertexReference, "chain endpoint out of range");
      if (c.first > c.second) std::swap(c.first, c.second);
    }
    degrees_.assign(vertices_.size(), 0);
    for (const auto& c : chains_) {
      degrees_[c.first] += 1;
      degrees_[c.second] += 1;  // self-pair lands here twice
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (degrees_[v] == 0)
        throw Error(Errc::IsolatedVertex,
                    "vertex '" + vertices_[v].id + "' has no chain attached");
      if (degrees_[v] > degree_cap)
        throw Error(Errc::DegreeCapExceeded,
                    "vertex '" + vertices_[v].id + "' has degree " +
                        std::to_string(degrees_[v]) + " > cap " +
                        std::to_string(degree_cap));
    }
    check_connected();
  }

  const std::vector<NetworkVertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& chains() const {
    return chains_;
  }
  long long degree(std::size_t v) const { return degrees_[v]; }

 private:
  void check_connected() const {
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& c : chains_) {
        std::size_t other;
        if (c.first == v) other = c.second;
        else if (c.second == v) other = c.first;
        else continue;
        if (!seen[other]) { seen[other] = 1; stack.push_back(other); }
      }
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (!seen[v])
        throw Error(Errc::DisconnectedNetwork,
                    "vertex '" + vertices_[v].id + "' is unreachable");
  }

  std::vector<NetworkVertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> chains_;
  std::vector<long long> degrees_;
};

// ---------------------------------------------------------------------------
// file format: "vertex <id> <kind>" / "chain <id> <id>", '#' comments
// ---------------------------------------------------------------------------

inline NetworkTopology parse_network(const std::string& text,
                                     long long degree_cap =
                                         NetworkTopology::kDefaultDegreeCap) {
  std::vector<NetworkVertex> vertices;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> chains;

  const auto is_id_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos
                                                                 : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);

    // tokenize, remembering 1-based columns
    std::vector<std::pair<std::string, int>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (tokens.empty()) continue;

    const auto need_id = [&](std::size_t t) -> const std::string& {
      if (tokens.size() <= t)
        throw Error(Errc::SyntaxError, "missing identifier", line_no,
                    static_cast<int>(line.size()) + 1);
      const auto& [tok, col] = tokens[t];
      for (char c : tok)
        if (!is_id_char(c))
          throw Error(Errc::SyntaxError, "bad identifier '" + tok + "'", line_no, col);
      return tokens[t].first;
    };

    if (tokens[0].first == "vertex") {
      const std::string& id = need_id(1);
      if (tokens.size() < 3)
        throw Error(Errc::SyntaxError, "vertex needs an id and a kind", line_no,
                    static_cast<int>(line.size()) + 1);
      if (tokens.size() > 3)
        throw Error(Errc::SyntaxError, "unexpected token '" + tokens[3].first + "'",
                    line_no, tokens[3].second);
      const std::string& kind_tok = tokens[2].first;
      VertexKind kind;
      if (kind_tok == "bulk") kind = VertexKind::Bulk;
      else if (kind_tok == "surface") kind = VertexKind::Surface;
      else if (kind_tok == "surface_special") kind = VertexKind::SurfaceSpecial;
      else if (kind_tok == "surface_mixed") kind = VertexKind::SurfaceMixed;
      else if (kind_tok == "bridge") kind = VertexKind::Bridge;
      else
        throw Error(Errc::SyntaxError, "unknown vertex kind '" + kind_tok + "'",
                    line_no, tokens[2].second);
      if (index.count(id))
        throw Error(Errc::DuplicateVertex, "vertex '" + id + "' declared twice",
                    line_no, tokens[1].second);
      index[id] = vertices.size();
      vertices.push_back({id, kind});
    } else if (tokens[0].first == "chain") {
      const std::string& a = need_id(1);
      const std::string& b = need_id(2);
      if (tokens.size() > 3)
        throw Error(Errc::SyntaxError, "unexpected token '" + tokens[3].first + "'",
                    line_no, tokens[3].second);
      const auto ia = index.find(a);
      if (ia == index.end())
        throw Error(Errc::UnknownVertexReference, "unknown vertex '" + a + "'",
                    line_no, tokens[1].second);
      const auto ib = index.find(b);
      if (ib == index.end())
        throw Error(Errc::UnknownVertexReference, "unknown vertex '" + b + "'",
                    line_no, tokens[2].second);
      chains.emplace_back(ia->second, ib->second);
    } else {
      throw Error(Errc::SyntaxError, "unknown keyword '" + tokens[0].first + "'",
                  line_no, tokens[0].second);
    }
  }

  if (vertices.empty() || chains.empty())
    throw Error(Errc::EmptyNetwork, "network file declares no chains");
  return NetworkTopology(std::move(vertices), std::move(chains), degree_cap);
}

// ---------------------------------------------------------------------------
// vertex census and topological invariants
// ---------------------------------------------------------------------------

struct VertexCensus {
  // leg number L -> how many vertices of that kind
  std::map<long long, long long> n_bulk;
  std::map<long long, long long> n_surface;          // ordinary wall vertices
  std::map<long long, long long> n_surface_special;  // adsorption transition
  std::map<long long, long long> n_surface_mixed;    // ordinary-special mixed
  std::map<long long, long long> n_bridge;

  long long V = 0;         // bulk-counted vertices (bulk + bridge)
  long long V_S = 0;       // wall vertices
  long long N_chains = 0;
  long long loops = 0;     // cycle rank
  long long L_S = 0;       // chain ends on the wall

  bool has_bridge() const { return !n_bridge.empty(); }
  bool is_surface() const { return V_S > 0; }
};

inline VertexCensus census(const NetworkTopology& net) {
  VertexCensus c;
  for (std::size_t v = 0; v < net.vertices().size(); ++v) {
    const long long L = net.degree(v);
    switch (net.vertices()[v].kind) {
      case VertexKind::Bulk: c.n_bulk[L] += 1; break;
      case VertexKind::Surface: c.n_surface[L] += 1; break;
      case VertexKind::SurfaceSpecial: c.n_surface_special[L] += 1; break;
      case VertexKind::SurfaceMixed: c.n_surface_mixed[L] += 1; break;
      case VertexKind::Bridge: c.n_bridge[L] += 1; break;
    }
  }

  long long leg_total = 0;       // sum of L over every vertex
  long long leg_minus_two = 0;   // sum of (L-2) over every vertex
  long long vertex_total = 0;
  const auto tally = [&](const std::map<long long, long long>& m) {
    for (const auto& [L, n] : m) {
      leg_total += L * n;
      leg_minus_two += (L - 2) * n;
      vertex_total += n;
    }
  };
  tally(c.n_bulk);
  tally(c.n_surface);
  tally(c.n_surface_special);
  tally(c.n_surface_mixed);
  tally(c.n_bridge);

  for (const auto& [L, n] : c.n_bulk) c.V += n;
  for (const auto& [L, n] : c.n_bridge) c.V += n;
  for (const auto& [L, n] : c.n_surface) { c.V_S += n; c.L_S += L * n; }
  for (const auto& [L, n] : c.n_surface_special) { c.V_S += n; c.L_S += L * n; }
  for (const auto& [L, n] : c.n_surface_mixed) { c.V_S += n; c.L_S += L * n; }

  if (leg_total % 2 != 0)
    throw Error(Errc::InternalInconsistency, "odd total leg count");
  c.N_chains = leg_total / 2;
  if (c.N_chains != static_cast<long long>(net.chains().size()))
    throw Error(Errc::InternalInconsistency, "handshake count disagrees with chain list");

  // cycle rank two ways: Euler and the leg-count identity
  c.loops = c.N_chains - vertex_total + 1;
  if (leg_minus_two % 2 != 0)
    throw Error(Errc::InternalInconsistency, "odd (L-2) sum");
  const long long loops_via_legs = leg_minus_two / 2 + 1;
  if (c.loops != loops_via_legs)
    throw Error(Errc::InternalInconsistency, "cycle-rank formulas disagree");
  return c;
}

// ---------------------------------------------------------------------------
// configuration exponent gamma
// ---------------------------------------------------------------------------

// For a bulk network:    gamma = nu [ d(V-1) - sum n_L x_L ] - (N-1).
// For a surface network: gamma = nu [ dV + (d-1)(V_S-1)
//                                     - sum ( n_L x_L
//                                           + (n_L^S + n_L^b) x_L^S
//                                           + n_L^{S,sp} x_L^S(sp)
//                                           + n_L^{S,mix} x_L^S(mix) ) ] - (N-1).
// Bridge vertices slide on their own horizontal line: they count in V, not
// V_S, yet carry ordinary surface exponents whatever the wall's condition is.
// In the epsilon settings d = 4 - eps stays symbolic, the prefactor is the
// ideal-chain 1/2, and the result is a truncated series.
inline ExponentValue gamma_exponent(const NetworkTopology& net, UniversalityClass cls,
                                    const DimensionSetting& setting) {
  const VertexCensus c = census(net);
  if (c.has_bridge() && !c.is_surface())
    throw Error(Errc::BridgeInBulkNetwork,
                "bridge vertices require an anchored (surface) network");

  if (setting.kind == DimensionSetting::Kind::Epsilon) {
    const int order = setting.order;
    const auto scalar = [&](const Rational& v) {
      return EpsilonSeries(order, v, Rational(0), Rational(0));
    };
    const EpsilonSeries d(order, Rational(4), Rational(-1), Rational(0));

    EpsilonSeries sum = scalar(Rational(0));
    if (c.is_surface())
      sum = Rational(c.V) * d + Rational(c.V_S - 1) * (d - scalar(Rational(1)));
    else
      sum = Rational(c.V - 1) * d;

    const auto subtract = [&](const std::map<long long, long long>& m, auto&& xf) {
      for (const auto& [L, n] : m)
        sum = sum - Rational(n) * std::get<EpsilonSeries>(xf(L));
    };
    subtract(c.n_bulk, [&](long long L) { return x_bulk(L, cls, setting); });
    if (c.is_surface()) {
      const auto ordinary = [&](long long L) {
        return x_surface(L, cls, BoundaryCondition::Ordinary, setting);
      };
      subtract(c.n_surface, ordinary);
      subtract(c.n_bridge, ordinary);
      subtract(c.n_surface_special, [&](long long L) {
        return x_surface(L, cls, BoundaryCondition::Special, setting);
      });
      subtract(c.n_surface_mixed, [&](long long L) {
        return x_surface(L, cls, BoundaryCondition::Mixed, setting);
      });
    }
    return Rational(1, 2) * sum - scalar(Rational(c.N_chains - 1));
  }

  const Rational d =
      setting.kind == DimensionSetting::Kind::Exact2D ? Rational(2) : setting.d;
  const ExactScalar nu_value = nu(cls, setting);

  ExactScalar sum;
  if (c.is_surface())
    sum = ExactScalar(d * Rational(c.V) + (d - Rational(1)) * Rational(c.V_S - 1));
  else
    sum = ExactScalar(d * Rational(c.V - 1));

  const auto subtract = [&](const std::map<long long, long long>& m, auto&& xf) {
    for (const auto& [L, n] : m)
      sum = sum - ExactScalar(Rational(n)) * std::get<ExactScalar>(xf(L));
  };
  subtract(c.n_bulk, [&](long long L) { return x_bulk(L, cls, setting); });
  if (c.is_surface()) {
    const auto ordinary = [&](long long L) {
      return x_surface(L, cls, BoundaryCondition::Ordinary, setting);
    };
    subtract(c.n_surface, ordinary);
    subtract(c.n_bridge, ordinary);
    subtract(c.n_surface_special, [&](long long L) {
      return x_surface(L, cls, BoundaryCondition::Special, setting);
    });
    subtract(c.n_surface_mixed, [&](long long L) {
      return x_surface(L, cls, BoundaryCondition::Mixed, setting);
    });
  }
  return nu_value * sum - ExactScalar(Rational(c.N_chains - 1));
}

// ---------------------------------------------------------------------------
// theorem checks
// ---------------------------------------------------------------------------

// For ideal (Brownian) networks gamma collapses to pure topology:
// gamma - 1 = -L d/2 in the bulk, with an extra -(V_S-1)/2 - L_S/2 anchored.
struct BrownianReduction {
  ExactScalar gamma_full;
  ExactScalar gamma_reduced;
  bool equal = false;
};

inline BrownianReduction brownian_reduction_check(const NetworkTopology& net,
                                                  const Rational& d) {
  const VertexCensus c = census(net);
  if (c.has_bridge() || !c.n_surface_special.empty() || !c.n_surface_mixed.empty())
    throw Error(Errc::UnsupportedNetwork,
                "the reduction holds for ordinary bulk/surface networks only");

  const auto full = std::get<ExactScalar>(
      gamma_exponent(net, UniversalityClass::Brownian, DimensionSetting::general_d(d)));
  Rational reduced = Rational(1) - Rational(c.loops) * d / Rational(2);
  if (c.is_surface())
    reduced = reduced - Rational(c.V_S - 1, 2) - Rational(c.L_S, 2);
  const ExactScalar reduced_s(reduced);
  return {full, reduced_s, full == reduced_s};
}

// Turning one ordinary wall vertex into a bridge must raise gamma by exactly
// nu: the vertex leaves V_S for V and keeps its ordinary exponent, so the
// bracket gains d - (d-1) = 1.
struct BridgeShift {
  ExponentValue difference;
  ExponentValue expected_nu;
  bool equal = false;
};

inline BridgeShift bridge_shift_check(const NetworkTopology& net_b,
                                      const NetworkTopology& net_s,
                                      UniversalityClass cls,
                                      const DimensionSetting& setting) {
  // id -> kind maps must differ in exactly one place: Surface -> Bridge
  const auto kinds_of = [](const NetworkTopology& net) {
    std::map<std::string, VertexKind> m;
    for (const auto& v : net.vertices()) m[v.id] = v.kind;
    return m;
  };
  const auto kb = kinds_of(net_b), ks = kinds_of(net_s);
  if (kb.size() != ks.size() || kb.size() != net_b.vertices().size() ||
      ks.size() != net_s.vertices().size())
    throw Error(Errc::NotABridgePair, "vertex id sets differ");
  int converted = 0;
  for (const auto& [id, kind_s] : ks) {
    const auto it = kb.find(id);
    if (it == kb.end()) throw Error(Errc::NotABridgePair, "vertex id sets differ");
    if (it->second == kind_s) continue;
    if (kind_s == VertexKind::Surface && it->second == VertexKind::Bridge)
      ++converted;
    else
      throw Error(Errc::NotABridgePair,
                  "vertex '" + id + "' differs other than surface -> bridge");
  }
  if (converted != 1)
    throw Error(Errc::NotABridgePair,
                "expected exactly one converted vertex, found " +
                    std::to_string(converted));

  const auto chain_ids = [](const NetworkTopology& net) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& ch : net.chains()) {
      std::string a = net.vertices()[ch.first].id;
      std::string b = net.vertices()[ch.second].id;
      if (b < a) std::swap(a, b);
      out.emplace_back(std::move(a), std::move(b));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  if (chain_ids(net_b) != chain_ids(net_s))
    throw Error(Errc::NotABridgePair, "chain multisets differ");

  BridgeShift out;
  const ExponentValue gb = gamma_exponent(net_b, cls, setting);
  const ExponentValue gs = gamma_exponent(net_s, cls, setting);
  if (setting.kind == DimensionSetting::Kind::Epsilon) {
    const EpsilonSeries diff =
        std::get<EpsilonSeries>(gb) - std::get<EpsilonSeries>(gs);
    const EpsilonSeries expect(setting.order, Rational(1, 2), Rational(0), Rational(0));
    out.difference = diff;
    out.expected_nu = expect;
    out.equal = diff == expect;
  } else {
    const ExactScalar diff = std::get<ExactScalar>(gb) - std::get<ExactScalar>(gs);
    const ExactScalar expect = nu(cls, setting);
    out.difference = diff;
    out.expected_nu = expect;
    out.equal = diff == expect;
  }
  return out;
}

}  // namespace polynet
