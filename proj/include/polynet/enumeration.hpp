#pragma once

// Exact enumeration of self-avoiding walk ensembles on the square lattice
// and on the hexagonal lattice in its brick-wall embedding.  Walks start at
// the origin; half-space ensembles live in y >= 0 with the wall along y = 0.
//
// Conventions (also echoed in the CSV metadata written by census_io.hpp):
//  - free walks on the square lattice fix the first step to +x and multiply
//    by the symmetry factor 4; the brick-wall embedding has no such symmetry,
//    so hexagonal free walks enumerate all first steps with factor 1.
//  - a bridge runs from the wall strictly upward: y(0) = 0 < y(i) <= y(N).
//  - a terminally attached walk keeps y >= 0; an arch additionally ends on
//    the wall.
//  - adsorbed polygons are closed walks in y >= 0 touching the wall, counted
//    up to horizontal translation by anchoring the leftmost wall vertex at
//    the origin; each polygon is traced once (first step +x).
//  - the surface fugacity a weights a configuration by a^(m-1) where m is
//    the number of wall vertices including the anchor (the anchor itself is
//    excluded from the exponent; it only shifts the amplitude).

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <polynet/errors.hpp>
#include <polynet/exact_scalar.hpp>
#include <polynet/rational.hpp>

namespace polynet {

enum class LatticeTag { Square, Hexagonal };

struct Lattice {
  LatticeTag tag = LatticeTag::Square;

  int coordination() const { return tag == LatticeTag::Square ? 4 : 3; }
  std::string name() const {
    return tag == LatticeTag::Square ? "square" : "hexagonal";
  }
};

enum class EnsembleTag { Free, TAW, Arch, Bridge, Polygon };
enum class PolygonWeighting { Unit, ContactCount };

inline std::string ensemble_name(EnsembleTag tag) {
  switch (tag) {
    case EnsembleTag::Free: return "free";
    case EnsembleTag::TAW: return "taw";
    case EnsembleTag::Arch: return "arch";
    case EnsembleTag::Bridge: return "bridge";
    case EnsembleTag::Polygon: return "polygon";
  }
  return "?";
}

struct Ensemble {
  EnsembleTag tag = EnsembleTag::Free;
  ExactScalar surface_fugacity = ExactScalar(1);
  PolygonWeighting weighting = PolygonWeighting::Unit;  // Polygon only

  bool surface_aware() const { return tag != EnsembleTag::Free; }
};

// Per-length exact tallies.  counts are fugacity-weighted (plain integers at
// a = 1); r2_sums accumulate the squared end-to-end distance over free walks;
// contact_histograms map length -> (wall vertices incl. anchor -> walks).
struct WalkCensus {
  Lattice lattice;
  Ensemble ensemble;
  int n_max = 0;
  int threads_used = 1;
  int symmetry_factor = 1;
  std::map<int, ExactScalar> counts;
  std::map<int, long long> r2_sums;
  std::map<int, std::map<int, long long>> contact_histograms;
};

inline constexpr int kNMaxLimit = 28;

namespace detail {

using Wide = int128;

inline long long narrow_count(Wide v, const char* what) {
  constexpr Wide lo = std::numeric_limits<long long>::min();
  constexpr Wide hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) throw Error(Errc::Overflow, std::string(what) + " exceeds 64-bit range");
  return static_cast<long long>(v);
}

struct StepTally {
  Wide walks = 0;
  Wide r2 = 0;
  std::vector<Wide> by_contacts;  // index m = wall vertices incl. anchor
};

struct Tally {
  std::vector<StepTally> at;  // index = walk length, 1..n_max used

  explicit Tally(int n_max) : at(static_cast<std::size_t>(n_max) + 1) {
    for (auto& s : at) s.by_contacts.assign(static_cast<std::size_t>(n_max) + 2, 0);
  }

  void merge(const Tally& other) {
    for (std::size_t n = 0; n < at.size(); ++n) {
      at[n].walks += other.at[n].walks;
      at[n].r2 += other.at[n].r2;
      for (std::size_t m = 0; m < at[n].by_contacts.size(); ++m)
        at[n].by_contacts[m] += other.at[n].by_contacts[m];
    }
  }
};

// occupancy bitboard over a box wide enough that every probe from a walk of
// length <= n_max stays in range (walks reach |x|,|y| <= n_max; probes one
// further)
class Board {
 public:
  explicit Board(int n_max)
      : side_(2 * n_max + 3),
        center_(n_max + 1),
        bits_((static_cast<std::size_t>(side_) * side_ + 63) / 64, 0) {}

  bool test(int x, int y) const {
    const std::size_t i = index(x, y);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int x, int y) {
    const std::size_t i = index(x, y);
    bits_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }
  void clear(int x, int y) {
    const std::size_t i = index(x, y);
    bits_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }
  void block_row(int y) {
    for (int x = -center_; x <= center_; ++x) set(x, y);
  }
  void block_row_left_of_origin(int y) {
    for (int x = -center_; x < 0; ++x) set(x, y);
  }

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y + center_) * side_ + (x + center_);
  }

  int side_;
  int center_;
  std::vector<std::uint64_t> bits_;
};

class Walker {
 public:
  Walker(LatticeTag lattice, EnsembleTag ensemble, int n_max)
      : lattice_(lattice), ensemble_(ensemble), n_max_(n_max), board_(n_max) {
    if (ensemble_ != EnsembleTag::Free) board_.block_row(-1);
    if (ensemble_ == EnsembleTag::Bridge) board_.block_row(0);
    if (ensemble_ == EnsembleTag::Polygon) board_.block_row_left_of_origin(0);
    board_.set(0, 0);
  }

  // plain single-threaded search
  void run(Tally& tally) { descend(0, 0, 0, anchor_contacts(), 0, tally); }

  // enumerate all depth-k search prefixes, tallying walk lengths 1..k (and
  // polygon closures up to length k) exactly once along the way
  void generate_prefixes(int k, Tally& tally, std::vector<std::vector<std::uint8_t>>& out) {
    std::vector<std::uint8_t> current;
    current.reserve(static_cast<std::size_t>(k));
    generate(0, 0, 0, anchor_contacts(), 0, k, current, tally, out);
  }

  // replay one prefix, then search everything strictly below it
  void run_prefix(const std::vector<std::uint8_t>& moves, Tally& tally) {
    int x = 0, y = 0, contacts = anchor_contacts(), max_y = 0;
    for (std::uint8_t code : moves) {
      step(code, x, y);
      if (y == 0) ++contacts;
      if (y > max_y) max_y = y;
      board_.set(x, y);
    }
    descend(x, y, static_cast<int>(moves.size()), contacts, max_y, tally);
    int rx = x, ry = y;
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
      board_.clear(rx, ry);
      unstep(*it, rx, ry);
    }
  }

 private:
  int anchor_contacts() const { return ensemble_ == EnsembleTag::Free ? 0 : 1; }

  int polygon_min_length() const { return lattice_ == LatticeTag::Square ? 4 : 6; }

  // free square walks and polygons fix the first step to +x (see header note)
  bool first_step_fixed() const {
    if (ensemble_ == EnsembleTag::Polygon) return true;
    return ensemble_ == EnsembleTag::Free && lattice_ == LatticeTag::Square;
  }

  int moves_from(int x, int y, int dx[4], int dy[4]) const {
    dx[0] = 1;
    dy[0] = 0;
    dx[1] = -1;
    dy[1] = 0;
    if (lattice_ == LatticeTag::Square) {
      dx[2] = 0;
      dy[2] = 1;
      dx[3] = 0;
      dy[3] = -1;
      return 4;
    }
    // brick wall: the vertical edge alternates with sublattice parity
    dx[2] = 0;
    dy[2] = ((x + y) & 1) ? -1 : 1;
    return 3;
  }

  void step(std::uint8_t code, int& x, int& y) const {
    int dx[4], dy[4];
    moves_from(x, y, dx, dy);
    x += dx[code];
    y += dy[code];
  }
  // walking an edge backwards: swap east/west (and north/south); the
  // brick-wall vertical is its own inverse because the parity flips across it
  void unstep(std::uint8_t code, int& x, int& y) const {
    static constexpr std::uint8_t square_inv[4] = {1, 0, 3, 2};
    static constexpr std::uint8_t hex_inv[3] = {1, 0, 2};
    step(lattice_ == LatticeTag::Square ? square_inv[code] : hex_inv[code], x, y);
  }

  void tally_vertex(int x, int y, int n, int contacts, int max_y, Tally& t) const {
    StepTally& s = t.at[static_cast<std::size_t>(n)];
    switch (ensemble_) {
      case EnsembleTag::Free:
        ++s.walks;
        s.r2 += Wide(x) * x + Wide(y) * y;
        break;
      case EnsembleTag::TAW:
        ++s.by_contacts[static_cast<std::size_t>(contacts)];
        break;
      case EnsembleTag::Arch:
        if (y == 0) ++s.by_contacts[static_cast<std::size_t>(contacts)];
        break;
      case EnsembleTag::Bridge:
        if (y == max_y) ++s.by_contacts[static_cast<std::size_t>(contacts)];
        break;
      case EnsembleTag::Polygon:
        break;  // polygons tally at closure, not per vertex
    }
  }

  void descend(int x, int y, int n, int contacts, int max_y, Tally& t) {
    if (n >= n_max_) return;
    int dx[4], dy[4];
    const int k = moves_from(x, y, dx, dy);
    for (int i = 0; i < k; ++i) {
      if (n == 0 && first_step_fixed() && i != 0) continue;
      const int nx = x + dx[i];
      const int ny = y + dy[i];
      if (ensemble_ == EnsembleTag::Polygon && nx == 0 && ny == 0) {
        if (n + 1 >= polygon_min_length())
          ++t.at[static_cast<std::size_t>(n) + 1].by_contacts[static_cast<std::size_t>(contacts)];
        continue;
      }
      if (board_.test(nx, ny)) continue;
      const int nc = contacts + (ny == 0 ? 1 : 0);
      const int nm = ny > max_y ? ny : max_y;
      tally_vertex(nx, ny, n + 1, nc, nm, t);
      board_.set(nx, ny);
      descend(nx, ny, n + 1, nc, nm, t);
      board_.clear(nx, ny);
    }
  }

  void generate(int x, int y, int n, int contacts, int max_y, int k,
                std::vector<std::uint8_t>& current, Tally& t,
                std::vector<std::vector<std::uint8_t>>& out) {
    if (n == k) {
      out.push_back(current);
      return;  // closures from depth-k vertices belong to the workers
    }
    int dx[4], dy[4];
    const int moves = moves_from(x, y, dx, dy);
    for (int i = 0; i < moves; ++i) {
      if (n == 0 && first_step_fixed() && i != 0) continue;
      const int nx = x + dx[i];
      const int ny = y + dy[i];
      if (ensemble_ == EnsembleTag::Polygon && nx == 0 && ny == 0) {
        if (n + 1 >= polygon_min_length())
          ++t.at[static_cast<std::size_t>(n) + 1].by_contacts[static_cast<std::size_t>(contacts)];
        continue;
      }
      if (board_.test(nx, ny)) continue;
      const int nc = contacts + (ny == 0 ? 1 : 0);
      const int nm = ny > max_y ? ny : max_y;
      tally_vertex(nx, ny, n + 1, nc, nm, t);
      board_.set(nx, ny);
      current.push_back(static_cast<std::uint8_t>(i));
      generate(nx, ny, n + 1, nc, nm, k, current, t, out);
      current.pop_back();
      board_.clear(nx, ny);
    }
  }

  LatticeTag lattice_;
  EnsembleTag ensemble_;
  int n_max_;
  Board board_;
};

}  // namespace detail

inline WalkCensus enumerate(Lattice lattice, Ensemble ensemble, int n_max,
                            int threads = 1) {
  if (n_max < 1 || n_max > kNMaxLimit)
    throw Error(Errc::NMaxTooLarge,
                "N_max must lie in [1, " + std::to_string(kNMaxLimit) + "], got " +
                    std::to_string(n_max));
  if (ensemble.surface_fugacity.sign() < 0)
    throw Error(Errc::InvalidFugacity,
                "surface fugacity must be >= 0, got " + ensemble.surface_fugacity.str());
  if (threads < 1) threads = 1;

  detail::Tally total(n_max);
  if (threads == 1) {
    detail::Walker walker(lattice.tag, ensemble.tag, n_max);
    walker.run(total);
  } else {
    // partition the search over depth-k prefixes; k grows until there are
    // enough prefixes to keep every thread busy
    std::vector<std::vector<std::uint8_t>> prefixes;
    const int k_cap = std::min(n_max, 16);
    for (int k = 1;; ++k) {
      detail::Tally head(n_max);
      prefixes.clear();
      detail::Walker walker(lattice.tag, ensemble.tag, n_max);
      walker.generate_prefixes(k, head, prefixes);
      if (static_cast<long long>(prefixes.size()) >= 8LL * threads || k == k_cap) {
        total.merge(head);
        break;
      }
    }
    // each thread owns its prefixes (round robin) and its own tally; exact
    // integer sums make the merged result independent of the schedule
    std::vector<detail::Tally> slot(static_cast<std::size_t>(threads),
                                    detail::Tally(n_max));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int tid = 0; tid < threads; ++tid) {
      pool.emplace_back([&, tid] {
        detail::Walker walker(lattice.tag, ensemble.tag, n_max);
        for (std::size_t i = static_cast<std::size_t>(tid); i < prefixes.size();
             i += static_cast<std::size_t>(threads))
          walker.run_prefix(prefixes[i], slot[static_cast<std::size_t>(tid)]);
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& s : slot) total.merge(s);
  }

  WalkCensus census;
  census.lattice = lattice;
  census.ensemble = ensemble;
  census.n_max = n_max;
  census.threads_used = threads;
  census.symmetry_factor =
      (ensemble.tag == EnsembleTag::Free && lattice.tag == LatticeTag::Square) ? 4 : 1;

  // fugacity powers a^0..a^n_max (exponent is contacts minus the anchor)
  std::vector<ExactScalar> apow;
  apow.reserve(static_cast<std::size_t>(n_max) + 2);
  apow.emplace_back(1);
  for (int i = 0; i <= n_max; ++i) apow.push_back(apow.back() * ensemble.surface_fugacity);

  for (int n = 1; n <= n_max; ++n) {
    const detail::StepTally& s = total.at[static_cast<std::size_t>(n)];
    if (ensemble.tag == EnsembleTag::Free) {
      const long long c =
          detail::narrow_count(s.walks * census.symmetry_factor, "walk count");
      census.counts[n] = ExactScalar(c);
      census.r2_sums[n] =
          detail::narrow_count(s.r2 * census.symmetry_factor, "distance sum");
      continue;
    }
    ExactScalar weighted(0);
    bool any = false;
    for (std::size_t m = 1; m < s.by_contacts.size(); ++m) {
      if (s.by_contacts[m] == 0) continue;
      any = true;
      const long long raw = detail::narrow_count(s.by_contacts[m], "walk count");
      census.contact_histograms[n][static_cast<int>(m)] = raw;
      long long coeff = raw;
      if (ensemble.tag == EnsembleTag::Polygon &&
          ensemble.weighting == PolygonWeighting::ContactCount)
        coeff = detail::narrow_count(detail::Wide(raw) * static_cast<long long>(m),
                                     "weighted count");
      weighted = weighted + ExactScalar(coeff) * apow[m - 1];
    }
    if (any) census.counts[n] = weighted;  // infeasible lengths stay absent
  }
  return census;
}

}  // namespace polynet
