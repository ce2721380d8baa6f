#pragma once

// CSV serialization for walk censuses.  Layout: optional '#'-prefixed
// metadata comments, then a header `N,count` (plus `,r2_sum` when distance
// sums are present), then one row per length.  Counts are exact decimal
// integers, or exact scalar expressions like `3+2*sqrt(2)` for
// fugacity-weighted censuses; neither contains a comma.

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include <polynet/enumeration.hpp>
#include <polynet/errors.hpp>

namespace polynet {

inline void write_census(std::ostream& os, const WalkCensus& census,
                         bool with_meta = true, double wall_seconds = -1.0) {
  const bool with_r2 = !census.r2_sums.empty();
  if (with_meta) {
    os << "# lattice: " << census.lattice.name() << "\n";
    os << "# ensemble: " << ensemble_name(census.ensemble.tag) << "\n";
    os << "# n_max: " << census.n_max << "\n";
    os << "# threads: " << census.threads_used << "\n";
    if (census.ensemble.tag == EnsembleTag::Free)
      os << "# symmetry factor: " << census.symmetry_factor
         << " (first step fixed during search, counts premultiplied)\n";
    if (census.ensemble.surface_aware()) {
      os << "# surface fugacity: " << census.ensemble.surface_fugacity.str()
         << " (exponent counts wall vertices excluding the anchor)\n";
      if (census.ensemble.tag == EnsembleTag::Polygon)
        os << "# polygon weighting: "
           << (census.ensemble.weighting == PolygonWeighting::ContactCount
                   ? "contact_count"
                   : "unit")
           << "\n";
    }
    if (wall_seconds >= 0) os << "# wall time: " << wall_seconds << " s\n";
  }
  os << "N,count";
  if (with_r2) os << ",r2_sum";
  os << "\n";
  for (const auto& [n, c] : census.counts) {
    os << n << "," << c.str();
    if (with_r2) os << "," << census.r2_sums.at(n);
    os << "\n";
  }
}

namespace detail {

inline long long parse_ll(const std::string& s, int line, const char* what) {
  long long v = 0;
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end)
    throw Error(Errc::BadCensusFile, std::string("bad ") + what + " '" + s + "'", line);
  return v;
}

inline std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline WalkCensus read_census(std::istream& is) {
  WalkCensus census;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  bool with_r2 = false;
  int last_n = 0;

  while (std::getline(is, line)) {
    ++lineno;
    const std::string text = detail::trimmed(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      // best-effort recovery of the provenance fields; unknown keys pass
      const auto colon = text.find(':');
      if (colon == std::string::npos) continue;
      const std::string key = detail::trimmed(text.substr(1, colon - 1));
      std::string value = detail::trimmed(text.substr(colon + 1));
      const auto paren = value.find(" (");
      if (paren != std::string::npos) value = value.substr(0, paren);
      if (key == "lattice") {
        if (value == "square")
          census.lattice.tag = LatticeTag::Square;
        else if (value == "hexagonal")
          census.lattice.tag = LatticeTag::Hexagonal;
        else
          throw Error(Errc::BadCensusFile, "unknown lattice '" + value + "'", lineno);
      } else if (key == "ensemble") {
        bool found = false;
        for (auto tag : {EnsembleTag::Free, EnsembleTag::TAW, EnsembleTag::Arch,
                         EnsembleTag::Bridge, EnsembleTag::Polygon})
          if (ensemble_name(tag) == value) {
            census.ensemble.tag = tag;
            found = true;
          }
        if (!found)
          throw Error(Errc::BadCensusFile, "unknown ensemble '" + value + "'", lineno);
      } else if (key == "n_max") {
        census.n_max = static_cast<int>(detail::parse_ll(value, lineno, "n_max"));
      } else if (key == "surface fugacity") {
        try {
          census.ensemble.surface_fugacity = ExactScalar::parse(value);
        } catch (const Error&) {
          throw Error(Errc::BadCensusFile, "bad fugacity '" + value + "'", lineno);
        }
      } else if (key == "polygon weighting") {
        census.ensemble.weighting = value == "contact_count"
                                        ? PolygonWeighting::ContactCount
                                        : PolygonWeighting::Unit;
      }
      continue;
    }
    if (!header_seen) {
      if (text == "N,count")
        with_r2 = false;
      else if (text == "N,count,r2_sum")
        with_r2 = true;
      else
        throw Error(Errc::BadCensusFile, "expected header 'N,count[,r2_sum]', got '" + text + "'",
                    lineno);
      header_seen = true;
      continue;
    }
    // data row
    std::string fields[3];
    int nfields = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ',') {
        if (nfields == 3) throw Error(Errc::BadCensusFile, "too many fields", lineno);
        fields[nfields++] = text.substr(start, i - start);
        start = i + 1;
      }
    }
    if (nfields != (with_r2 ? 3 : 2))
      throw Error(Errc::BadCensusFile, "wrong field count", lineno);
    const int n = static_cast<int>(detail::parse_ll(fields[0], lineno, "length"));
    if (n <= last_n)
      throw Error(Errc::BadCensusFile, "lengths must increase", lineno);
    last_n = n;
    try {
      census.counts[n] = ExactScalar::parse(fields[1]);
    } catch (const Error&) {
      throw Error(Errc::BadCensusFile, "bad count '" + fields[1] + "'", lineno);
    }
    if (with_r2)
      census.r2_sums[n] = detail::parse_ll(fields[2], lineno, "r2_sum");
  }
  if (!header_seen || census.counts.empty())
    throw Error(Errc::BadCensusFile, "census has no data rows", lineno);
  if (census.n_max == 0) census.n_max = last_n;
  return census;
}

}  // namespace polynet
