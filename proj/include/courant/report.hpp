// Copyright 2026 The Courant Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COURANT_REPORT_HPP_
#define COURANT_REPORT_HPP_

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "courant/eigenfunctions.hpp"
#include "courant/geometry.hpp"
#include "courant/nodal.hpp"
#include "courant/nodal_count.hpp"
#include "courant/screening.hpp"
#include "courant/spectrum.hpp"

namespace courant {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Command {
  Spectrum,
  Screen,
  Verdict,
  Nodal,
  CriticalZeros,
  FixedPoints,
  Bifurcation,
  Plot
};

enum class Format { Csv, Json, Svg };

struct RunConfig {
  Command command = Command::Spectrum;
  DomainKind domain = DomainKind::Equilateral;
  std::optional<Mode> mode;
  std::optional<double> theta;
  int resolution = 512;
  std::string output_path;  // empty writes to the output stream
  std::optional<Format> format;
  int count = 0;  // spectrum rows; 0 means up to the index cutoff
  bool stamp = false;
};

// Invalid user input; maps to exit status 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUnstable = 3;

// ---------------------------------------------------------------- parsing

// Radians as a decimal, "pi", "pi/<k>", "<j>pi/<k>" or "theta_c".
inline std::optional<double> parse_theta(std::string_view text) {
  if (text == "theta_c") return bifurcation_angle().theta_c;
  const auto parse_int = [](std::string_view s) -> std::optional<int> {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v <= 0) return std::nullopt;
    return v;
  };
  if (const auto at = text.find("pi"); at != std::string_view::npos) {
    int num = 1, den = 1;
    if (at > 0) {
      std::string_view head = text.substr(0, at);
      if (head.back() == '*') head.remove_suffix(1);
      const auto v = parse_int(head);
      if (!v) return std::nullopt;
      num = *v;
    }
    std::string_view tail = text.substr(at + 2);
    if (!tail.empty()) {
      if (tail.front() != '/') return std::nullopt;
      const auto v = parse_int(tail.substr(1));
      if (!v) return std::nullopt;
      den = *v;
    }
    return num * kPi / den;
  }
  // strtod keeps this portable where from_chars lacks floating support.
  const std::string owned(text);
  char* end = nullptr;
  const double v = std::strtod(owned.c_str(), &end);
  if (owned.empty() || end != owned.c_str() + owned.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

inline std::optional<Mode> parse_pair(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  Mode p;
  const std::string_view a = text.substr(0, comma), b = text.substr(comma + 1);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), p.m);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), p.n);
  if (r1.ec != std::errc() || r1.ptr != a.data() + a.size() ||
      r2.ec != std::errc() || r2.ptr != b.data() + b.size()) {
    return std::nullopt;
  }
  return p;
}

inline std::optional<Command> parse_command(std::string_view name) {
  static const std::map<std::string_view, Command> table{
      {"spectrum", Command::Spectrum},
      {"screen", Command::Screen},
      {"verdict", Command::Verdict},
      {"nodal", Command::Nodal},
      {"critical-zeros", Command::CriticalZeros},
      {"fixed-points", Command::FixedPoints},
      {"bifurcation", Command::Bifurcation},
      {"plot", Command::Plot}};
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

inline std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "svg") return Format::Svg;
  return std::nullopt;
}

// ------------------------------------------------------------- formatting

// Ten significant digits, trailing zeros kept, as in the reference tables.
inline std::string format_ratio(double r) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%#.10g", r);
  return buf.data();
}

inline std::string spectrum_csv(const std::vector<ScreeningRow>& rows) {
  std::ostringstream os;
  os << "normalized,min_index,max_index,multiplicity,ratio\n";
  for (const ScreeningRow& r : rows) {
    os << r.normalized << ',' << r.min_index << ',' << r.max_index << ','
       << r.multiplicity << ',' << (r.ratio ? format_ratio(*r.ratio) : "")
       << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json rows_json(const std::vector<ScreeningRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ScreeningRow& r : rows) {
    nlohmann::ordered_json j;
    j["normalized"] = r.normalized;
    j["min_index"] = r.min_index;
    j["max_index"] = r.max_index;
    j["multiplicity"] = r.multiplicity;
    j["ratio"] = r.ratio ? nlohmann::ordered_json(*r.ratio) : nullptr;
    j["passes"] = r.passes;
    arr.push_back(j);
  }
  return arr;
}

inline nlohmann::ordered_json summary_json(const ScreeningSummary& s) {
  nlohmann::ordered_json j;
  j["domain"] = std::string(to_string(s.domain));
  j["threshold"] = s.threshold;
  j["index_cutoff"] = s.index_cutoff;
  j["candidates"] = s.candidates;
  return j;
}

inline nlohmann::ordered_json report_json(const NodalReport& r) {
  nlohmann::ordered_json j;
  j["domain"] = std::string(to_string(r.handle.domain));
  j["m"] = r.handle.mode.m;
  j["n"] = r.handle.mode.n;
  j["theta"] = r.handle.theta;
  j["resolution"] = r.resolution;
  j["domain_count"] = r.domain_count;
  j["positive_components"] = r.positive_components;
  j["negative_components"] = r.negative_components;
  j["stable"] = r.stable;
  return j;
}

inline nlohmann::ordered_json zeros_json(const std::vector<CriticalZero>& zs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CriticalZero& z : zs) {
    nlohmann::ordered_json j;
    j["segment"] = std::string(to_string(z.where));
    j["u"] = z.parameter_u;
    j["s"] = z.location.s;
    j["t"] = z.location.t;
    j["order"] = z.order;
    arr.push_back(j);
  }
  return arr;
}

inline nlohmann::ordered_json fixed_points_json(const std::vector<FixedPoint>& fs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const FixedPoint& f : fs) {
    nlohmann::ordered_json j;
    j["label"] = std::string(to_string(f.label));
    j["s"] = f.location.s;
    j["t"] = f.location.t;
    arr.push_back(j);
  }
  return arr;
}

// -------------------------------------------------------------------- svg

namespace detail {

struct SvgPoint {
  double x, y;
};

// Marching squares on the sampling lattice; crossings are keyed by lattice
// edge so shared endpoints coincide and segments stitch into polylines.
inline std::vector<std::vector<SvgPoint>> zero_level_polylines(
    const EigenfunctionHandle& h, int n) {
  const bool square = h.domain == DomainKind::RightIsosceles;
  const double step = square ? kPi / n : 1.0 / n;
  const int size = square ? n + 1 : (2 * n) / 3 + 2;
  const auto point_of = [&](double i, double j) -> SvgPoint {
    if (square) return {i * step, j * step};
    const CartesianPoint c = to_cartesian({i * step, j * step});
    return {c.x, c.y};
  };
  const auto inside = [&](int i, int j) {
    if (square) {
      return in_domain(h.domain, CartesianPoint{i * step, j * step}, Closure::Strict);
    }
    return in_domain(h.domain, AlcovePoint{i * step, j * step}, Closure::Strict);
  };
  const double theta = effective_theta(h);
  std::vector<double> val(static_cast<std::size_t>(size) * size, 0.0);
  std::vector<std::uint8_t> in(val.size(), 0);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * size + j;
      in[k] = inside(i, j) ? 1 : 0;
      if (!in[k]) continue;
      if (square) {
        val[k] = eval_isosceles(h.mode.m, h.mode.n, i * step, j * step);
      } else {
        val[k] = mix(eval_cs(h.mode.m, h.mode.n, i * step, j * step),
                     h.domain == DomainKind::Hemiequilateral ? 0.0 : theta)
                     .value;
      }
    }
  }
  const auto at = [&](int i, int j) { return val[static_cast<std::size_t>(i) * size + j]; };
  // Edge ids: 2k for (i,j)-(i+1,j), 2k+1 for (i,j)-(i,j+1).
  const auto edge_id = [&](int i, int j, bool vertical) {
    return 2 * (static_cast<long long>(i) * size + j) + (vertical ? 1 : 0);
  };
  std::map<long long, SvgPoint> where;
  std::map<long long, std::vector<long long>> adj;
  const auto crossing = [&](int i0, int j0, int i1, int j1, bool vertical) {
    const double a = at(i0, j0), b = at(i1, j1);
    const double f = a / (a - b);
    const long long id = edge_id(i0, j0, vertical);
    where.emplace(id, point_of(i0 + f * (i1 - i0), j0 + f * (j1 - j0)));
    return id;
  };
  for (int i = 0; i + 1 < size; ++i) {
    for (int j = 0; j + 1 < size; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * size + j;
      if (!in[k] || !in[k + 1] || !in[k + size] || !in[k + size + 1]) continue;
      const bool p00 = at(i, j) > 0, p10 = at(i + 1, j) > 0;
      const bool p01 = at(i, j + 1) > 0, p11 = at(i + 1, j + 1) > 0;
      std::vector<long long> ids;
      if (p00 != p10) ids.push_back(crossing(i, j, i + 1, j, false));
      if (p10 != p11) ids.push_back(crossing(i + 1, j, i + 1, j + 1, true));
      if (p11 != p01) ids.push_back(crossing(i, j + 1, i + 1, j + 1, false));
      if (p01 != p00) ids.push_back(crossing(i, j, i, j + 1, true));
      if (ids.size() == 2) {
        adj[ids[0]].push_back(ids[1]);
        adj[ids[1]].push_back(ids[0]);
      } else if (ids.size() == 4) {
        // Saddle: the centre value decides which corners connect.
        const double centre = 0.25 * (at(i, j) + at(i + 1, j) + at(i, j + 1) +
                                      at(i + 1, j + 1));
        const bool join_first = (centre > 0) == p00;
        const std::array<int, 4> order =
            join_first ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{0, 3, 1, 2};
        for (int q = 0; q < 4; q += 2) {
          adj[ids[order[q]]].push_back(ids[order[q + 1]]);
          adj[ids[order[q + 1]]].push_back(ids[order[q]]);
        }
      }
    }
  }
  std::vector<std::vector<SvgPoint>> lines;
  std::map<long long, bool> used;
  const auto walk = [&](long long start) {
    std::vector<SvgPoint> line{where.at(start)};
    used[start] = true;
    long long cur = start;
    for (;;) {
      long long next = -1;
      for (long long nb : adj[cur]) {
        if (!used[nb]) {
          next = nb;
          break;
        }
      }
      if (next < 0) break;
      used[next] = true;
      line.push_back(where.at(next));
      cur = next;
    }
    // Close loops whose last node touches the start again.
    if (line.size() > 2) {
      for (long long nb : adj[cur]) {
        if (nb == start) line.push_back(line.front());
      }
    }
    lines.push_back(std::move(line));
  };
  for (const auto& [id, nbs] : adj) {
    if (nbs.size() == 1 && !used[id]) walk(id);
  }
  for (const auto& [id, nbs] : adj) {
    if (!used[id]) walk(id);
  }
  return lines;
}

}  // namespace detail

inline std::string nodal_svg(const EigenfunctionHandle& h, int resolution) {
  constexpr double kScale = 512.0, kMargin = 16.0;
  const bool square = h.domain == DomainKind::RightIsosceles;
  std::vector<detail::SvgPoint> outline;
  if (square) {
    outline = {{0, 0}, {kPi, 0}, {kPi, kPi}};
  } else {
    for (AlcovePoint p : {kVertexO, kVertexA,
                          h.domain == DomainKind::Hemiequilateral ? kMidpointO : kVertexB}) {
      const CartesianPoint c = to_cartesian(p);
      outline.push_back({c.x, c.y});
    }
  }
  const double width = square ? kPi : 1.0, height = square ? kPi : kSqrt3 / 2.0;
  const auto px = [&](detail::SvgPoint p) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3f,%.3f", kMargin + p.x * kScale,
                  kMargin + (height - p.y) * kScale);
    return std::string(buf.data());
  };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << static_cast<int>(2 * kMargin + width * kScale) << "\" height=\""
     << static_cast<int>(2 * kMargin + height * kScale) << "\">\n";
  os << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < outline.size(); ++k) os << (k ? " " : "") << px(outline[k]);
  os << "\"/>\n";
  for (const auto& line : detail::zero_level_polylines(h, resolution)) {
    os << "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < line.size(); ++k) os << (k ? " " : "") << px(line[k]);
    os << "\"/>\n";
  }
  const bool special = h.domain == DomainKind::Equilateral &&
                       (h.mode == kPair13 || h.mode == kPair23);
  if (special) {
    for (const FixedPoint& f : median_fixed_points(h.mode)) {
      const CartesianPoint c = to_cartesian(f.location);
      const std::string xy = px({c.x, c.y});
      const auto comma = xy.find(',');
      os << "<circle cx=\"" << xy.substr(0, comma) << "\" cy=\""
         << xy.substr(comma + 1) << "\" r=\"5\" fill=\"red\"/>\n";
    }
    const double th = reduce_angle(h.theta);
    if (th > 0.0 && th <= kPi / 6.0 + 1e-12) {
      for (const CriticalZero& z : edge_critical_zeros(h.mode, th)) {
        const CartesianPoint c = to_cartesian(z.location);
        const double d = 6.0 / kScale;
        os << "<path stroke=\"green\" stroke-width=\"2\" d=\"M" << px({c.x - d, c.y - d})
           << " L" << px({c.x + d, c.y + d}) << " M" << px({c.x - d, c.y + d}) << " L"
           << px({c.x + d, c.y - d}) << "\"/>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

// ---------------------------------------------------------------- running

namespace detail {

inline Mode require_mode(const RunConfig& c) {
  if (!c.mode) throw ValidationError("--pair is required");
  return *c.mode;
}

inline void check_admissible(DomainKind d, Mode p) {
  const bool ok = d == DomainKind::Equilateral ? (p.m >= 1 && p.n >= 1)
                                               : admissible(d, p);
  if (d == DomainKind::Torus || !ok) {
    throw ValidationError("pair not admissible for domain " +
                          std::string(to_string(d)));
  }
}

inline std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

inline std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

struct Produced {
  std::string body;
  int status = kExitOk;
};

inline Produced produce(const RunConfig& c) {
  if (c.resolution < 64) throw ValidationError("--resolution must be >= 64");
  switch (c.command) {
    case Command::Spectrum: {
      const int count = c.count > 0 ? c.count : index_cutoff(c.domain);
      if (count > 1'000'000) throw ValidationError("--count exceeds 10^6");
      const auto rows = rows_for(c.domain, enumerate_spectrum(c.domain, count),
                                 faber_krahn_threshold(c.domain));
      if (c.format.value_or(Format::Csv) == Format::Json) return {dump(rows_json(rows))};
      if (c.format == Format::Svg) throw ValidationError("spectrum has no svg form");
      return {spectrum_csv(rows)};
    }
    case Command::Screen: {
      if (c.format == Format::Csv) return {spectrum_csv(screening_table(c.domain))};
      if (c.format == Format::Svg) throw ValidationError("screen has no svg form");
      return {dump(summary_json(screening_summary(c.domain)))};
    }
    case Command::Verdict: {
      const auto entries = courant_sharp_verdict(c.domain, c.resolution);
      nlohmann::ordered_json j;
      j["domain"] = std::string(to_string(c.domain));
      j["resolution"] = c.resolution;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      std::vector<int> sharp;
      bool stable = true;
      for (const VerdictEntry& e : entries) {
        arr.push_back({{"index", e.index},
                       {"sharp", e.sharp},
                       {"max_domains", e.max_domains},
                       {"stable", e.stable}});
        if (e.sharp) sharp.push_back(e.index);
        stable = stable && e.stable;
      }
      j["entries"] = arr;
      j["sharp"] = sharp;
      return {dump(j), stable ? kExitOk : kExitUnstable};
    }
    case Command::Nodal: {
      const Mode p = require_mode(c);
      check_admissible(c.domain, p);
      if (!c.theta) throw ValidationError("--theta is required");
      const NodalReport r = count_nodal_domains({c.domain, p, *c.theta}, c.resolution);
      return {dump(report_json(r)), r.stable ? kExitOk : kExitUnstable};
    }
    case Command::CriticalZeros: {
      const Mode p = require_mode(c);
      if (p != kPair13 && p != kPair23) throw ValidationError("pair must be 1,3 or 2,3");
      nlohmann::ordered_json j;
      j["pair"] = {p.m, p.n};
      if (c.theta) {
        if (!(*c.theta > 0.0 && *c.theta <= kPi / 6.0 + 1e-12)) {
          throw ValidationError("--theta must lie in (0, pi/6]");
        }
        j["theta"] = *c.theta;
        j["edge"] = zeros_json(edge_critical_zeros(p, *c.theta));
      }
      j["median_C"] = zeros_json(median_critical_zeros(p, Family::C));
      j["median_S"] = zeros_json(median_critical_zeros(p, Family::S));
      return {dump(j)};
    }
    case Command::FixedPoints: {
      const Mode p = require_mode(c);
      if (p != kPair13 && p != kPair23) throw ValidationError("pair must be 1,3 or 2,3");
      const auto points = median_fixed_points(p);
      if (c.format == Format::Csv) {
        std::ostringstream os;
        os.precision(17);
        os << "label,s,t\n";
        for (const FixedPoint& f : points) {
          os << to_string(f.label) << ',' << f.location.s << ',' << f.location.t << '\n';
        }
        return {os.str()};
      }
      nlohmann::ordered_json j;
      j["pair"] = {p.m, p.n};
      j["points"] = fixed_points_json(points);
      return {dump(j)};
    }
    case Command::Bifurcation: {
      const Bifurcation b = bifurcation_angle();
      nlohmann::ordered_json j;
      j["u_b"] = b.u_b;
      j["theta_c"] = b.theta_c;
      return {dump(j)};
    }
    case Command::Plot: {
      const Mode p = require_mode(c);
      check_admissible(c.domain, p);
      if (!c.theta) throw ValidationError("--theta is required");
      return {nodal_svg({c.domain, p, *c.theta}, c.resolution)};
    }
  }
  throw ValidationError("unknown command");
}

}  // namespace detail

// Executes one subcommand. Data goes to output_path or `out`; diagnostics
// go to `err`.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  detail::Produced result;
  try {
    if (config.stamp && config.output_path.empty()) {
      throw ValidationError("--stamp needs --out");
    }
    result = detail::produce(config);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  if (config.output_path.empty()) {
    out << result.body;
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << config.output_path << "\n";
      return kExitValidation;
    }
    file << result.body;
    if (config.stamp) {
      nlohmann::ordered_json s;
      s["generated_at"] = detail::utc_timestamp();
      s["version"] = std::string(kVersion);
      s["output"] = config.output_path;
      std::ofstream(config.output_path + ".stamp.json") << s.dump(2) << "\n";
    }
  }
  if (result.status == kExitUnstable) {
    err << "warning: nodal count changed when the resolution doubled\n";
  }
  return result.status;
}

}  // namespace courant

#endif  // COURANT_REPORT_HPP_
