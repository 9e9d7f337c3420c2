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

#ifndef COURANT_SPECTRUM_HPP_
#define COURANT_SPECTRUM_HPP_

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "courant/geometry.hpp"

namespace courant {

struct Mode {
  int m = 0;
  int n = 0;
  auto operator<=>(const Mode&) const = default;
};

struct SpectrumEntry {
  std::int64_t normalized = 0;
  int multiplicity = 0;
  int min_index = 0;
  int max_index = 0;
  std::vector<Mode> representative_modes;
};

// Physical eigenvalue = scale * normalized value.
inline double eigenvalue_scale(DomainKind d) {
  return d == DomainKind::RightIsosceles ? 1.0 : 16.0 * kPi * kPi / 9.0;
}

inline double domain_area(DomainKind d) {
  switch (d) {
    case DomainKind::Torus:
      return 1.5 * kSqrt3;
    case DomainKind::Equilateral:
      return kSqrt3 / 4.0;
    case DomainKind::Hemiequilateral:
      return kSqrt3 / 8.0;
    case DomainKind::RightIsosceles:
      return kPi * kPi / 2.0;
  }
  return 0.0;
}

inline bool admissible(DomainKind d, Mode p) {
  switch (d) {
    case DomainKind::Torus:
      return true;
    case DomainKind::Equilateral:
      return p.m >= 1 && p.n >= 1;
    case DomainKind::Hemiequilateral:
    case DomainKind::RightIsosceles:
      return p.m > p.n && p.n >= 1;
  }
  return false;
}

inline std::int64_t normalized_value(DomainKind d, Mode p) {
  const std::int64_t m = p.m, n = p.n;
  if (d == DomainKind::RightIsosceles) return m * m + n * n;
  return m * m + m * n + n * n;
}

// Half-width of a box guaranteed to hold every mode with value <= cap.
// For the A2 form, m^2+mn+n^2 >= (3/4) max(m^2, n^2).
inline int enumeration_box(DomainKind d, std::int64_t cap) {
  const double c = static_cast<double>(std::max<std::int64_t>(cap, 0));
  if (d == DomainKind::RightIsosceles) {
    return static_cast<int>(std::ceil(std::sqrt(c)));
  }
  return static_cast<int>(std::ceil(2.0 * std::sqrt(c / 3.0)));
}

// Admissible modes with value <= cap inside the given box, sorted by
// (value, m, n).
inline std::vector<Mode> modes_in_box(DomainKind d, std::int64_t cap,
                                      int box) {
  std::vector<Mode> out;
  const int lo = d == DomainKind::Torus ? -box : 1;
  for (int m = lo; m <= box; ++m) {
    for (int n = lo; n <= box; ++n) {
      const Mode p{m, n};
      if (admissible(d, p) && normalized_value(d, p) <= cap) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [d](const Mode& a, const Mode& b) {
    return std::tuple(normalized_value(d, a), a.m, a.n) <
           std::tuple(normalized_value(d, b), b.m, b.n);
  });
  return out;
}

inline std::vector<Mode> modes_up_to(DomainKind d, std::int64_t cap) {
  return modes_in_box(d, cap, enumeration_box(d, cap));
}

// Groups a sorted mode list into distinct eigenvalues with index ranges.
inline std::vector<SpectrumEntry> group_modes(DomainKind d,
                                              const std::vector<Mode>& modes) {
  std::vector<SpectrumEntry> out;
  int index = 0;
  for (const Mode& p : modes) {
    ++index;
    const std::int64_t v = normalized_value(d, p);
    if (out.empty() || out.back().normalized != v) {
      out.push_back({v, 0, index, index, {}});
    }
    SpectrumEntry& e = out.back();
    ++e.multiplicity;
    e.max_index = index;
    e.representative_modes.push_back(p);
  }
  return out;
}

inline std::vector<SpectrumEntry> enumerate_spectrum(DomainKind d, int count) {
  if (count <= 0) throw std::invalid_argument("count must be positive");
  if (count > 1'000'000) throw std::invalid_argument("count exceeds 10^6");
  // Weyl guess in normalized units, grown by half until enough modes exist.
  double cap = std::max(
      4.0, 4.0 * kPi * count / (domain_area(d) * eigenvalue_scale(d)));
  std::vector<Mode> modes = modes_up_to(d, static_cast<std::int64_t>(cap));
  while (static_cast<int>(modes.size()) < count) {
    cap *= 1.5;
    modes = modes_up_to(d, static_cast<std::int64_t>(cap));
  }
  std::vector<SpectrumEntry> entries = group_modes(d, modes);
  // Every entry at or below the cap is complete; keep those reaching count.
  auto last = std::find_if(entries.begin(), entries.end(),
                           [count](const SpectrumEntry& e) {
                             return e.max_index >= count;
                           });
  entries.erase(last + 1, entries.end());
  return entries;
}

inline int multiplicity(DomainKind d, std::int64_t normalized) {
  if (normalized < 0) throw std::invalid_argument("negative eigenvalue");
  int count = 0;
  for (const Mode& p : modes_up_to(d, normalized)) {
    if (normalized_value(d, p) == normalized) ++count;
  }
  return count;
}

// Number of eigenvalues, with multiplicity, strictly below lambda.
inline std::int64_t counting_function(DomainKind d, double lambda) {
  if (!std::isfinite(lambda)) throw std::invalid_argument("lambda not finite");
  if (lambda <= 0.0) return 0;
  const double scale = eigenvalue_scale(d);
  const auto cap = static_cast<std::int64_t>(std::floor(lambda / scale)) + 1;
  std::int64_t count = 0;
  for (const Mode& p : modes_up_to(d, cap)) {
    if (static_cast<double>(normalized_value(d, p)) * scale < lambda) ++count;
  }
  return count;
}

// N(lambda) >= area * lambda - perimeter * sqrt(lambda) + constant.
struct CountingBound {
  double area_coeff;
  double sqrt_coeff;
  double constant;
};

inline CountingBound counting_bound_coefficients(DomainKind d) {
  switch (d) {
    case DomainKind::Torus:
      return {3.0 * kSqrt3 / (8.0 * kPi), 9.0 / (2.0 * kPi), 1.0};
    case DomainKind::Equilateral:
      return {kSqrt3 / (16.0 * kPi), 3.0 / (2.0 * kPi), 1.0};
    case DomainKind::RightIsosceles:
      return {kPi / 8.0, (4.0 + std::numbers::sqrt2) / 4.0, 0.5};
    case DomainKind::Hemiequilateral:
      return {kSqrt3 / (32.0 * kPi), (6.0 + kSqrt3) / (8.0 * kPi), 0.5};
  }
  return {0.0, 0.0, 0.0};
}

inline double counting_lower_bound(DomainKind d, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  const CountingBound b = counting_bound_coefficients(d);
  return b.area_coeff * lambda - b.sqrt_coeff * std::sqrt(lambda) + b.constant;
}

}  // namespace courant

#endif  // COURANT_SPECTRUM_HPP_
