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

#ifndef COURANT_SCREENING_HPP_
#define COURANT_SCREENING_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "courant/geometry.hpp"
#include "courant/spectrum.hpp"

namespace courant {

// First positive zero of the Bessel function J0.
inline constexpr double kBesselJ01 = 2.40482555769577;

struct ScreeningRow {
  std::int64_t normalized = 0;
  int min_index = 0;
  int max_index = 0;
  int multiplicity = 0;
  std::optional<double> ratio;  // empty where the ratio rule is exempt
  bool passes = true;
};

struct ScreeningSummary {
  DomainKind domain = DomainKind::Torus;
  int index_cutoff = 0;
  double threshold = 0.0;
  std::vector<int> candidates;
};

// Lower bound on normalized/index for a Courant-sharp eigenvalue, in the
// units of the domain's table.
inline double faber_krahn_threshold(DomainKind d) {
  const double j2 = kBesselJ01 * kBesselJ01;
  switch (d) {
    case DomainKind::Torus:
      return kSqrt3 * j2 / (8.0 * kPi);
    case DomainKind::Equilateral:
      return 3.0 * kSqrt3 * j2 / (4.0 * kPi);
    case DomainKind::RightIsosceles:
      return 2.0 * j2 / kPi;
    case DomainKind::Hemiequilateral:
      return 3.0 * kSqrt3 * j2 / (2.0 * kPi);
  }
  return 0.0;
}

// Smallest index the ratio rule applies to. On the torus a small nodal
// domain only satisfies the isoperimetric hypothesis from n = 4 on.
inline int ratio_rule_start(DomainKind d) {
  return d == DomainKind::Torus ? 4 : 1;
}

// Inverts the counting lower bound at N(lambda_n) = n - 1.
inline double courant_upper_bound(DomainKind d, int n) {
  if (n < 2) throw std::invalid_argument("upper bound needs n >= 2");
  const CountingBound b = counting_bound_coefficients(d);
  const double disc = b.sqrt_coeff * b.sqrt_coeff +
                      4.0 * b.area_coeff * (n - 1 - b.constant);
  const double root = (b.sqrt_coeff + std::sqrt(disc)) / (2.0 * b.area_coeff);
  return root * root;
}

// Faber-Krahn growth line in physical units.
inline double faber_krahn_line(DomainKind d, int n) {
  return faber_krahn_threshold(d) * eigenvalue_scale(d) * n;
}

inline int index_cutoff(DomainKind d) {
  // The line outgrows the bound linearly, so a generous scan is exhaustive.
  constexpr int kScanLimit = 100000;
  int best = 1;
  for (int n = 2; n <= kScanLimit; ++n) {
    if (faber_krahn_line(d, n) <= courant_upper_bound(d, n)) best = n;
  }
  return best;
}

inline ScreeningRow make_row(DomainKind d, const SpectrumEntry& e,
                             double threshold) {
  ScreeningRow row{e.normalized, e.min_index, e.max_index, e.multiplicity,
                   std::nullopt, true};
  if (e.min_index >= ratio_rule_start(d)) {
    row.ratio = static_cast<double>(e.normalized) / e.min_index;
    row.passes = *row.ratio >= threshold;
  }
  return row;
}

inline std::vector<ScreeningRow> rows_for(
    DomainKind d, const std::vector<SpectrumEntry>& entries,
    double threshold) {
  std::vector<ScreeningRow> rows;
  rows.reserve(entries.size());
  for (const SpectrumEntry& e : entries) rows.push_back(make_row(d, e, threshold));
  return rows;
}

inline std::vector<ScreeningRow> screening_table(DomainKind d) {
  const int cutoff = index_cutoff(d);
  std::vector<SpectrumEntry> entries = enumerate_spectrum(d, cutoff);
  std::erase_if(entries,
                [cutoff](const SpectrumEntry& e) { return e.min_index > cutoff; });
  return rows_for(d, entries, faber_krahn_threshold(d));
}

inline std::vector<int> candidate_indices_with_threshold(DomainKind d,
                                                         double threshold) {
  const int cutoff = index_cutoff(d);
  std::vector<int> out;
  for (const SpectrumEntry& e : enumerate_spectrum(d, cutoff)) {
    if (e.min_index > cutoff) break;
    if (make_row(d, e, threshold).passes) out.push_back(e.min_index);
  }
  return out;
}

inline std::vector<int> candidate_indices(DomainKind d) {
  return candidate_indices_with_threshold(d, faber_krahn_threshold(d));
}

inline ScreeningSummary screening_summary(DomainKind d) {
  return {d, index_cutoff(d), faber_krahn_threshold(d), candidate_indices(d)};
}

}  // namespace courant

#endif  // COURANT_SCREENING_HPP_
