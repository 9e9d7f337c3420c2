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

#ifndef COURANT_GEOMETRY_HPP_
#define COURANT_GEOMETRY_HPP_

#include <array>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace courant {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt3 = std::numbers::sqrt3;

struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;
};

// Coefficients of the two simple coroots.
struct AlcovePoint {
  double s = 0.0;
  double t = 0.0;
};

struct LatticeBasis {
  CartesianPoint alpha1_check;
  CartesianPoint alpha2_check;
  CartesianPoint alpha3_check;
  CartesianPoint omega1;
  CartesianPoint omega2;
};

inline constexpr LatticeBasis kBasis{
    {1.5, -kSqrt3 / 2.0},
    {0.0, kSqrt3},
    {1.5, kSqrt3 / 2.0},
    {2.0 / 3.0, 0.0},
    {1.0 / 3.0, 1.0 / kSqrt3},
};

enum class DomainKind { Torus, Equilateral, RightIsosceles, Hemiequilateral };

inline constexpr std::array<DomainKind, 4> kAllDomains{
    DomainKind::Torus, DomainKind::Equilateral, DomainKind::RightIsosceles,
    DomainKind::Hemiequilateral};

inline std::string_view to_string(DomainKind d) {
  switch (d) {
    case DomainKind::Torus:
      return "torus";
    case DomainKind::Equilateral:
      return "equilateral";
    case DomainKind::RightIsosceles:
      return "right-isosceles";
    case DomainKind::Hemiequilateral:
      return "hemiequilateral";
  }
  return "unknown";
}

inline std::optional<DomainKind> parse_domain(std::string_view name) {
  for (DomainKind d : kAllDomains) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

// True for the three domains built on the A2 alcove.
inline bool is_alcove_domain(DomainKind d) {
  return d != DomainKind::RightIsosceles;
}

inline CartesianPoint to_cartesian(AlcovePoint p) {
  return {p.s * kBasis.alpha1_check.x + p.t * kBasis.alpha2_check.x,
          p.s * kBasis.alpha1_check.y + p.t * kBasis.alpha2_check.y};
}

// Inverse of to_cartesian: s = <omega1, q>, t = <omega2, q>.
inline AlcovePoint to_alcove(CartesianPoint q) {
  return {q.x * kBasis.omega1.x + q.y * kBasis.omega1.y,
          q.x * kBasis.omega2.x + q.y * kBasis.omega2.y};
}

struct WeylImage {
  int sign;
  double phase;
};

// Images of (s,t) paired with p = (m,n) under the six Weyl group elements.
inline std::array<WeylImage, 6> weyl_images(int m, int n, double s, double t) {
  const double md = m, nd = n;
  return {{{+1, md * s + nd * t},
           {-1, -md * s + (md + nd) * t},
           {-1, (md + nd) * s - nd * t},
           {-1, -nd * s - md * t},
           {+1, nd * s - (md + nd) * t},
           {+1, -(md + nd) * s + md * t}}};
}

enum class Closure { Closed, Strict };

inline constexpr double kDomainTolerance = 1e-12;

namespace detail {

inline bool accept(double margin, Closure c) {
  return c == Closure::Closed ? margin >= -kDomainTolerance
                              : margin > kDomainTolerance;
}

inline bool in_alcove(DomainKind d, AlcovePoint p, Closure c) {
  if (d == DomainKind::Torus) return true;
  const bool tri = accept(p.t - p.s / 2.0, c) && accept(p.s - p.t / 2.0, c) &&
                   accept(1.0 - p.s - p.t, c);
  if (d == DomainKind::Hemiequilateral) return tri && accept(p.s - p.t, c);
  return tri;
}

inline bool in_isosceles(CartesianPoint q, Closure c) {
  return accept(q.y, c) && accept(q.x - q.y, c) && accept(kPi - q.x, c);
}

}  // namespace detail

// Alcove coordinates are meaningless for the right-isosceles triangle.
inline bool in_domain(DomainKind d, AlcovePoint p,
                      Closure c = Closure::Closed) {
  if (d == DomainKind::RightIsosceles) {
    throw std::invalid_argument(
        "right-isosceles membership takes Cartesian points");
  }
  return detail::in_alcove(d, p, c);
}

inline bool in_domain(DomainKind d, CartesianPoint q,
                      Closure c = Closure::Closed) {
  if (d == DomainKind::RightIsosceles) return detail::in_isosceles(q, c);
  return detail::in_alcove(d, to_alcove(q), c);
}

enum class Symmetry { Sigma1, Sigma2, Sigma3, RotPlus, RotMinus };

inline constexpr std::array<Symmetry, 5> kAllSymmetries{
    Symmetry::Sigma1, Symmetry::Sigma2, Symmetry::Sigma3, Symmetry::RotPlus,
    Symmetry::RotMinus};

inline AlcovePoint apply_symmetry(Symmetry k, AlcovePoint p) {
  const double s = p.s, t = p.t;
  switch (k) {
    case Symmetry::Sigma1:
      return {t, s};
    case Symmetry::Sigma2:
      return {-s + 2.0 / 3.0, t - s + 1.0 / 3.0};
    case Symmetry::Sigma3:
      return {s - t + 1.0 / 3.0, -t + 2.0 / 3.0};
    case Symmetry::RotPlus:
      return {-t + 2.0 / 3.0, s - t + 1.0 / 3.0};
    case Symmetry::RotMinus:
      return {t - s + 1.0 / 3.0, -s + 2.0 / 3.0};
  }
  return p;
}

// Named points of the alcove.
inline constexpr AlcovePoint kVertexO{0.0, 0.0};
inline constexpr AlcovePoint kVertexA{2.0 / 3.0, 1.0 / 3.0};
inline constexpr AlcovePoint kVertexB{1.0 / 3.0, 2.0 / 3.0};
inline constexpr AlcovePoint kCentroid{1.0 / 3.0, 1.0 / 3.0};
inline constexpr AlcovePoint kMidpointO{0.5, 0.5};

}  // namespace courant

#endif  // COURANT_GEOMETRY_HPP_
