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

#ifndef COURANT_NODAL_HPP_
#define COURANT_NODAL_HPP_

// One-dimensional analysis of the two degenerate eigenspaces with
// lambda-bar 13 (pair (1,3)) and 19 (pair (2,3)): fixed points on the
// median, barrier-line restrictions, critical zeros on edges and median,
// Wronskians and the bifurcation angle.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "courant/eigenfunctions.hpp"
#include "courant/geometry.hpp"
#include "courant/roots.hpp"
#include "courant/spectrum.hpp"

namespace courant {

enum class Segment { OA, OB, BA, OM };

inline std::string_view to_string(Segment s) {
  switch (s) {
    case Segment::OA:
      return "OA";
    case Segment::OB:
      return "OB";
    case Segment::BA:
      return "BA";
    case Segment::OM:
      return "OM";
  }
  return "?";
}

// Edge parametrizations: OA (u, u/2), OB (u/2, u), BA (u/2, 1 - u/2) and
// the median OM (u/2, u/2).
inline AlcovePoint segment_point(Segment seg, double u) {
  switch (seg) {
    case Segment::OA:
      return {u, u / 2.0};
    case Segment::OB:
      return {u / 2.0, u};
    case Segment::BA:
      return {u / 2.0, 1.0 - u / 2.0};
    case Segment::OM:
      return {u / 2.0, u / 2.0};
  }
  return {};
}

struct SegmentRange {
  double lo;
  double hi;
};

inline SegmentRange segment_range(Segment seg) {
  switch (seg) {
    case Segment::OA:
    case Segment::OB:
      return {0.0, 2.0 / 3.0};
    case Segment::BA:
      return {2.0 / 3.0, 4.0 / 3.0};
    case Segment::OM:
      return {0.0, 1.0};
  }
  return {0.0, 0.0};
}

struct CriticalZero {
  AlcovePoint location;
  Segment where = Segment::OA;
  double parameter_u = 0.0;
  int order = 2;
};

enum class FixedPointLabel { FC, FO, FA, FB, F1O, F2O, F1A, F2A, F1B, F2B };

inline std::string_view to_string(FixedPointLabel l) {
  constexpr std::array<std::string_view, 10> names{
      "F_C", "F_O", "F_A", "F_B", "F_1O", "F_2O", "F_1A", "F_2A", "F_1B", "F_2B"};
  return names[static_cast<int>(l)];
}

struct FixedPoint {
  AlcovePoint location;
  FixedPointLabel label;
};

inline constexpr Mode kPair13{1, 3};
inline constexpr Mode kPair23{2, 3};

inline void require_pair(Mode p) {
  if (p != kPair13 && p != kPair23) {
    throw std::invalid_argument("only the pairs (1,3) and (2,3) are supported");
  }
}

struct TraceValue {
  double c;   // cosine-family trace
  double s;   // sine-family trace
  double dc;  // derivatives in u
  double ds;
};

// Boundary traces FC, FS: the common factor of the normal derivatives of
// C and S along the edges, written as short sine and cosine sums.
inline TraceValue boundary_trace(Mode p, double u) {
  require_pair(p);
  struct Term {
    double c_coef, s_coef, freq;
  };
  const std::array<Term, 3> terms =
      p == kPair13 ? std::array<Term, 3>{{{-1, -1, 7}, {3, -3, 5}, {-4, 4, 2}}}
                   : std::array<Term, 3>{{{-2, -2, 8}, {3, -3, 7}, {-5, 5, 1}}};
  TraceValue r{0, 0, 0, 0};
  for (const Term& k : terms) {
    const double w = k.freq * kPi;
    r.c += k.c_coef * std::sin(w * u);
    r.s += k.s_coef * std::cos(w * u);
    r.dc += k.c_coef * w * std::cos(w * u);
    r.ds -= k.s_coef * w * std::sin(w * u);
  }
  return r;
}

// The traces with the vertex factor (c-1)(2c+1)^2, c = cos(pi u), divided
// out. They share the zeros of FC, FS on the open edges.
inline TraceValue reduced_trace(Mode p, double u) {
  require_pair(p);
  const double c = std::cos(kPi * u), sn = std::sin(kPi * u);
  const double dc_du = -kPi * sn, dsn_du = kPi * c;
  TraceValue r{};
  if (p == kPair13) {
    const double q = 4 * c * c + 4 * c - 1, dq = 8 * c + 4;
    r.c = sn * (c - 1) * q;
    r.dc = dsn_du * (c - 1) * q + sn * dc_du * q + sn * (c - 1) * dq * dc_du;
    r.s = 4 * c * c * c * c - c * c + c - 1;
    r.ds = (16 * c * c * c - 2 * c + 1) * dc_du;
  } else {
    const double q = 8 * c * c * c + 2 * c * c - 4 * c + 1;
    const double dq = 24 * c * c + 4 * c - 4;
    r.c = sn * (c - 1) * q;
    r.dc = dsn_du * (c - 1) * q + sn * dc_du * q + sn * (c - 1) * dq * dc_du;
    const double c2 = c * c, c3 = c2 * c, c4 = c3 * c, c5 = c4 * c;
    r.s = 8 * c5 + 6 * c4 - 10 * c3 - 4 * c2 + 4 * c - 0.25;
    r.ds = (40 * c4 + 24 * c3 - 30 * c2 - 8 * c + 4) * dc_du;
  }
  return r;
}

// Sign between the two traces in the critical-zero equation of an edge.
inline int edge_trace_sign(Segment seg) {
  return seg == Segment::OA ? +1 : -1;
}

// Fixed points: common zeros of C and S. On the median C vanishes
// identically, so they are the zeros of S(u,u) for u in (0, 1/2), plus
// their images under the two rotations.
inline std::vector<FixedPoint> median_fixed_points(Mode p) {
  require_pair(p);
  const auto f = [p](double u) { return eval_S(p.m, p.n, u, u); };
  const auto df = [p](double u) {
    const EvalResult s = eval_cs(p.m, p.n, u, u).s;
    return s.grad_s + s.grad_t;
  };
  const std::vector<double> us =
      root_locations(find_roots(f, df, 0.0, 0.5));
  std::vector<double> off_center;
  std::vector<FixedPoint> out;
  for (double u : us) {
    if (std::abs(u - 1.0 / 3.0) < 1e-9) {
      out.push_back({{u, u}, FixedPointLabel::FC});
    } else {
      off_center.push_back(u);
    }
  }
  const bool single = off_center.size() == 1;
  for (std::size_t k = 0; k < off_center.size(); ++k) {
    const double u = off_center[k];
    const AlcovePoint o{u, u};
    const int base = single ? 1 : 4 + static_cast<int>(k);  // F_O or F_kO
    const auto label = [&](int shift) {
      return static_cast<FixedPointLabel>(single ? base + shift
                                                 : base + 2 * shift);
    };
    out.push_back({o, label(0)});
    out.push_back({apply_symmetry(Symmetry::RotPlus, o), label(1)});
    out.push_back({apply_symmetry(Symmetry::RotMinus, o), label(2)});
  }
  return out;
}

// Zeros of u -> Psi^theta(u, a - u) on the open chord (a/3, 2a/3) of the
// barrier line s + t = a.
inline std::vector<double> edge_restriction_roots(Mode p, double a,
                                                  double theta) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("a must lie in (0,1)");
  const EigenfunctionHandle h{DomainKind::Equilateral, p, reduce_angle(theta)};
  const auto f = [&](double u) { return eval_psi(h, u, a - u).value; };
  const auto df = [&](double u) {
    const EvalResult r = eval_psi(h, u, a - u);
    return r.grad_s - r.grad_t;
  };
  return root_locations(find_roots(f, df, a / 3.0, 2.0 * a / 3.0));
}

// Critical zeros on the open edges for theta in (0, pi/6]. On each edge
// the gradient is a multiple of cos(theta) FC +- sin(theta) FS.
inline std::vector<CriticalZero> edge_critical_zeros(Mode p, double theta) {
  require_pair(p);
  if (!(theta > 0.0 && theta <= kPi / 6.0 + 1e-12)) {
    throw std::invalid_argument("theta must lie in (0, pi/6]");
  }
  const double ct = std::cos(theta), st = std::sin(theta);
  std::vector<CriticalZero> out;
  for (Segment seg : {Segment::OA, Segment::OB, Segment::BA}) {
    const int sg = edge_trace_sign(seg);
    const auto f = [&](double u) {
      const TraceValue g = reduced_trace(p, u);
      return ct * g.c + sg * st * g.s;
    };
    const auto df = [&](double u) {
      const TraceValue g = reduced_trace(p, u);
      return ct * g.dc + sg * st * g.ds;
    };
    const SegmentRange r = segment_range(seg);
    for (const Root& root : find_roots(f, df, r.lo, r.hi)) {
      out.push_back({segment_point(seg, root.x), seg, root.x,
                     root.multiplicity == 1 ? 2 : 3});
    }
  }
  return out;
}

enum class Family { C, S };

// Critical zeros of C or S on the closed median [O, M_O].
inline std::vector<CriticalZero> median_critical_zeros(Mode p, Family which) {
  require_pair(p);
  const auto at = [p, which](double u) {
    const CosSinPair cs = eval_cs(p.m, p.n, u / 2.0, u / 2.0);
    return which == Family::C ? cs.c : cs.s;
  };
  RootOptions opt;
  opt.include_endpoints = true;
  std::vector<Root> roots;
  double gscale = 0.0;
  for (int k = 0; k <= 256; ++k) {
    const EvalResult r = at(k / 256.0);
    gscale = std::max(gscale, std::hypot(r.grad_s, r.grad_t));
  }
  if (which == Family::C) {
    // C vanishes on the median: critical zeros are the zeros of d/ds C.
    const auto g = [&](double u) { return at(u).grad_s; };
    const auto dg = [p](double u) {
      const SecondDerivatives d = eval_c_second(p.m, p.n, u / 2.0, u / 2.0);
      return 0.5 * (d.ss + d.st);
    };
    roots = find_roots(g, dg, 0.0, 1.0, opt);
  } else {
    const auto f = [&](double u) { return at(u).value; };
    const auto df = [&](double u) {
      const EvalResult r = at(u);
      return 0.5 * (r.grad_s + r.grad_t);
    };
    for (const Root& r : find_roots(f, df, 0.0, 1.0, opt)) {
      const EvalResult e = at(r.x);
      if (std::hypot(e.grad_s, e.grad_t) <= 1e-9 * gscale) roots.push_back(r);
    }
  }
  std::vector<CriticalZero> out;
  const EigenfunctionHandle h{DomainKind::Equilateral, p,
                              which == Family::C ? 0.0 : kPi / 2.0};
  for (const Root& r : roots) {
    int order = 2;
    if (r.x == 0.0) {
      // An interior ray off the median, where C vanishes identically.
      const double slope = estimate_vanishing_order(h, kVertexO, {0.6, 0.4});
      order = static_cast<int>(std::lround(slope));
    }
    out.push_back({segment_point(Segment::OM, r.x), Segment::OM, r.x, order});
  }
  return out;
}

enum class PolyKind { PC, PS, PW };

// Polynomials in cos(pi u) (cos(3 pi u) for PW) whose roots govern the
// boundary traces and the Wronskian.
inline Polynomial boundary_polynomial(Mode p, PolyKind which) {
  require_pair(p);
  if (p == kPair13) {
    switch (which) {
      case PolyKind::PC:
        return {{4, 4, -1}};
      case PolyKind::PS:
        return {{4, 0, -1, 1, -1}};
      case PolyKind::PW:
        return {{12, 0, -9, 4}};
    }
  }
  switch (which) {
    case PolyKind::PC:
      return {{8, 2, -4, 1}};
    case PolyKind::PS:
      return {{8, 6, -10, -4, 4, -0.25}};
    case PolyKind::PW:
      return {{-6, 0, 25, -15, -15, 11}};
  }
  return {};
}

inline std::vector<double> polynomial_roots_unit_interval(Mode p,
                                                          PolyKind which) {
  return polynomial_roots_in_unit_interval(boundary_polynomial(p, which));
}

// Direct Wronskian of the trace pair: reduced traces for (1,3), full
// traces for (2,3).
inline double wronskian(Mode p, double u) {
  const TraceValue g = p == kPair13 ? reduced_trace(p, u) : boundary_trace(p, u);
  return g.c * g.ds - g.s * g.dc;
}

inline double wronskian_factorized(Mode p, double u) {
  require_pair(p);
  if (p == kPair13) {
    const double c = std::cos(kPi * u);
    return kPi * (1 - c) * (2 * c + 1) * (2 * c + 1) *
           boundary_polynomial(p, PolyKind::PW)(c);
  }
  return 16.0 * kPi * boundary_polynomial(p, PolyKind::PW)(std::cos(3 * kPi * u));
}

struct Bifurcation {
  double u_b;
  double theta_c;
};

// The angle at which the (2,3) trace combination on [OA] acquires a double
// zero, at the Wronskian zero u_b in (1/3, 1/2).
inline Bifurcation bifurcation_angle() {
  const Polynomial pw = boundary_polynomial(kPair23, PolyKind::PW);
  const auto w = [&pw](double u) { return pw(std::cos(3 * kPi * u)); };
  const double lo = 1.0 / 3.0 + 1e-9, hi = 0.5;
  const double wl = w(lo), wh = w(hi);
  if (!((wl < 0.0) != (wh < 0.0))) {
    throw std::runtime_error("no sign change brackets the Wronskian zero");
  }
  const double ub = bisect(w, lo, hi, wl, 1e-15);
  const TraceValue f = boundary_trace(kPair23, ub);
  // Zero of cos(theta) FC + sin(theta) FS: tan(theta) = -FC / FS.
  const double theta = std::atan(-f.c / f.s);
  if (!(theta > 0.0 && theta < kPi / 6.0)) {
    throw std::runtime_error("bifurcation angle outside (0, pi/6)");
  }
  return {ub, theta};
}

}  // namespace courant

#endif  // COURANT_NODAL_HPP_
