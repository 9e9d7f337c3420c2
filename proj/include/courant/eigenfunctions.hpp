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

#ifndef COURANT_EIGENFUNCTIONS_HPP_
#define COURANT_EIGENFUNCTIONS_HPP_

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "courant/geometry.hpp"
#include "courant/spectrum.hpp"

namespace courant {

struct EigenfunctionHandle {
  DomainKind domain = DomainKind::Equilateral;
  Mode mode;
  double theta = 0.0;
};

// Value with partial derivatives in alcove coordinates.
struct EvalResult {
  double value = 0.0;
  double grad_s = 0.0;
  double grad_t = 0.0;
};

struct CosSinPair {
  EvalResult c;
  EvalResult s;
};

inline double reduce_angle(double theta) {
  double r = std::fmod(theta, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  return r;
}

inline std::complex<double> eval_torus_mode(int m, int n, double s, double t) {
  const double phase = 2.0 * kPi * (m * s + n * t);
  return {std::cos(phase), std::sin(phase)};
}

// The alternating sums over the Weyl orbit, with analytic gradients.
inline CosSinPair eval_cs(int m, int n, double s, double t) {
  struct Term {
    int sign;
    double a, b;  // phase = a*s + b*t
  };
  const double md = m, nd = n;
  const std::array<Term, 6> terms{{{+1, md, nd},
                                   {-1, -md, md + nd},
                                   {-1, md + nd, -nd},
                                   {-1, -nd, -md},
                                   {+1, nd, -(md + nd)},
                                   {+1, -(md + nd), md}}};
  CosSinPair r;
  constexpr double kTwoPi = 2.0 * kPi;
  for (const Term& k : terms) {
    const double arg = kTwoPi * (k.a * s + k.b * t);
    const double cv = std::cos(arg), sv = std::sin(arg);
    r.c.value += k.sign * cv;
    r.c.grad_s -= k.sign * kTwoPi * k.a * sv;
    r.c.grad_t -= k.sign * kTwoPi * k.b * sv;
    r.s.value += k.sign * sv;
    r.s.grad_s += k.sign * kTwoPi * k.a * cv;
    r.s.grad_t += k.sign * kTwoPi * k.b * cv;
  }
  return r;
}

struct SecondDerivatives {
  double ss = 0.0;
  double st = 0.0;
  double tt = 0.0;
};

// Hessian of C in alcove coordinates.
inline SecondDerivatives eval_c_second(int m, int n, double s, double t) {
  const double md = m, nd = n;
  const std::array<std::array<double, 3>, 6> terms{{{+1, md, nd},
                                                    {-1, -md, md + nd},
                                                    {-1, md + nd, -nd},
                                                    {-1, -nd, -md},
                                                    {+1, nd, -(md + nd)},
                                                    {+1, -(md + nd), md}}};
  constexpr double kTwoPi = 2.0 * kPi;
  SecondDerivatives r;
  for (const auto& [sign, a, b] : terms) {
    const double w = -sign * kTwoPi * kTwoPi *
                     std::cos(kTwoPi * (a * s + b * t));
    r.ss += w * a * a;
    r.st += w * a * b;
    r.tt += w * b * b;
  }
  return r;
}

inline double eval_C(int m, int n, double s, double t) {
  return eval_cs(m, n, s, t).c.value;
}

inline double eval_S(int m, int n, double s, double t) {
  return eval_cs(m, n, s, t).s.value;
}

inline EvalResult mix(const CosSinPair& cs, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c * cs.c.value + s * cs.s.value, c * cs.c.grad_s + s * cs.s.grad_s,
          c * cs.c.grad_t + s * cs.s.grad_t};
}

// Hemiequilateral eigenfunctions are the C family alone, so theta is unused.
inline EvalResult eval_psi(const EigenfunctionHandle& h, double s, double t) {
  const CosSinPair cs = eval_cs(h.mode.m, h.mode.n, s, t);
  switch (h.domain) {
    case DomainKind::Equilateral:
      return mix(cs, h.theta);
    case DomainKind::Hemiequilateral:
      return cs.c;
    default:
      throw std::invalid_argument("eval_psi needs an alcove triangle domain");
  }
}

inline double eval_isosceles(int m, int n, double x, double y) {
  if (!(m > n && n >= 1)) {
    throw std::invalid_argument("right-isosceles modes need m > n >= 1");
  }
  return std::sin(m * x) * std::sin(n * y) - std::sin(n * x) * std::sin(m * y);
}

// Rotation angle alpha = 2 pi (2m + n) / 3 appearing in the reflections.
inline double weyl_alpha(Mode p) {
  return reduce_angle(2.0 * kPi * (2.0 * p.m + p.n) / 3.0);
}

struct PullbackResult {
  double theta;
  int sign;
};

// Psi^theta composed with the symmetry equals sign * Psi^theta'. The
// reduction mod 2 pi absorbs every sign, so sign is always +1 here.
inline PullbackResult pullback_theta(Symmetry k, Mode p, double theta) {
  const double a = weyl_alpha(p);
  double out = theta;
  switch (k) {
    case Symmetry::Sigma1:
      out = kPi - theta;
      break;
    case Symmetry::Sigma2:
      out = kPi + a - theta;
      break;
    case Symmetry::Sigma3:
      out = kPi - a - theta;
      break;
    case Symmetry::RotPlus:  // sigma2 after sigma1
      out = theta - a;
      break;
    case Symmetry::RotMinus:  // sigma1 after sigma2
      out = theta + a;
      break;
  }
  return {reduce_angle(out), +1};
}

// Least-squares slope of log|Psi| against log r along a ray from a vertex,
// sampled on a geometric ladder.
inline double estimate_vanishing_order(const EigenfunctionHandle& h,
                                       AlcovePoint vertex,
                                       AlcovePoint direction,
                                       double r_min = 1e-3,
                                       double r_max = 1e-2, int points = 8) {
  if (points < 2 || !(r_min > 0.0) || !(r_max > r_min)) {
    throw std::invalid_argument("bad radius ladder");
  }
  const double ratio = std::pow(r_max / r_min, 1.0 / (points - 1));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double r = r_min;
  for (int i = 0; i < points; ++i, r *= ratio) {
    const double v = eval_psi(h, vertex.s + r * direction.s,
                              vertex.t + r * direction.t).value;
    const double x = std::log(r), y = std::log(std::abs(v));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (points * sxy - sx * sy) / (points * sxx - sx * sx);
}

}  // namespace courant

#endif  // COURANT_EIGENFUNCTIONS_HPP_
