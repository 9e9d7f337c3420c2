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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "courant/eigenfunctions.hpp"
#include "courant/nodal.hpp"

namespace courant {
namespace {

// Uniformly random point of the open equilateral triangle.
AlcovePoint random_interior(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = u(rng), b = u(rng);
  if (a + b > 1.0) {
    a = 1.0 - a;
    b = 1.0 - b;
  }
  // Barycentric combination of O, A, B.
  return {a * kVertexA.s + b * kVertexB.s, a * kVertexA.t + b * kVertexB.t};
}

double value(const EigenfunctionHandle& h, double s, double t) {
  return eval_psi(h, s, t).value;
}

const std::vector<EigenfunctionHandle> kHandles{
    {DomainKind::Equilateral, {1, 3}, kPi / 12.0},
    {DomainKind::Equilateral, {2, 3}, 0.2},
    {DomainKind::Equilateral, {2, 2}, kPi / 2.0},
    {DomainKind::Equilateral, {3, 3}, kPi / 2.0},
    {DomainKind::Equilateral, {1, 2}, 1.0},
    {DomainKind::Hemiequilateral, {3, 1}, 0.0},
};

TEST(EvalTorusMode, Examples) {
  const auto one = eval_torus_mode(0, 0, 0.3, 0.7);
  EXPECT_DOUBLE_EQ(one.real(), 1.0);
  EXPECT_DOUBLE_EQ(one.imag(), 0.0);
  const auto half = eval_torus_mode(1, 0, 0.5, 0.0);
  EXPECT_NEAR(half.real(), -1.0, 1e-15);
  EXPECT_NEAR(half.imag(), 0.0, 1e-15);
}

TEST(EvalTorusMode, SatisfiesEigenvalueEquation) {
  const double h = 1e-4;
  for (const Mode p : {Mode{1, 0}, Mode{2, -1}, Mode{3, 1}}) {
    const double lambda = 16.0 * kPi * kPi / 9.0 * normalized_value(DomainKind::Torus, p);
    const double s = 0.137, t = 0.291;
    const auto f = [&](double a, double b) { return eval_torus_mode(p.m, p.n, a, b).real(); };
    const double c = f(s, t);
    const double fss = (f(s + h, t) - 2 * c + f(s - h, t)) / (h * h);
    const double ftt = (f(s, t + h) - 2 * c + f(s, t - h)) / (h * h);
    const double fst = (f(s + h, t + h) - f(s + h, t - h) - f(s - h, t + h) +
                        f(s - h, t - h)) / (4 * h * h);
    const double lap = 4.0 / 9.0 * (fss + fst + ftt);
    EXPECT_NEAR(lap, -lambda * c, 1e-6 * lambda);
  }
}

TEST(EvalC, DiagonalModesVanish) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const double s = u(rng), t = u(rng);
    EXPECT_NEAR(eval_C(2, 2, s, t), 0.0, 1e-12);
    EXPECT_NEAR(eval_C(1, 3, t, s), -eval_C(1, 3, s, t), 1e-12);
    EXPECT_NEAR(eval_S(1, 3, s, t), eval_S(3, 1, s, t), 1e-12);
    EXPECT_NEAR(eval_S(3, 3, s, t), eval_S(1, 1, 3 * s, 3 * t), 1e-11);
  }
}

TEST(EvalC, VanishesOnEdgeOA) {
  for (double u : {0.1, 0.37, 0.6}) EXPECT_NEAR(eval_C(1, 3, u, u / 2), 0.0, 1e-12);
}

TEST(EvalS, MedianFactorization) {
  for (double u : {0.1, 0.2, 0.45}) {
    const double want = -8.0 * std::sin(kPi * u) * std::sin(3 * kPi * u) *
                        std::sin(4 * kPi * u);
    EXPECT_NEAR(eval_S(1, 3, u, u), want, 1e-12 * std::abs(want));
  }
}

TEST(EvalPsi, BasisCases) {
  const double s = 0.21, t = 0.17;
  EXPECT_NEAR(value({DomainKind::Equilateral, {1, 3}, 0.0}, s, t), eval_C(1, 3, s, t), 1e-14);
  EXPECT_NEAR(value({DomainKind::Equilateral, {1, 3}, kPi / 2}, s, t), eval_S(1, 3, s, t),
              1e-14);
  EXPECT_NEAR(value({DomainKind::Hemiequilateral, {3, 1}, 1.0}, s, t), eval_C(3, 1, s, t),
              1e-14);
  EXPECT_THROW(value({DomainKind::RightIsosceles, {2, 1}, 0.0}, s, t),
               std::invalid_argument);
}

TEST(EvalPsi, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(5);
  const double h = 1e-6;
  for (const EigenfunctionHandle& hd : kHandles) {
    for (int k = 0; k < 20; ++k) {
      const AlcovePoint p = random_interior(rng);
      const EvalResult r = eval_psi(hd, p.s, p.t);
      const double ds = (value(hd, p.s + h, p.t) - value(hd, p.s - h, p.t)) / (2 * h);
      const double dt = (value(hd, p.s, p.t + h) - value(hd, p.s, p.t - h)) / (2 * h);
      const double scale = std::max({std::abs(r.grad_s), std::abs(r.grad_t), 1.0});
      EXPECT_NEAR(r.grad_s, ds, 1e-6 * scale);
      EXPECT_NEAR(r.grad_t, dt, 1e-6 * scale);
    }
  }
}

TEST(EvalPsi, BoundaryTraceIsNormalDerivativeFactor) {
  const EigenfunctionHandle c13{DomainKind::Equilateral, kPair13, 0.0};
  EXPECT_NEAR(eval_psi(c13, 0.3, 0.15).grad_s, 2 * kPi * boundary_trace(kPair13, 0.3).c,
              1e-10);
  const EigenfunctionHandle c23{DomainKind::Equilateral, kPair23, 0.0};
  EXPECT_NEAR(eval_psi(c23, 0.5, 0.25).grad_s, 2 * kPi * boundary_trace(kPair23, 0.5).c,
              1e-10);
}

TEST(EvalPsi, SolvesHelmholtzEquation) {
  std::mt19937_64 rng(17);
  const double h = 1e-4;
  for (const EigenfunctionHandle& hd : kHandles) {
    const double lambda =
        16.0 * kPi * kPi / 9.0 * normalized_value(DomainKind::Equilateral, hd.mode);
    for (int k = 0; k < 100; ++k) {
      AlcovePoint p = random_interior(rng);
      if (hd.domain == DomainKind::Hemiequilateral && p.s < p.t) std::swap(p.s, p.t);
      const auto f = [&](double a, double b) { return value(hd, a, b); };
      const double c = f(p.s, p.t);
      const double fss = (f(p.s + h, p.t) - 2 * c + f(p.s - h, p.t)) / (h * h);
      const double ftt = (f(p.s, p.t + h) - 2 * c + f(p.s, p.t - h)) / (h * h);
      const double fst = (f(p.s + h, p.t + h) - f(p.s + h, p.t - h) -
                          f(p.s - h, p.t + h) + f(p.s - h, p.t - h)) / (4 * h * h);
      const double lap = 4.0 / 9.0 * (fss + fst + ftt);
      // Relative to the operator's scale on this eigenfunction.
      EXPECT_NEAR(lap + lambda * c, 0.0, 1e-5 * lambda * 6.0);
    }
  }
}

TEST(EvalPsi, DirichletOnEveryEdge) {
  for (const Mode p : {kPair13, kPair23, Mode{2, 2}, Mode{3, 3}}) {
    for (double theta : {0.0, kPi / 12, kPi / 6, kPi / 2}) {
      const EigenfunctionHandle h{DomainKind::Equilateral, p, theta};
      for (int k = 0; k < 300; ++k) {
        const double u = (k + 0.5) / 300.0;
        for (const auto& [a, b] : {std::pair{kVertexO, kVertexA},
                                   std::pair{kVertexO, kVertexB},
                                   std::pair{kVertexB, kVertexA}}) {
          const double s = a.s + u * (b.s - a.s), t = a.t + u * (b.t - a.t);
          EXPECT_LT(std::abs(value(h, s, t)), 1e-10);
        }
      }
    }
  }
}

TEST(EvalPsi, HemiequilateralDirichletOnMedian) {
  for (const Mode p : {Mode{2, 1}, Mode{3, 1}, Mode{5, 2}}) {
    const EigenfunctionHandle h{DomainKind::Hemiequilateral, p, 0.0};
    for (int k = 0; k < 300; ++k) {
      const double u = 0.5 * (k + 0.5) / 300.0;
      EXPECT_LT(std::abs(value(h, u, u)), 1e-10);
    }
  }
}

TEST(PullbackTheta, SpecialisedValues) {
  for (double theta : {0.1, 0.4, 1.3}) {
    EXPECT_NEAR(pullback_theta(Symmetry::Sigma2, kPair13, theta).theta,
                reduce_angle(kPi / 3 - theta), 1e-12);
    EXPECT_NEAR(pullback_theta(Symmetry::Sigma2, kPair23, theta).theta,
                reduce_angle(5 * kPi / 3 - theta), 1e-12);
    EXPECT_NEAR(pullback_theta(Symmetry::Sigma1, Mode{4, 1}, theta).theta,
                reduce_angle(kPi - theta), 1e-12);
  }
}

TEST(PullbackTheta, HoldsPointwiseOnGrids) {
  for (const Mode p : {kPair13, kPair23, Mode{1, 2}, Mode{2, 5}}) {
    for (double theta : {0.0, 0.3, kPi / 6, 2.0}) {
      for (Symmetry k : kAllSymmetries) {
        const PullbackResult pb = pullback_theta(k, p, theta);
        const EigenfunctionHandle h{DomainKind::Equilateral, p, theta};
        const EigenfunctionHandle g{DomainKind::Equilateral, p, pb.theta};
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
          for (int j = 0; j < 50; ++j) {
            const AlcovePoint q{i / 49.0, j / 49.0};
            const AlcovePoint r = apply_symmetry(k, q);
            worst = std::max(worst, std::abs(value(h, r.s, r.t) -
                                             pb.sign * value(g, q.s, q.t)));
          }
        }
        EXPECT_LT(worst, 1e-10);
      }
    }
  }
}

TEST(PullbackTheta, HalfTurnNegates) {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 200; ++k) {
    const AlcovePoint q = random_interior(rng);
    const double a = value({DomainKind::Equilateral, kPair23, 0.4}, q.s, q.t);
    const double b = value({DomainKind::Equilateral, kPair23, 0.4 + kPi}, q.s, q.t);
    EXPECT_NEAR(a, -b, 1e-12);
  }
}

TEST(VanishingOrder, AtVertexO) {
  const AlcovePoint ray{0.6, 0.4};
  EXPECT_NEAR(estimate_vanishing_order({DomainKind::Equilateral, kPair13, kPi / 12},
                                       kVertexO, ray),
              3.0, 0.1);
  EXPECT_NEAR(estimate_vanishing_order({DomainKind::Equilateral, kPair13, 0.0},
                                       kVertexO, ray),
              6.0, 0.2);
}

TEST(VanishingOrder, AtVertexAForPair23) {
  // The median through A is nodal at this angle, so the ray leaves it.
  // Rounding near A swamps r^6 below r = 3e-3, hence the shifted ladder.
  const AlcovePoint ray{-0.65 / 3.0, 0.05 / 3.0};
  EXPECT_NEAR(estimate_vanishing_order({DomainKind::Equilateral, kPair23, 2 * kPi / 3},
                                       kVertexA, ray, 3e-3, 1.5e-2),
              6.0, 0.2);
  EXPECT_NEAR(estimate_vanishing_order({DomainKind::Equilateral, kPair23, 0.3},
                                       kVertexA, ray),
              3.0, 0.1);
}

TEST(EvalIsosceles, Identities) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, kPi);
  for (int k = 0; k < 200; ++k) {
    const double x = u(rng), y = u(rng);
    EXPECT_NEAR(eval_isosceles(4, 1, x, x), 0.0, 1e-14);
    EXPECT_NEAR(eval_isosceles(5, 2, y, x), -eval_isosceles(5, 2, x, y), 1e-14);
    for (const Mode p : {Mode{2, 1}, Mode{3, 1}, Mode{3, 2}}) {
      EXPECT_NEAR(eval_isosceles(p.m + p.n, p.m - p.n, x, y),
                  eval_isosceles(p.m, p.n, x + y, x - y), 1e-12);
    }
    EXPECT_NEAR(eval_isosceles(4, 2, x, y), eval_isosceles(2, 1, 2 * x, 2 * y), 1e-12);
  }
  EXPECT_THROW(eval_isosceles(1, 2, 0.1, 0.2), std::invalid_argument);
}

TEST(EvalIsosceles, SolvesHelmholtzEquation) {
  const double h = 1e-4;
  for (const Mode p : {Mode{2, 1}, Mode{4, 3}, Mode{6, 1}}) {
    const double lambda = p.m * p.m + p.n * p.n;
    for (double x : {1.0, 2.0, 2.9}) {
      const double y = 0.4 * x;
      const auto f = [&](double a, double b) { return eval_isosceles(p.m, p.n, a, b); };
      const double c = f(x, y);
      const double lap = (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4 * c) /
                         (h * h);
      EXPECT_NEAR(lap + lambda * c, 0.0, 1e-5 * lambda * 2.0);
    }
  }
}

}  // namespace
}  // namespace courant
