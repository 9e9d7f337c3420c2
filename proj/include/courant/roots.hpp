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

#ifndef COURANT_ROOTS_HPP_
#define COURANT_ROOTS_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace courant {

struct RootOptions {
  int samples = 4096;
  double xtol = 1e-13;
  // Endpoints are sampled and accepted when |f| is below zero_tol * max|f|.
  bool include_endpoints = false;
  // A derivative zero counts as a double root when |f| <= double_tol * max|f|.
  double double_tol = 1e-9;
  double zero_tol = 1e-12;
  // Brackets whose two samples are both below noise_tol * max|f| are
  // rounding flicker near a high-order zero, not roots.
  double noise_tol = 1e-10;
};

struct Root {
  double x;
  int multiplicity;  // 1 for a sign change, 2 for a touching zero
};

using RealFn = std::function<double(double)>;

// Bisects a bracket [a, b] with f(a) f(b) < 0 down to xtol.
inline double bisect(const RealFn& f, double a, double b, double fa,
                     double xtol) {
  while (b - a > xtol) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// One Newton step, kept only if it stays in the bracket and lowers |f|.
inline double newton_polish(const RealFn& f, const RealFn& df, double x,
                            double a, double b) {
  const double d = df(x);
  if (d == 0.0 || !std::isfinite(d)) return x;
  const double y = x - f(x) / d;
  if (y < a || y > b || !std::isfinite(y)) return x;
  return std::abs(f(y)) <= std::abs(f(x)) ? y : x;
}

namespace detail {

inline std::vector<double> sample_points(double lo, double hi,
                                         const RootOptions& opt) {
  std::vector<double> xs(opt.samples);
  if (opt.include_endpoints) {
    for (int k = 0; k < opt.samples; ++k) {
      xs[k] = lo + (hi - lo) * k / (opt.samples - 1);
    }
  } else {
    const double h = (hi - lo) / opt.samples;
    for (int k = 0; k < opt.samples; ++k) xs[k] = lo + (k + 0.5) * h;
  }
  return xs;
}

// Sign-change roots of g on the sample lattice.
inline std::vector<double> bracketed(const RealFn& g, const RealFn* dg,
                                     const std::vector<double>& xs,
                                     const std::vector<double>& gs,
                                     double xtol, double noise) {
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    if (gs[k] == 0.0) {
      out.push_back(xs[k]);
      continue;
    }
    if (std::max(std::abs(gs[k]), std::abs(gs[k + 1])) < noise) continue;
    if (gs[k + 1] != 0.0 && (gs[k] < 0.0) != (gs[k + 1] < 0.0)) {
      double r = bisect(g, xs[k], xs[k + 1], gs[k], xtol);
      if (dg != nullptr) r = newton_polish(g, *dg, r, xs[k], xs[k + 1]);
      out.push_back(r);
    }
  }
  if (!gs.empty() && gs.back() == 0.0) out.push_back(xs.back());
  return out;
}

}  // namespace detail

// All zeros of f on (lo, hi) or [lo, hi]: bracketed sign changes refined by
// bisection and a Newton polish, plus touching zeros found as zeros of df
// where f is negligible.
inline std::vector<Root> find_roots(const RealFn& f, const RealFn& df,
                                    double lo, double hi,
                                    const RootOptions& opt = {}) {
  if (!(hi > lo) || opt.samples < 2) throw std::invalid_argument("bad interval");
  const std::vector<double> xs = detail::sample_points(lo, hi, opt);
  std::vector<double> fs(xs.size()), ds(xs.size());
  double fmax = 0.0, dmax = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    fs[k] = f(xs[k]);
    ds[k] = df(xs[k]);
    fmax = std::max(fmax, std::abs(fs[k]));
    dmax = std::max(dmax, std::abs(ds[k]));
  }
  std::vector<Root> roots;
  if (fmax == 0.0) return roots;
  if (opt.include_endpoints) {
    if (std::abs(fs.front()) <= opt.zero_tol * fmax) fs.front() = 0.0;
    if (std::abs(fs.back()) <= opt.zero_tol * fmax) fs.back() = 0.0;
  }
  for (double r : detail::bracketed(f, &df, xs, fs, opt.xtol, opt.noise_tol * fmax)) {
    roots.push_back({r, 1});
  }
  const auto near_simple = [&](double x) {
    return std::any_of(roots.begin(), roots.end(), [x](const Root& r) {
      return std::abs(r.x - x) < 1e-6;
    });
  };
  std::vector<Root> touching;
  for (double r : detail::bracketed(df, nullptr, xs, ds, opt.xtol, opt.noise_tol * dmax)) {
    if (std::abs(f(r)) <= opt.double_tol * fmax && !near_simple(r)) {
      touching.push_back({r, 2});
    }
  }
  roots.insert(roots.end(), touching.begin(), touching.end());
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return a.x < b.x; });
  return roots;
}

inline std::vector<double> root_locations(const std::vector<Root>& roots) {
  std::vector<double> out;
  out.reserve(roots.size());
  for (const Root& r : roots) out.push_back(r.x);
  return out;
}

// Polynomial with coefficients from the highest degree down.
struct Polynomial {
  std::vector<double> coeffs;

  double operator()(double x) const {
    double v = 0.0;
    for (double c : coeffs) v = v * x + c;
    return v;
  }

  Polynomial derivative() const {
    Polynomial d;
    const int deg = static_cast<int>(coeffs.size()) - 1;
    for (int k = 0; k < deg; ++k) d.coeffs.push_back(coeffs[k] * (deg - k));
    if (d.coeffs.empty()) d.coeffs.push_back(0.0);
    return d;
  }
};

// Real roots in [-1, 1], each reported once.
inline std::vector<double> polynomial_roots_in_unit_interval(
    const Polynomial& p) {
  const Polynomial dp = p.derivative();
  RootOptions opt;
  opt.include_endpoints = true;
  std::vector<double> out = root_locations(find_roots(
      [&p](double x) { return p(x); }, [&dp](double x) { return dp(x); },
      -1.0, 1.0, opt));
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-9; }),
            out.end());
  return out;
}

}  // namespace courant

#endif  // COURANT_ROOTS_HPP_
