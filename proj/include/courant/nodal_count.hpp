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

#ifndef COURANT_NODAL_COUNT_HPP_
#define COURANT_NODAL_COUNT_HPP_

// Nodal-domain counting on a sampled sign lattice.
//
// Samples sit on a lattice of spacing 1/(2N) (pi/(2N) for the
// right-isosceles triangle); counting runs on the even sub-lattice of
// spacing 1/N. Two neighbouring even points are joined when both ends and
// the odd midpoint between them share a nonzero sign. In alcove
// coordinates the neighbours are the six nearest points of the triangular
// lattice, offsets +-(1,0), +-(0,1), +-(1,1). The square grid of the
// right-isosceles triangle uses the four axis neighbours.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "courant/eigenfunctions.hpp"
#include "courant/geometry.hpp"
#include "courant/nodal.hpp"
#include "courant/parallel.hpp"
#include "courant/screening.hpp"
#include "courant/spectrum.hpp"

namespace courant {

// Closed-domain lattice rows stored compactly: row i holds j in
// [jlo[i], jhi[i]].
class GridLayout {
 public:
  GridLayout(DomainKind d, int resolution) : domain_(d), resolution_(resolution) {
    if (d == DomainKind::Torus) {
      throw std::invalid_argument("no nodal grid for the torus");
    }
    const int f = 2 * resolution;  // lattice steps per unit
    step_ = d == DomainKind::RightIsosceles ? kPi / f : 1.0 / f;
    const int rows = d == DomainKind::RightIsosceles ? f + 1 : (2 * f) / 3 + 2;
    jlo_.resize(rows);
    jhi_.resize(rows);
    offset_.resize(rows + 1, 0);
    for (int i = 0; i < rows; ++i) {
      int lo = 0, hi = -1;
      if (d == DomainKind::RightIsosceles) {
        lo = 0;
        hi = i;
      } else {
        // t >= s/2, t <= 2s, t <= 1 - s, and t <= s on the half triangle.
        lo = (i + 1) / 2;
        hi = std::min(2 * i, f - i);
        if (d == DomainKind::Hemiequilateral) hi = std::min(hi, i);
      }
      jlo_[i] = lo;
      jhi_[i] = hi;
      offset_[i + 1] = offset_[i] + static_cast<std::size_t>(std::max(hi - lo + 1, 0));
    }
  }

  DomainKind domain() const { return domain_; }
  int resolution() const { return resolution_; }
  int rows() const { return static_cast<int>(jlo_.size()); }
  int jlo(int i) const { return jlo_[i]; }
  int jhi(int i) const { return jhi_[i]; }
  std::size_t size() const { return offset_.back(); }
  double step() const { return step_; }

  bool contains(int i, int j) const {
    return i >= 0 && i < rows() && j >= jlo_[i] && j <= jhi_[i];
  }
  std::size_t index(int i, int j) const {
    return offset_[i] + static_cast<std::size_t>(j - jlo_[i]);
  }
  // Alcove (s,t), or Cartesian (x,y) for the right-isosceles triangle.
  double u(int i) const { return i * step_; }
  double v(int j) const { return j * step_; }

  bool strictly_inside(int i, int j) const {
    if (domain_ == DomainKind::RightIsosceles) {
      return in_domain(domain_, CartesianPoint{u(i), v(j)}, Closure::Strict);
    }
    return in_domain(domain_, AlcovePoint{u(i), v(j)}, Closure::Strict);
  }

 private:
  DomainKind domain_;
  int resolution_;
  double step_ = 0.0;
  std::vector<int> jlo_, jhi_;
  std::vector<std::size_t> offset_;
};

// Signs of a sampled eigenfunction; 0 marks the zero band and points
// outside the open domain.
struct SignGrid {
  const GridLayout* layout = nullptr;
  std::vector<std::int8_t> values;
  std::vector<std::uint8_t> domain_mask;

  int resolution() const { return layout->resolution(); }
  std::int8_t sign(int i, int j) const {
    return layout->contains(i, j) ? values[layout->index(i, j)] : 0;
  }
};

inline constexpr double kZeroBand = 1e-9;

struct NodalCount {
  int positive = 0;
  int negative = 0;
  int total() const { return positive + negative; }
};

namespace detail {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

inline NodalCount count_components(const SignGrid& g) {
  const GridLayout& L = *g.layout;
  const bool square = L.domain() == DomainKind::RightIsosceles;
  detail::DisjointSet ds(L.size());
  struct Offset {
    int di, dj;
  };
  const Offset tri[] = {{1, 0}, {0, 1}, {1, 1}};
  const Offset sq[] = {{1, 0}, {0, 1}};
  const int nbrs = square ? 2 : 3;
  for (int i = 0; i < L.rows(); i += 2) {
    for (int j = L.jlo(i) + (L.jlo(i) & 1); j <= L.jhi(i); j += 2) {
      const std::int8_t s = g.sign(i, j);
      if (s == 0) continue;
      for (int k = 0; k < nbrs; ++k) {
        const Offset o = square ? sq[k] : tri[k];
        if (g.sign(i + 2 * o.di, j + 2 * o.dj) == s &&
            g.sign(i + o.di, j + o.dj) == s) {
          ds.unite(L.index(i, j), L.index(i + 2 * o.di, j + 2 * o.dj));
        }
      }
    }
  }
  NodalCount out;
  for (int i = 0; i < L.rows(); i += 2) {
    for (int j = L.jlo(i) + (L.jlo(i) & 1); j <= L.jhi(i); j += 2) {
      const std::int8_t s = g.sign(i, j);
      const std::size_t id = L.index(i, j);
      if (s != 0 && ds.find(id) == id) (s > 0 ? out.positive : out.negative)++;
    }
  }
  return out;
}

// Samples one eigenspace on a layout once; any member of the family is
// then a cheap linear combination.
class FieldSampler {
 public:
  FieldSampler(DomainKind d, Mode p, int resolution)
      : layout_(d, resolution), mode_(p) {
    if (d == DomainKind::Equilateral) {
      if (!(p.m >= 1 && p.n >= 1)) throw std::invalid_argument("bad mode");
    } else if (!admissible(d, p)) {
      throw std::invalid_argument("mode not admissible for the domain");
    }
    const std::size_t n = layout_.size();
    a_.assign(n, 0.0);
    if (d == DomainKind::Equilateral) b_.assign(n, 0.0);
    mask_.assign(n, 0);
    parallel_for(layout_.rows(), [this, d, p](int i) {
      for (int j = layout_.jlo(i); j <= layout_.jhi(i); ++j) {
        const std::size_t id = layout_.index(i, j);
        mask_[id] = layout_.strictly_inside(i, j) ? 1 : 0;
        const double u = layout_.u(i), v = layout_.v(j);
        if (d == DomainKind::RightIsosceles) {
          a_[id] = eval_isosceles(p.m, p.n, u, v);
        } else {
          const CosSinPair cs = eval_cs(p.m, p.n, u, v);
          a_[id] = cs.c.value;
          if (!b_.empty()) b_[id] = cs.s.value;
        }
      }
    });
  }

  const GridLayout& layout() const { return layout_; }

  // theta only matters on the equilateral triangle.
  SignGrid signs(double theta) const {
    const std::size_t n = layout_.size();
    std::vector<double> vals(n);
    const double c = std::cos(theta), s = std::sin(theta);
    double vmax = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      vals[k] = b_.empty() ? a_[k] : c * a_[k] + s * b_[k];
      if (mask_[k]) vmax = std::max(vmax, std::abs(vals[k]));
    }
    const double band = kZeroBand * vmax;
    SignGrid g{&layout_, std::vector<std::int8_t>(n, 0), mask_};
    for (std::size_t k = 0; k < n; ++k) {
      if (!mask_[k]) continue;
      g.values[k] = vals[k] > band ? 1 : (vals[k] < -band ? -1 : 0);
    }
    return g;
  }

  NodalCount count(double theta) const { return count_components(signs(theta)); }

 private:
  GridLayout layout_;
  Mode mode_;
  std::vector<double> a_, b_;
  std::vector<std::uint8_t> mask_;
};

struct NodalReport {
  EigenfunctionHandle handle;
  int resolution = 0;
  int domain_count = 0;
  int positive_components = 0;
  int negative_components = 0;
  bool stable = false;
};

// The theta actually sampled: simple equilateral eigenvalues (m = n) are
// spanned by S alone since C vanishes identically there.
inline double effective_theta(const EigenfunctionHandle& h) {
  if (h.domain == DomainKind::Equilateral && h.mode.m == h.mode.n) {
    return kPi / 2.0;
  }
  return h.theta;
}

inline NodalReport count_nodal_domains(const EigenfunctionHandle& h,
                                       int resolution) {
  if (resolution < 64) throw std::invalid_argument("resolution must be >= 64");
  const double theta = effective_theta(h);
  const NodalCount base = FieldSampler(h.domain, h.mode, resolution).count(theta);
  const NodalCount fine =
      FieldSampler(h.domain, h.mode, 2 * resolution).count(theta);
  return {h,
          resolution,
          base.total(),
          base.positive,
          base.negative,
          base.positive == fine.positive && base.negative == fine.negative};
}

// Angles sampled for a two-dimensional eigenspace. The symmetry group acts
// on theta, and [0, pi/6] is a fundamental interval unless 2m + n is a
// multiple of 3, where it grows to [0, pi/2].
inline std::vector<double> sweep_angles(Mode p, int samples = 64) {
  const double top = (2 * p.m + p.n) % 3 == 0 ? kPi / 2.0 : kPi / 6.0;
  std::vector<double> out;
  for (int k = 0; k < samples; ++k) out.push_back(top * k / (samples - 1));
  if (p == kPair23) out.push_back(bifurcation_angle().theta_c);
  return out;
}

struct VerdictEntry {
  int index = 0;
  bool sharp = false;
  int max_domains = 0;
  bool stable = true;
};

inline std::vector<VerdictEntry> courant_sharp_verdict(DomainKind d,
                                                       int resolution = 512) {
  const std::vector<int> candidates = candidate_indices(d);
  std::vector<VerdictEntry> out;
  if (d == DomainKind::Torus) {
    // Constants have one nodal domain; a second eigenfunction has two.
    for (int idx : candidates) {
      if (idx > 2) throw std::runtime_error("torus candidate beyond index 2");
      out.push_back({idx, true, idx, true});
    }
    return out;
  }
  const std::vector<SpectrumEntry> spectrum =
      enumerate_spectrum(d, candidates.empty() ? 1 : candidates.back());
  for (int idx : candidates) {
    const auto it = std::find_if(spectrum.begin(), spectrum.end(),
                                 [idx](const SpectrumEntry& e) {
                                   return e.min_index == idx;
                                 });
    if (it == spectrum.end()) throw std::logic_error("candidate not in spectrum");
    std::vector<double> thetas{0.0};
    Mode p = it->representative_modes.front();
    if (d == DomainKind::Equilateral) {
      if (it->multiplicity == 2) {
        p = {std::min(p.m, p.n), std::max(p.m, p.n)};
        thetas = sweep_angles(p);
      } else if (it->multiplicity != 1) {
        throw std::runtime_error("eigenspaces beyond dimension 2 unsupported");
      }
    } else if (it->multiplicity != 1) {
      throw std::runtime_error("degenerate eigenvalue unsupported here");
    }
    const FieldSampler coarse(d, p, resolution);
    const FieldSampler fine(d, p, 2 * resolution);
    VerdictEntry v{idx, false, 0, true};
    for (double th : thetas) {
      const double eff = effective_theta({d, p, th});
      const NodalCount a = coarse.count(eff);
      const NodalCount b = fine.count(eff);
      v.max_domains = std::max(v.max_domains, a.total());
      if (a.total() != b.total()) v.stable = false;
    }
    v.sharp = v.max_domains == idx;
    out.push_back(v);
  }
  return out;
}

}  // namespace courant

#endif  // COURANT_NODAL_COUNT_HPP_
