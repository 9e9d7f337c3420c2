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

#ifndef COURANT_TESTS_ORACLES_HPP_
#define COURANT_TESTS_ORACLES_HPP_

// Reference tables and values shared by the unit tests and the acceptance
// binary.

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "courant/spectrum.hpp"

namespace courant::oracle {

struct TableRow {
  std::int64_t normalized;
  int min_index;
  int max_index;
  int multiplicity;
  std::string_view ratio;  // reference digits; empty when absent
};

inline constexpr std::array<TableRow, 11> kTorusTable{{
    {0, 1, 1, 1, ""},
    {1, 2, 7, 6, ""},
    {3, 8, 13, 6, "0.3750000000"},
    {4, 14, 19, 6, "0.2857142857"},
    {7, 20, 31, 12, "0.3500000000"},
    {9, 32, 37, 6, "0.2812500000"},
    {12, 38, 43, 6, "0.3157894737"},
    {13, 44, 55, 12, "0.2954545455"},
    {16, 56, 61, 6, "0.2857142857"},
    {19, 62, 73, 12, "0.3064516129"},
    {21, 74, 85, 12, "0.2837837838"},
}};

inline constexpr std::array<TableRow, 23> kEquilateralTable{{
    {3, 1, 1, 1, "3"},
    {7, 2, 3, 2, "3.5"},
    {12, 4, 4, 1, "3"},
    {13, 5, 6, 2, "2.6000000"},
    {19, 7, 8, 2, "2.7142857"},
    {21, 9, 10, 2, "2.333333333"},
    {27, 11, 11, 1, "2.45454545"},
    {28, 12, 13, 2, "2.333333333"},
    {31, 14, 15, 2, "2.214285714"},
    {37, 16, 17, 2, "2.312500000"},
    {39, 18, 19, 2, "2.166666667"},
    {43, 20, 21, 2, "2.150000000"},
    {48, 22, 22, 1, "2.181818182"},
    {49, 23, 24, 2, "2.130434783"},
    {52, 25, 26, 2, "2.080000000"},
    {57, 27, 28, 2, "2.111111111"},
    {61, 29, 30, 2, "2.103448276"},
    {63, 31, 32, 2, "2.032258065"},
    {67, 33, 34, 2, "2.030303030"},
    {73, 35, 36, 2, "2.085714286"},
    {75, 37, 37, 1, "2.027027027"},
    {76, 38, 39, 2, "2."},
    {79, 40, 41, 2, "1.975000000"},
}};

// True when value rounds to the rounded decimal string.
inline bool matches_rounded(double value, std::string_view digits) {
  const double target = std::stod(std::string(digits));
  const auto dot = digits.find('.');
  const int decimals =
      dot == std::string_view::npos ? 0 : static_cast<int>(digits.size() - dot - 1);
  return std::abs(value - target) <= 0.5 * std::pow(10.0, -decimals) + 1e-15;
}

inline constexpr double kThresholdTorus = 0.3985546913;
inline constexpr double kThresholdEquilateral = 2.391328148;
inline constexpr double kThresholdRightIsosceles = 3.681690532;

inline constexpr int kCutoffTorus = 63;
inline constexpr int kCutoffEquilateral = 40;
inline constexpr int kCutoffRightIsosceles = 26;
inline constexpr int kCutoffHemiequilateral = 32;

inline const std::vector<int> kCandidatesTorus{1, 2};
inline const std::vector<int> kCandidatesEquilateral{1, 2, 4, 5, 7, 11};
inline const std::vector<int> kCandidatesRightIsosceles{1, 2, 3, 4, 5, 6, 7, 9, 10};
inline const std::vector<int> kCandidatesHemiequilateral{1, 2, 3, 4, 5, 6, 7, 8, 10};

inline constexpr double kU1C = 0.433595245;
inline constexpr double kXiMinus = -0.9094691258;
inline constexpr double kXiPlus = 0.6638481772;
inline constexpr std::array<double, 3> kEta{0.06784981490, 0.5658979255,
                                            0.7261887036};
inline constexpr double kXi1 = 0.9311441818;
inline constexpr double kMedianZero13 = 0.7699465439;
inline constexpr double kMedianZero23 = 0.5946180472;
inline constexpr double kUb = 0.3912873205;
inline constexpr double kThetaC = 0.3005211736;

struct IsoscelesCount {
  Mode mode;
  int domains;
};

inline constexpr std::array<IsoscelesCount, 9> kIsoscelesCounts{{
    {{2, 1}, 1},
    {{3, 1}, 2},
    {{3, 2}, 2},
    {{4, 1}, 2},
    {{4, 2}, 4},
    {{4, 3}, 3},
    {{5, 1}, 4},
    {{5, 3}, 4},
    {{6, 1}, 3},
}};

inline const std::vector<int> kSharpTorus{1, 2};
inline const std::vector<int> kSharpEquilateral{1, 2, 4};
inline const std::vector<int> kSharpRightIsosceles{1, 2};
inline const std::vector<int> kSharpHemiequilateral{1, 2};

}  // namespace courant::oracle

#endif  // COURANT_TESTS_ORACLES_HPP_
