// Copyright 2026 The cohgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "cohgen/golden_section.hpp"

using namespace cohgen;

TEST_CASE("golden_section_maximize finds a parabola peak") {
  const auto f = [](double x) { return -(x - 0.3) * (x - 0.3) + 2.0; };
  const ScalarOptimum opt = golden_section_maximize(f, -1.0, 1.0, 1e-10);
  CHECK(opt.x == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(opt.value == doctest::Approx(2.0));
  CHECK(opt.iterations > 10);
}

TEST_CASE("golden_section_maximize handles a peak at the boundary") {
  const ScalarOptimum opt = golden_section_maximize([](double x) { return x; }, 0.0, 1.0, 1e-12);
  CHECK(opt.x == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("bisect_stationary_point reaches machine precision") {
  const auto df = [](double x) { return std::cos(x); };  // max of sin at pi/2
  const auto x = bisect_stationary_point(df, 1.0, 2.0);
  REQUIRE(x.has_value());
  CHECK(std::abs(*x - M_PI / 2.0) < 1e-15);
  CHECK_FALSE(bisect_stationary_point(df, 2.0, 3.0).has_value());
}
