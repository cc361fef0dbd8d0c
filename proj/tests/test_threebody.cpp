// Copyright 2026 The compsum Authors
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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "compsum/threebody.hpp"

namespace compsum {
namespace {

double max_position_error(const BodyState& a, const BodyState& b) {
  double d = 0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::hypot(a.r[i].x - b.r[i].x, a.r[i].y - b.r[i].y));
  return d;
}

TEST(ThreeBody, InitialStateIsCentredWithZeroMomentum) {
  const BodyState s = figure_eight_initial_state();
  EXPECT_DOUBLE_EQ(s.r[0].x + s.r[1].x + s.r[2].x, 0.0);
  EXPECT_DOUBLE_EQ(s.r[0].y + s.r[1].y + s.r[2].y, 0.0);
  EXPECT_DOUBLE_EQ(s.v[0].x + s.v[1].x + s.v[2].x, 0.0);
  EXPECT_DOUBLE_EQ(s.v[0].y + s.v[1].y + s.v[2].y, 0.0);
  EXPECT_EQ(s.r[0].x, -0.97000436);
  EXPECT_EQ(s.v[1].y, 0.86473146);
}

TEST(ThreeBody, AccelerationsOfACollinearConfiguration) {
  // Bodies at -1, 0, 1 on the x axis: the outer ones feel 1 + 1/4 inward.
  const auto a = accelerations({Vec2{-1, 0}, Vec2{0, 0}, Vec2{1, 0}});
  EXPECT_DOUBLE_EQ(a[0].x, 1.25);
  EXPECT_DOUBLE_EQ(a[1].x, 0.0);
  EXPECT_DOUBLE_EQ(a[2].x, -1.25);
  EXPECT_EQ(a[0].y, 0.0);
}

// One symplectic Euler step evaluated independently in long double.
TEST(ThreeBody, SingleStepMatchesExtendedPrecisionOracle) {
  const BodyState init = figure_eight_initial_state();
  const long double h = 1.0L / 2048;
  long double r[3][2], v[3][2];
  for (int i = 0; i < 3; ++i) {
    r[i][0] = init.r[i].x + h * init.v[i].x;
    r[i][1] = init.r[i].y + h * init.v[i].y;
  }
  for (int i = 0; i < 3; ++i) {
    long double ax = 0, ay = 0;
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const long double dx = r[j][0] - r[i][0], dy = r[j][1] - r[i][1];
      const long double d3 = std::pow(dx * dx + dy * dy, 1.5L);
      ax += dx / d3;
      ay += dy / d3;
    }
    v[i][0] = init.v[i].x + h * ax;
    v[i][1] = init.v[i].y + h * ay;
  }
  for (Precision p : {Precision::binary32, Precision::binary64}) {
    for (Algorithm alg : {Algorithm::plain, Algorithm::double6op}) {
      SimSpec spec;
      spec.precision = p;
      spec.compensation = alg;
      const SimResult res = simulate_steps(spec, init, 1);
      const double tol = p == Precision::binary32 ? 1e-6 : 1e-14;
      for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(res.final_state.r[i].x, static_cast<double>(r[i][0]), tol);
        EXPECT_NEAR(res.final_state.r[i].y, static_cast<double>(r[i][1]), tol);
        EXPECT_NEAR(res.final_state.v[i].x, static_cast<double>(v[i][0]), tol);
        EXPECT_NEAR(res.final_state.v[i].y, static_cast<double>(v[i][1]), tol);
      }
    }
  }
}

TEST(ThreeBody, SymmetricRestConfigurationKeepsZeroMomentum) {
  BodyState s{};
  s.r = {Vec2{-1, 0}, Vec2{0, 0}, Vec2{1, 0}};
  SimSpec spec;
  spec.precision = Precision::binary64;
  spec.compensation = Algorithm::plain;
  spec.track_reference = false;
  const SimResult res = simulate_steps(spec, s, 1);
  const auto& v = res.final_state.v;
  EXPECT_EQ(v[0].x + v[1].x + v[2].x, 0.0);
  EXPECT_EQ(v[0].y + v[1].y + v[2].y, 0.0);
  EXPECT_EQ(v[0].x, 1.25 / 2048);
  EXPECT_EQ(res.final_state.r[0].x, -1.0);  // positions move only from the next step on
}

TEST(ThreeBody, StepCount) {
  SimSpec spec;
  spec.h = 1.0 / 2048;
  spec.periods = 1;
  EXPECT_EQ(step_count(spec), 12955u);
  spec.periods = 100;
  EXPECT_EQ(step_count(spec), 1295544u);
}

// Symplectic Euler is first order, so the return error after one period
// shrinks linearly with h: about 1.3e-3 at h = 2^-11, within 1e-3 from
// h = 2^-12 on. The linear decay shows the residual is discretization error
// rather than a wrong initial state.
TEST(ThreeBody, ReturnsNearItsStartAfterOnePeriod) {
  SimSpec spec;
  spec.precision = Precision::binary64;
  spec.compensation = Algorithm::double6op;
  spec.track_reference = false;
  double prev = 0;
  for (int k = 11; k <= 13; ++k) {
    spec.h = std::ldexp(1.0, -k);
    const double err = max_position_error(simulate_threebody(spec).final_state,
                                          figure_eight_initial_state());
    if (k >= 12) {
      EXPECT_LT(err, 1e-3) << "h=2^-" << k;
    }
    if (k > 11) {
      EXPECT_GT(prev / err, 1.6) << "h=2^-" << k;
      EXPECT_LT(prev / err, 3.2) << "h=2^-" << k;
    }
    prev = err;
  }
}

TEST(ThreeBody, CompensationReducesDeviationFromReference) {
  SimSpec spec;
  spec.precision = Precision::binary32;
  spec.periods = 2;
  spec.compensation = Algorithm::plain;
  const double plain = simulate_threebody(spec).max_deviation;
  spec.compensation = Algorithm::comp6op;
  const double comp = simulate_threebody(spec).max_deviation;
  spec.compensation = Algorithm::double6op;
  const double dbl = simulate_threebody(spec).max_deviation;
  EXPECT_GT(plain, 0.0);
  EXPECT_LT(comp, plain);
  EXPECT_LT(dbl, plain);
}

TEST(ThreeBody, ReferenceRunAgainstItselfHasNoDeviation) {
  SimSpec spec;
  spec.precision = Precision::binary64;
  spec.compensation = Algorithm::double6op;
  spec.periods = 0.1;
  EXPECT_EQ(simulate_threebody(spec).max_deviation, 0.0);
}

TEST(ThreeBody, CoincidentBodiesRaise) {
  BodyState s{};
  s.r = {Vec2{0.5, 0}, Vec2{0.5, 0}, Vec2{-1, 0}};
  SimSpec spec;
  spec.track_reference = false;
  try {
    simulate_steps(spec, s, 3);
    FAIL() << "expected SimulationError";
  } catch (const SimulationError& e) {
    EXPECT_EQ(e.step(), 1u);
  }
}

TEST(ThreeBody, InvalidSpecs) {
  SimSpec spec;
  spec.h = 0;
  EXPECT_THROW(simulate_threebody(spec), std::invalid_argument);
  spec.h = -1;
  EXPECT_THROW(simulate_threebody(spec), std::invalid_argument);
  spec.h = 1.0 / 2048;
  spec.periods = 0;
  EXPECT_THROW(simulate_threebody(spec), std::invalid_argument);
}

TEST(ThreeBody, SamplesSegmentsAndOutput) {
  SimSpec spec;
  spec.periods = 2;
  spec.sample_stride = 1000;
  spec.segments = 2;
  spec.plot_stride = 100;
  spec.track_reference = false;
  const SimResult res = simulate_threebody(spec);
  EXPECT_EQ(res.samples.front().step, 0u);
  EXPECT_EQ(res.samples.size(), res.steps / 1000 + 1);
  ASSERT_EQ(res.segment_paths.size(), 2u);
  EXPECT_GT(res.segment_paths[0].size(), 100u);
  EXPECT_GT(res.segment_paths[1].size(), 100u);

  std::ostringstream csv;
  write_trajectory(csv, {res.samples.front()});
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "step,body,rx,ry,vx,vy");
  EXPECT_NE(csv.str().find("0,1,-0.970004"), std::string::npos);

  const std::string svg = orbit_svg(res.segment_paths[0], "segment <1>");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("segment &lt;1&gt;"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace compsum
