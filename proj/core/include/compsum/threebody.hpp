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

#pragma once

// Planar equal-mass three-body problem on the figure-eight orbit, integrated
// with symplectic Euler. Each scalar state component (x, y of position and
// velocity, per body) is a running sum over the time steps and is kept by its
// own accumulator, so the summation algorithm is the only thing that differs
// between runs at a given precision.

#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "compsum/stream.hpp"
#include "compsum/summation.hpp"

namespace compsum {

inline constexpr double kFigureEightPeriod = 6.3259;

struct Vec2 {
  double x = 0;
  double y = 0;
};

struct BodyState {
  std::array<Vec2, 3> r;
  std::array<Vec2, 3> v;
};

/// Body 1 at (-0.97000436, 0.24308753), body 3 at its negation, body 2 at
/// the origin; v2 = (0.93240737, 0.86473146), v1 = v3 = -v2 / 2.
BodyState figure_eight_initial_state();

struct SimSpec {
  Precision precision = Precision::binary32;
  double h = 1.0 / 2048;
  double periods = 1;
  double period_length = kFigureEightPeriod;
  Algorithm compensation = Algorithm::plain;
  /// Emit a trajectory sample every `sample_stride` steps (0: none).
  std::uint64_t sample_stride = 0;
  /// Number of plot segments; each plots the first period of its slice.
  int segments = 0;
  /// Plot every `plot_stride`-th step within a plotted period.
  std::uint64_t plot_stride = 16;
  /// Run a binary64 double6op reference in lockstep and track deviation.
  bool track_reference = true;
};

struct TrajectorySample {
  std::uint64_t step;
  BodyState state;
};

struct SimResult {
  std::uint64_t steps = 0;
  BodyState final_state;
  /// max over steps and bodies of |r - r_ref|; 0 without a reference.
  double max_deviation = 0;
  std::vector<TrajectorySample> samples;
  /// Per segment, positions of all three bodies over its first period.
  std::vector<std::vector<std::array<Vec2, 3>>> segment_paths;
};

/// Numerical breakdown (non-finite state or coincident bodies).
class SimulationError : public std::runtime_error {
 public:
  SimulationError(const std::string& what, std::uint64_t step)
      : std::runtime_error(what + " at step " + std::to_string(step)), step_(step) {}
  std::uint64_t step() const { return step_; }

 private:
  std::uint64_t step_;
};

/// Accelerations from positions, unit masses and G = 1, in double.
std::array<Vec2, 3> accelerations(const std::array<Vec2, 3>& r);

/// Number of steps the spec asks for: round(periods * period_length / h).
std::uint64_t step_count(const SimSpec& spec);

/// Throws std::invalid_argument for a non-positive h or periods, or
/// SimulationError on breakdown.
SimResult simulate_threebody(const SimSpec& spec,
                             const BodyState& initial = figure_eight_initial_state());

/// Same, from an arbitrary initial state and for exactly `steps` steps.
SimResult simulate_steps(const SimSpec& spec, const BodyState& initial, std::uint64_t steps);

/// step,body,rx,ry,vx,vy
void write_trajectory(std::ostream& os, const std::vector<TrajectorySample>& samples,
                      char separator = ',');

/// A standalone SVG of one segment's path, on fixed axes [-1.5,1.5]x[-1,1].
std::string orbit_svg(const std::vector<std::array<Vec2, 3>>& path, const std::string& title);

}  // namespace compsum
