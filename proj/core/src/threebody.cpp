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

#include "compsum/threebody.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace compsum {

namespace {

// Acceleration in the working precision T, plain arithmetic.
template <class T>
std::array<std::array<T, 2>, 3> accel_t(const std::array<std::array<T, 2>, 3>& r) {
  std::array<std::array<T, 2>, 3> a{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const T dx = r[j][0] - r[i][0];
      const T dy = r[j][1] - r[i][1];
      const T d2 = dx * dx + dy * dy;
      const T d3 = d2 * std::sqrt(d2);
      a[i][0] += dx / d3;
      a[i][1] += dy / d3;
    }
  }
  return a;
}

// The stepper in precision T: 12 accumulators, slot (body, component) with
// components 0,1 = position x,y and 2,3 = velocity x,y.
template <class T>
class Stepper {
 public:
  Stepper(Algorithm algorithm, const BodyState& init, T h) : h_(h) {
    acc_.reserve(12);
    for (int i = 0; i < 3; ++i) {
      const double c[4] = {init.r[i].x, init.r[i].y, init.v[i].x, init.v[i].y};
      for (int k = 0; k < 4; ++k) {
        acc_.emplace_back(algorithm);
        acc_.back().add(static_cast<T>(c[k]));
      }
    }
  }

  T get(int body, int comp) const { return slot(body, comp).finish().s; }

  void step(std::uint64_t index) {
    // Positions first, with the velocities of the current step...
    for (int i = 0; i < 3; ++i) {
      const T vx = get(i, 2), vy = get(i, 3);
      slot(i, 0).add(h_ * vx);
      slot(i, 1).add(h_ * vy);
    }
    // ...then velocities with accelerations at the new positions.
    std::array<std::array<T, 2>, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = {get(i, 0), get(i, 1)};
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (r[i][0] == r[j][0] && r[i][1] == r[j][1]) {
          throw SimulationError("bodies " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " coincide",
                                index);
        }
      }
    }
    const auto a = accel_t<T>(r);
    for (int i = 0; i < 3; ++i) {
      if (!std::isfinite(a[i][0]) || !std::isfinite(a[i][1])) {
        throw SimulationError("non-finite acceleration", index);
      }
      slot(i, 2).add(h_ * a[i][0]);
      slot(i, 3).add(h_ * a[i][1]);
    }
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 4; ++k) {
        if (!std::isfinite(get(i, k))) throw SimulationError("non-finite state", index);
      }
    }
  }

  BodyState state() const {
    BodyState s;
    for (int i = 0; i < 3; ++i) {
      s.r[i] = {static_cast<double>(get(i, 0)), static_cast<double>(get(i, 1))};
      s.v[i] = {static_cast<double>(get(i, 2)), static_cast<double>(get(i, 3))};
    }
    return s;
  }

 private:
  using Acc = Accumulator<HostArithmetic<T>>;
  Acc& slot(int body, int comp) { return acc_[static_cast<std::size_t>(body * 4 + comp)]; }
  const Acc& slot(int body, int comp) const {
    return acc_[static_cast<std::size_t>(body * 4 + comp)];
  }

  T h_;
  std::vector<Acc> acc_;
};

double max_distance(const BodyState& a, const BodyState& b) {
  double d = 0;
  for (int i = 0; i < 3; ++i) {
    d = std::max(d, std::hypot(a.r[i].x - b.r[i].x, a.r[i].y - b.r[i].y));
  }
  return d;
}

// The state as the working precision sees it, so the reference starts from
// exactly the same numbers.
BodyState quantize(const BodyState& s, Precision p) {
  if (p == Precision::binary64) return s;
  BodyState q = s;
  for (int i = 0; i < 3; ++i) {
    q.r[i] = {static_cast<float>(s.r[i].x), static_cast<float>(s.r[i].y)};
    q.v[i] = {static_cast<float>(s.v[i].x), static_cast<float>(s.v[i].y)};
  }
  return q;
}

template <class T>
SimResult run(const SimSpec& spec, const BodyState& initial, std::uint64_t steps) {
  Stepper<T> sim(spec.compensation, initial, static_cast<T>(spec.h));
  std::optional<Stepper<double>> ref;
  if (spec.track_reference) {
    ref.emplace(Algorithm::double6op, quantize(initial, spec.precision), spec.h);
  }

  SimResult result;
  result.steps = steps;
  const std::uint64_t period_steps = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::llround(spec.period_length / spec.h)));
  const int segments = spec.segments;
  const std::uint64_t segment_len = segments > 0 ? std::max<std::uint64_t>(1, steps / segments) : 0;
  result.segment_paths.resize(static_cast<std::size_t>(std::max(segments, 0)));
  const std::uint64_t plot_stride = std::max<std::uint64_t>(1, spec.plot_stride);

  auto record = [&](std::uint64_t k, const BodyState& st) {
    if (spec.sample_stride > 0 && k % spec.sample_stride == 0) {
      result.samples.push_back({k, st});
    }
    if (segments > 0) {
      const std::uint64_t seg = std::min<std::uint64_t>(k / segment_len, segments - 1);
      const std::uint64_t offset = k - seg * segment_len;
      if (offset <= period_steps && offset % plot_stride == 0) {
        result.segment_paths[seg].push_back({st.r[0], st.r[1], st.r[2]});
      }
    }
  };

  record(0, sim.state());
  for (std::uint64_t k = 1; k <= steps; ++k) {
    sim.step(k);
    const BodyState st = sim.state();
    if (ref) {
      ref->step(k);
      result.max_deviation = std::max(result.max_deviation, max_distance(st, ref->state()));
    }
    record(k, st);
  }
  result.final_state = sim.state();
  return result;
}

}  // namespace

BodyState figure_eight_initial_state() {
  BodyState s;
  s.r[0] = {-0.97000436, 0.24308753};
  s.r[1] = {0.0, 0.0};
  s.r[2] = {0.97000436, -0.24308753};
  s.v[1] = {0.93240737, 0.86473146};
  s.v[0] = {-0.93240737 / 2, -0.86473146 / 2};
  s.v[2] = s.v[0];
  return s;
}

std::array<Vec2, 3> accelerations(const std::array<Vec2, 3>& r) {
  std::array<std::array<double, 2>, 3> rr{};
  for (int i = 0; i < 3; ++i) rr[i] = {r[i].x, r[i].y};
  const auto a = accel_t<double>(rr);
  return {Vec2{a[0][0], a[0][1]}, Vec2{a[1][0], a[1][1]}, Vec2{a[2][0], a[2][1]}};
}

std::uint64_t step_count(const SimSpec& spec) {
  return static_cast<std::uint64_t>(std::llround(spec.periods * spec.period_length / spec.h));
}

SimResult simulate_steps(const SimSpec& spec, const BodyState& initial, std::uint64_t steps) {
  if (!(spec.h > 0) || !std::isfinite(spec.h)) {
    throw std::invalid_argument("threebody: h must be positive");
  }
  if (spec.precision == Precision::binary32) return run<float>(spec, initial, steps);
  return run<double>(spec, initial, steps);
}

SimResult simulate_threebody(const SimSpec& spec, const BodyState& initial) {
  if (!(spec.periods > 0)) throw std::invalid_argument("threebody: periods must be positive");
  return simulate_steps(spec, initial, step_count(spec));
}

void write_trajectory(std::ostream& os, const std::vector<TrajectorySample>& samples, char sep) {
  os << "step" << sep << "body" << sep << "rx" << sep << "ry" << sep << "vx" << sep << "vy\n";
  char buf[192];
  for (const auto& s : samples) {
    for (int i = 0; i < 3; ++i) {
      std::snprintf(buf, sizeof buf, "%llu%c%d%c%.9g%c%.9g%c%.9g%c%.9g",
                    static_cast<unsigned long long>(s.step), sep, i + 1, sep, s.state.r[i].x, sep,
                    s.state.r[i].y, sep, s.state.v[i].x, sep, s.state.v[i].y);
      os << buf << '\n';
    }
  }
}

std::string orbit_svg(const std::vector<std::array<Vec2, 3>>& path, const std::string& title) {
  constexpr double kW = 600, kH = 400, kXmax = 1.5, kYmax = 1.0;
  auto px = [&](double x) { return (x + kXmax) / (2 * kXmax) * kW; };
  auto py = [&](double y) { return (kYmax - y) / (2 * kYmax) * kH; };
  static constexpr const char* kColors[3] = {"#c0392b", "#27ae60", "#2c6fbb"};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH + 30
     << "\" viewBox=\"0 0 " << kW << ' ' << kH + 30 << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << kW << "\" y2=\"" << py(0)
     << "\" stroke=\"#ddd\"/>\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << kH
     << "\" stroke=\"#ddd\"/>\n";
  char buf[64];
  for (int b = 0; b < 3; ++b) {
    os << "<polyline fill=\"none\" stroke=\"" << kColors[b] << "\" stroke-width=\"1\" points=\"";
    for (const auto& p : path) {
      // Clamp so a run-away orbit still renders on the fixed axes.
      const double x = std::clamp(px(p[b].x), -10.0, kW + 10);
      const double y = std::clamp(py(p[b].y), -10.0, kH + 10);
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", x, y);
      os << buf;
    }
    os << "\"/>\n";
  }
  std::string escaped;
  for (char c : title) {
    if (c == '<') escaped += "&lt;";
    else if (c == '>') escaped += "&gt;";
    else if (c == '&') escaped += "&amp;";
    else escaped += c;
  }
  os << "<text x=\"8\" y=\"" << kH + 20 << "\" font-family=\"sans-serif\" font-size=\"13\">"
     << escaped << "</text>\n</svg>\n";
  return os.str();
}

}  // namespace compsum
