// Copyright 2026 The rydgraph Authors
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

#ifndef RYDGRAPH_PULSES_H
#define RYDGRAPH_PULSES_H

#include <iosfwd>
#include <string>
#include <vector>

namespace rydgraph {

enum class Shape { square, triangle };
enum class Stage { prep, hold, measure };

const char *shape_name(Shape s);
const char *stage_name(Stage s);
Shape parse_shape(const std::string &s);
Stage parse_stage(const std::string &s);

// One drive segment. The triangle envelope peaks at the segment midpoint.
struct PulseSegment {
    double duration = 0;   // us
    Shape shape = Shape::square;
    double peak_rabi = 0;  // rad/us
    double phase = 0;      // rotation axis angle in the x-y plane
    Stage stage = Stage::hold;

    double omega_at(double t_local) const;
};

double rotation_angle(const PulseSegment &seg);

// Segment with a prescribed net rotation. Negative angles turn the axis by pi
// so the envelope stays non-negative.
PulseSegment rotation_segment(Stage stage, Shape shape, double duration, double angle, double axis_phase);
PulseSegment hold_segment(double duration);

struct PulseSchedule {
    std::vector<PulseSegment> segments;

    double total_duration() const;
    double omega_at(double t) const;
    void validate() const;
};

struct ScheduleOptions {
    double prep_width;
    double measure_width;
    Shape shape = Shape::triangle;
};

inline constexpr ScheduleOptions kBellWindows{0.2, 0.5, Shape::triangle};
inline constexpr ScheduleOptions kGraphWindows{0.2, 0.2, Shape::triangle};

// Prep pulse, a hold of cz_time(d), then the measurement pulse.
PulseSchedule bell_schedule(double d, const ScheduleOptions &opt = kBellWindows);
PulseSchedule graph_schedule(double d, const ScheduleOptions &opt = kGraphWindows);

// "label shape duration_us omega_max phi" per line.
PulseSchedule read_schedule(std::istream &in);
void write_schedule(std::ostream &out, const PulseSchedule &schedule);

}  // namespace rydgraph

#endif
