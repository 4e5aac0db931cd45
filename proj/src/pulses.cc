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

#include "rydgraph/pulses.h"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rydgraph/errors.h"
#include "rydgraph/geometry.h"

namespace rydgraph {

using std::numbers::pi;

const char *shape_name(Shape s) {
    return s == Shape::square ? "square" : "triangle";
}

const char *stage_name(Stage s) {
    switch (s) {
        case Stage::prep:
            return "prep";
        case Stage::measure:
            return "measure";
        default:
            return "hold";
    }
}

Shape parse_shape(const std::string &s) {
    if (s == "square") {
        return Shape::square;
    }
    if (s == "triangle") {
        return Shape::triangle;
    }
    throw std::invalid_argument("unknown pulse shape '" + s + "'");
}

Stage parse_stage(const std::string &s) {
    if (s == "prep") {
        return Stage::prep;
    }
    if (s == "hold") {
        return Stage::hold;
    }
    if (s == "measure") {
        return Stage::measure;
    }
    throw std::invalid_argument("unknown segment label '" + s + "'");
}

double PulseSegment::omega_at(double t) const {
    if (duration <= 0 || t < 0 || t > duration) {
        return 0;
    }
    if (shape == Shape::square) {
        return peak_rabi;
    }
    return peak_rabi * (1 - std::abs(2 * t / duration - 1));
}

double rotation_angle(const PulseSegment &seg) {
    double area = seg.peak_rabi * seg.duration;
    return seg.shape == Shape::square ? area : area / 2;
}

PulseSegment rotation_segment(Stage stage, Shape shape, double duration, double angle, double axis_phase) {
    if (!(duration >= 0) || !std::isfinite(duration) || !std::isfinite(angle)) {
        throw std::invalid_argument("rotation segment needs a finite non-negative duration");
    }
    PulseSegment seg;
    seg.stage = stage;
    seg.shape = shape;
    seg.duration = duration;
    seg.phase = axis_phase;
    if (angle < 0) {
        seg.phase += pi;
        angle = -angle;
    }
    if (duration == 0) {
        if (angle != 0) {
            throw std::invalid_argument("a zero-length segment cannot carry a rotation");
        }
        return seg;
    }
    seg.peak_rabi = (shape == Shape::square ? 1.0 : 2.0) * angle / duration;
    return seg;
}

PulseSegment hold_segment(double duration) {
    PulseSegment seg;
    seg.duration = duration;
    seg.stage = Stage::hold;
    return seg;
}

double PulseSchedule::total_duration() const {
    double t = 0;
    for (const auto &s : segments) {
        t += s.duration;
    }
    return t;
}

double PulseSchedule::omega_at(double t) const {
    double start = 0;
    for (const auto &s : segments) {
        if (t < start + s.duration) {
            return s.omega_at(t - start);
        }
        start += s.duration;
    }
    return 0;
}

void PulseSchedule::validate() const {
    for (const auto &s : segments) {
        if (!(s.duration >= 0) || !std::isfinite(s.duration)) {
            throw std::invalid_argument("segment duration must be finite and non-negative");
        }
        if (!(s.peak_rabi >= 0) || !std::isfinite(s.peak_rabi) || !std::isfinite(s.phase)) {
            throw std::invalid_argument("segment drive must be finite and non-negative");
        }
        if (s.stage == Stage::hold && s.peak_rabi != 0) {
            throw std::invalid_argument("hold segments carry no drive");
        }
    }
}

static PulseSchedule three_stage(
    double d, const ScheduleOptions &opt, double axis, double prep_angle, double measure_angle) {
    double window = cz_time(d);
    if (window < opt.prep_width + opt.measure_width) {
        throw std::invalid_argument(
            "interaction window " + std::to_string(window) + " us is shorter than the prep and measure pulses");
    }
    PulseSchedule s;
    s.segments.push_back(rotation_segment(Stage::prep, opt.shape, opt.prep_width, prep_angle, axis));
    s.segments.push_back(hold_segment(window));
    s.segments.push_back(rotation_segment(Stage::measure, opt.shape, opt.measure_width, measure_angle, axis));
    return s;
}

PulseSchedule bell_schedule(double d, const ScheduleOptions &opt) {
    return three_stage(d, opt, 0.0, pi / 2, -5 * pi / 4);
}

PulseSchedule graph_schedule(double d, const ScheduleOptions &opt) {
    return three_stage(d, opt, pi / 2, pi / 2, -pi / 2);
}

PulseSchedule read_schedule(std::istream &in) {
    PulseSchedule s;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        std::string label, shape;
        if (!(ss >> label)) {
            continue;
        }
        PulseSegment seg;
        if (!(ss >> shape >> seg.duration >> seg.peak_rabi >> seg.phase)) {
            throw ParseError("expected 'label shape duration omega_max phi'", line_no);
        }
        try {
            seg.stage = parse_stage(label);
            seg.shape = parse_shape(shape);
            PulseSchedule one{{seg}};
            one.validate();
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), line_no);
        }
        s.segments.push_back(seg);
    }
    if (s.segments.empty()) {
        throw ParseError("schedule has no segments", line_no);
    }
    return s;
}

void write_schedule(std::ostream &out, const PulseSchedule &schedule) {
    auto old = out.precision(12);
    for (const auto &s : schedule.segments) {
        out << stage_name(s.stage) << " " << shape_name(s.shape) << " " << s.duration << " " << s.peak_rabi << " "
            << s.phase << "\n";
    }
    out.precision(old);
}

}  // namespace rydgraph
