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

#ifndef RYDGRAPH_GEOMETRY_H
#define RYDGRAPH_GEOMETRY_H

#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace rydgraph {

// Van der Waals coefficient in um^6 rad/us.
inline constexpr double kC6 = 5420503.0;

// Largest register the state-vector backend accepts.
inline constexpr size_t kMaxAtoms = 24;

enum class Role { input, output, body };

const char *role_name(Role r);
Role parse_role(const std::string &s);

struct Point {
    double x = 0;
    double y = 0;
};

double distance(Point a, Point b);

struct AtomLayout {
    std::vector<Point> positions;
    std::vector<Role> roles;
    double spacing = 0;
    double input_displacement = 0;

    size_t size() const {
        return positions.size();
    }
    // Throws std::invalid_argument on coincident or non-finite atoms.
    void validate() const;
    std::vector<size_t> atoms_with_role(Role r) const;
};

struct Edge {
    size_t a;
    size_t b;
    double theta = std::numbers::pi;
};

struct GraphSpec {
    size_t n_vertices = 0;
    std::vector<Edge> edges;

    void validate() const;
    std::vector<size_t> neighbors(size_t v) const;
    size_t degree(size_t v) const;
};

// Row-major symmetric coupling matrix in rad/us.
class InteractionMatrix {
   public:
    InteractionMatrix() = default;
    explicit InteractionMatrix(size_t n) : n_(n), v_(n * n, 0.0) {
    }
    size_t size() const {
        return n_;
    }
    double operator()(size_t j, size_t k) const {
        return v_[j * n_ + k];
    }
    void set(size_t j, size_t k, double value) {
        v_[j * n_ + k] = value;
        v_[k * n_ + j] = value;
    }

   private:
    size_t n_ = 0;
    std::vector<double> v_;
};

struct LayoutGraph {
    AtomLayout layout;
    GraphSpec graph;
};

double pair_interaction(double d);
double cz_time(double d);

AtomLayout build_chain(size_t n, double d, double dd);
GraphSpec chain_graph(size_t n);
LayoutGraph build_rect(size_t rows, size_t cols, double d);

// 15-atom two-wire graph. Inputs are atoms 1 and 9 (1-based), outputs 7 and 15.
LayoutGraph build_cnot_layout(double d, double dd);

// 16-atom two-wire graph with a 2x3 ladder in the middle. Inputs 1 and 11,
// outputs 7 and 16. Each unit of `lead` prepends two atoms to both wires.
LayoutGraph build_swap_layout(double d, double dd, size_t lead = 0);

// `cutoff` is in units of layout.spacing; couplings beyond it are dropped.
InteractionMatrix interaction_matrix(const AtomLayout &layout, std::optional<double> cutoff = std::nullopt);

// Text formats: layout "x_um y_um role", graph "j k [theta]" with 1-based
// vertices. '#' starts a comment. A layout may carry "# spacing d" and
// "# displacement dd" directives.
AtomLayout read_layout(std::istream &in);
void write_layout(std::ostream &out, const AtomLayout &layout);
GraphSpec read_graph(std::istream &in, size_t n_vertices);
void write_graph(std::ostream &out, const GraphSpec &graph);

}  // namespace rydgraph

#endif
