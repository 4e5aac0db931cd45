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

#include "rydgraph/geometry.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rydgraph/errors.h"

namespace rydgraph {

const char *role_name(Role r) {
    switch (r) {
        case Role::input:
            return "input";
        case Role::output:
            return "output";
        default:
            return "body";
    }
}

Role parse_role(const std::string &s) {
    if (s == "input") {
        return Role::input;
    }
    if (s == "output") {
        return Role::output;
    }
    if (s == "body") {
        return Role::body;
    }
    throw std::invalid_argument("unknown atom role '" + s + "'");
}

double distance(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

void AtomLayout::validate() const {
    if (positions.size() != roles.size()) {
        throw std::invalid_argument("layout has mismatched position and role counts");
    }
    if (positions.empty()) {
        throw std::invalid_argument("layout has no atoms");
    }
    if (!(input_displacement >= 0) || !std::isfinite(input_displacement)) {
        throw std::invalid_argument("input displacement must be finite and non-negative");
    }
    for (size_t j = 0; j < positions.size(); j++) {
        if (!std::isfinite(positions[j].x) || !std::isfinite(positions[j].y)) {
            throw std::invalid_argument("atom " + std::to_string(j + 1) + " has a non-finite coordinate");
        }
        for (size_t k = 0; k < j; k++) {
            if (!(distance(positions[j], positions[k]) > 0)) {
                throw std::invalid_argument(
                    "atoms " + std::to_string(k + 1) + " and " + std::to_string(j + 1) + " coincide");
            }
        }
    }
}

std::vector<size_t> AtomLayout::atoms_with_role(Role r) const {
    std::vector<size_t> out;
    for (size_t j = 0; j < roles.size(); j++) {
        if (roles[j] == r) {
            out.push_back(j);
        }
    }
    return out;
}

void GraphSpec::validate() const {
    for (const auto &e : edges) {
        if (e.a >= n_vertices || e.b >= n_vertices) {
            throw std::invalid_argument("edge references a vertex outside the graph");
        }
        if (e.a == e.b) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(e.a + 1));
        }
        if (!std::isfinite(e.theta)) {
            throw std::invalid_argument("non-finite edge phase");
        }
    }
}

std::vector<size_t> GraphSpec::neighbors(size_t v) const {
    std::vector<size_t> out;
    for (const auto &e : edges) {
        if (e.a == v) {
            out.push_back(e.b);
        } else if (e.b == v) {
            out.push_back(e.a);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

size_t GraphSpec::degree(size_t v) const {
    return neighbors(v).size();
}

double pair_interaction(double d) {
    if (!(d > 0) || !std::isfinite(d)) {
        throw std::domain_error("pair distance must be positive and finite");
    }
    double d2 = d * d;
    return kC6 / (d2 * d2 * d2);
}

double cz_time(double d) {
    return std::numbers::pi / pair_interaction(d);
}

static void check_spacing(double d, double dd) {
    if (!(d > 0) || !std::isfinite(d)) {
        throw std::invalid_argument("spacing must be positive and finite");
    }
    if (!(dd >= 0) || !std::isfinite(dd)) {
        throw std::invalid_argument("input displacement must be non-negative and finite");
    }
}

AtomLayout build_chain(size_t n, double d, double dd) {
    if (n < 2) {
        throw std::invalid_argument("a chain needs at least 2 atoms");
    }
    check_spacing(d, dd);
    AtomLayout out;
    out.spacing = d;
    out.input_displacement = dd;
    for (size_t j = 0; j < n; j++) {
        out.positions.push_back({static_cast<double>(j) * d, 0.0});
        out.roles.push_back(j == 0 ? Role::input : (j + 1 == n ? Role::output : Role::body));
    }
    out.positions[0].x -= dd;
    return out;
}

GraphSpec chain_graph(size_t n) {
    GraphSpec g;
    g.n_vertices = n;
    for (size_t j = 0; j + 1 < n; j++) {
        g.edges.push_back({j, j + 1});
    }
    return g;
}

// Grid cells are (row, col) on a unit-d lattice, listed in readout order.
namespace {

struct Cell {
    int row;
    int col;
};

LayoutGraph from_cells(const std::vector<Cell> &cells, double d) {
    LayoutGraph out;
    out.layout.spacing = d;
    out.graph.n_vertices = cells.size();
    for (const auto &c : cells) {
        out.layout.positions.push_back({c.col * d, c.row * d});
        out.layout.roles.push_back(Role::body);
    }
    for (size_t j = 0; j < cells.size(); j++) {
        for (size_t k = j + 1; k < cells.size(); k++) {
            int dr = cells[j].row - cells[k].row;
            int dc = cells[j].col - cells[k].col;
            if (dr * dr + dc * dc == 1) {
                out.graph.edges.push_back({j, k});
            }
        }
    }
    return out;
}

void mark_input(LayoutGraph &lg, size_t atom, double dd) {
    lg.layout.roles[atom] = Role::input;
    lg.layout.positions[atom].x -= dd;
}

}  // namespace

LayoutGraph build_rect(size_t rows, size_t cols, double d) {
    check_spacing(d, 0);
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("grid needs at least one row and one column");
    }
    if (rows * cols > kMaxAtoms) {
        throw CapabilityError(
            "grid of " + std::to_string(rows * cols) + " atoms exceeds the " + std::to_string(kMaxAtoms) + "-atom cap");
    }
    std::vector<Cell> cells;
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            cells.push_back({static_cast<int>(r), static_cast<int>(c)});
        }
    }
    return from_cells(cells, d);
}

LayoutGraph build_cnot_layout(double d, double dd) {
    check_spacing(d, dd);
    // Two 7-atom wires two rows apart, bridged through one atom below the
    // middle of the control wire.
    std::vector<Cell> cells;
    for (int c = 0; c < 7; c++) {
        cells.push_back({0, c});
    }
    cells.push_back({1, 3});
    for (int c = 0; c < 7; c++) {
        cells.push_back({2, c});
    }
    LayoutGraph out = from_cells(cells, d);
    out.layout.input_displacement = dd;
    mark_input(out, 0, dd);
    mark_input(out, 8, dd);
    out.layout.roles[6] = Role::output;
    out.layout.roles[14] = Role::output;
    return out;
}

LayoutGraph build_swap_layout(double d, double dd, size_t lead) {
    check_spacing(d, dd);
    size_t n = 16 + 4 * lead;
    if (n > kMaxAtoms) {
        throw CapabilityError(
            "swap layout of " + std::to_string(n) + " atoms exceeds the " + std::to_string(kMaxAtoms) + "-atom cap");
    }
    int s = 2 * static_cast<int>(lead);
    std::vector<Cell> cells;
    for (int c = 0; c < 7 + s; c++) {
        cells.push_back({0, c});
    }
    for (int c = 2 + s; c < 5 + s; c++) {
        cells.push_back({1, c});
    }
    for (int c = 0; c < 3 + s; c++) {
        cells.push_back({2, c});
    }
    for (int c = 4 + s; c < 7 + s; c++) {
        cells.push_back({2, c});
    }
    LayoutGraph out = from_cells(cells, d);
    out.layout.input_displacement = dd;
    size_t row1 = 7 + s;
    size_t row2 = row1 + 3;
    mark_input(out, 0, dd);
    mark_input(out, row2, dd);
    out.layout.roles[6 + s] = Role::output;
    out.layout.roles[n - 1] = Role::output;
    return out;
}

InteractionMatrix interaction_matrix(const AtomLayout &layout, std::optional<double> cutoff) {
    layout.validate();
    size_t n = layout.size();
    InteractionMatrix m(n);
    double limit = cutoff ? *cutoff * layout.spacing : INFINITY;
    for (size_t j = 0; j < n; j++) {
        for (size_t k = j + 1; k < n; k++) {
            double r = distance(layout.positions[j], layout.positions[k]);
            if (r <= limit * (1 + 1e-9)) {
                m.set(j, k, pair_interaction(r));
            }
        }
    }
    return m;
}

static std::string strip_comment(const std::string &line) {
    auto p = line.find('#');
    return p == std::string::npos ? line : line.substr(0, p);
}

AtomLayout read_layout(std::istream &in) {
    AtomLayout out;
    std::string line;
    size_t line_no = 0;
    bool have_spacing = false;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream directive(line.substr(hash + 1));
            std::string key;
            double value;
            if (directive >> key >> value) {
                if (key == "spacing") {
                    out.spacing = value;
                    have_spacing = true;
                } else if (key == "displacement") {
                    out.input_displacement = value;
                }
            }
        }
        std::istringstream ss(strip_comment(line));
        double x, y;
        std::string role;
        if (!(ss >> x)) {
            continue;
        }
        if (!(ss >> y >> role)) {
            throw ParseError("expected 'x_um y_um role'", line_no);
        }
        try {
            out.roles.push_back(parse_role(role));
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), line_no);
        }
        out.positions.push_back({x, y});
    }
    if (out.positions.empty()) {
        throw ParseError("layout has no atoms", line_no);
    }
    if (!have_spacing) {
        double best = INFINITY;
        for (size_t j = 0; j < out.size(); j++) {
            for (size_t k = 0; k < j; k++) {
                best = std::min(best, distance(out.positions[j], out.positions[k]));
            }
        }
        out.spacing = std::isfinite(best) ? best : 1.0;
    }
    out.validate();
    return out;
}

void write_layout(std::ostream &out, const AtomLayout &layout) {
    auto old = out.precision(12);
    out << "# spacing " << layout.spacing << "\n";
    out << "# displacement " << layout.input_displacement << "\n";
    for (size_t j = 0; j < layout.size(); j++) {
        out << layout.positions[j].x << " " << layout.positions[j].y << " " << role_name(layout.roles[j]) << "\n";
    }
    out.precision(old);
}

GraphSpec read_graph(std::istream &in, size_t n_vertices) {
    GraphSpec g;
    g.n_vertices = n_vertices;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream ss(strip_comment(line));
        long long a, b;
        if (!(ss >> a)) {
            continue;
        }
        if (!(ss >> b)) {
            throw ParseError("expected 'j k [theta]'", line_no);
        }
        double theta = std::numbers::pi;
        ss >> theta;
        if (a < 1 || b < 1 || static_cast<size_t>(a) > n_vertices || static_cast<size_t>(b) > n_vertices) {
            throw ParseError("vertex index out of range", line_no);
        }
        g.edges.push_back({static_cast<size_t>(a - 1), static_cast<size_t>(b - 1), theta});
    }
    try {
        g.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), line_no);
    }
    return g;
}

void write_graph(std::ostream &out, const GraphSpec &graph) {
    auto old = out.precision(12);
    for (const auto &e : graph.edges) {
        out << e.a + 1 << " " << e.b + 1 << " " << e.theta << "\n";
    }
    out.precision(old);
}

}  // namespace rydgraph
