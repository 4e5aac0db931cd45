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

#include "rydgraph/shots.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "rydgraph/errors.h"

namespace rydgraph {

static std::string bit_string(const Bits &b) {
    std::string s;
    for (uint8_t x : b) {
        s.push_back(x ? '1' : '0');
    }
    return s;
}

static Bits parse_bits(const std::string &s, size_t line) {
    Bits b;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw ParseError("bad bit string '" + s + "'", line);
        }
        b.push_back(static_cast<uint8_t>(c - '0'));
    }
    return b;
}

void write_shots(std::ostream &out, const std::vector<ShotRecord> &shots) {
    for (const auto &r : shots) {
        if (r.local_bases.empty()) {
            out << basis_name(r.basis);
        } else {
            for (Basis b : r.local_bases) {
                out << basis_name(b);
            }
        }
        out << " " << (r.kept ? 1 : 0) << " " << bit_string(r.s) << " "
            << (r.corrected.empty() ? std::string("-") : bit_string(r.corrected)) << "\n";
    }
}

std::vector<ShotRecord> read_shots(std::istream &in) {
    std::vector<ShotRecord> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ss(line);
        std::string basis, bits, corrected;
        int kept;
        if (!(ss >> basis >> kept >> bits >> corrected)) {
            throw ParseError("expected 'basis kept bits corrected'", line_no);
        }
        ShotRecord r;
        r.s = parse_bits(bits, line_no);
        try {
            if (basis.size() == 1) {
                r.basis = parse_basis(basis);
            } else {
                if (basis.size() != r.s.size()) {
                    throw ParseError("per-atom basis string has the wrong length", line_no);
                }
                for (char c : basis) {
                    r.local_bases.push_back(parse_basis(std::string(1, c)));
                }
            }
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what(), line_no);
        }
        r.kept = kept != 0;
        if (corrected != "-") {
            r.corrected = parse_bits(corrected, line_no);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace rydgraph
