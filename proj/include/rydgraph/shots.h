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

#ifndef RYDGRAPH_SHOTS_H
#define RYDGRAPH_SHOTS_H

#include <iosfwd>
#include <vector>

#include "rydgraph/engine.h"

namespace rydgraph {

struct ShotRecord {
    Bits s;
    Basis basis = Basis::x;
    std::vector<Basis> local_bases;  // empty when every atom used `basis`
    bool kept = true;
    Bits corrected;  // filled only for kept shots of a protocol run

    Basis basis_of(size_t atom) const {
        return local_bases.empty() ? basis : local_bases[atom];
    }
};

// "basis kept s1s2..sN corrected" per line; mixed bases are written as a
// per-atom string, a missing correction as '-'.
void write_shots(std::ostream &out, const std::vector<ShotRecord> &shots);
std::vector<ShotRecord> read_shots(std::istream &in);

}  // namespace rydgraph

#endif
