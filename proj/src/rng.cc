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

#include "rydgraph/rng.h"

#include <cmath>
#include <numbers>

namespace rydgraph {

uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

StreamRng::StreamRng(uint64_t seed, uint64_t stream, StreamPurpose purpose) {
    uint64_t s = seed;
    uint64_t a = splitmix64(s);
    s = a ^ (stream * 0xd1342543de82ef95ULL) ^ static_cast<uint64_t>(purpose);
    std::seed_seq seq{
        static_cast<uint32_t>(splitmix64(s)), static_cast<uint32_t>(splitmix64(s)),
        static_cast<uint32_t>(splitmix64(s)), static_cast<uint32_t>(splitmix64(s))};
    engine_.seed(seq);
}

double StreamRng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool StreamRng::bernoulli(double p) {
    return uniform() < p;
}

// Box-Muller written out so the stream is identical across standard libraries.
double StreamRng::normal(double sigma) {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0) {
        u1 = 0x1.0p-53;
    }
    return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rydgraph
