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

#ifndef RYDGRAPH_RNG_H
#define RYDGRAPH_RNG_H

#include <cstdint>
#include <random>

namespace rydgraph {

// Purpose salts keep the streams for sampling, noise and jitter independent
// even when they share (seed, shot).
enum class StreamPurpose : uint64_t {
    sample = 0x5a11,
    flip = 0xf11b,
    readout = 0x4eAd,
    jitter = 0x717e,
    damping = 0xda3b,
};

uint64_t splitmix64(uint64_t &state);

// One reproducible stream per (seed, shot index, purpose).
class StreamRng {
   public:
    StreamRng(uint64_t seed, uint64_t stream, StreamPurpose purpose = StreamPurpose::sample);

    double uniform();  // [0, 1) with 53 random bits
    bool bernoulli(double p);
    double normal(double sigma);
    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace rydgraph

#endif
