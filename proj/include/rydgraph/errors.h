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

#ifndef RYDGRAPH_ERRORS_H
#define RYDGRAPH_ERRORS_H

#include <stdexcept>
#include <string>

namespace rydgraph {

// Requested system does not fit the state-vector backend.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Time evolution produced non-finite amplitudes.
struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input. Carries the offending line when known.
struct ParseError : std::runtime_error {
    ParseError(const std::string &what, size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {
    }
    size_t line;
};

}  // namespace rydgraph

#endif
