// Copyright 2026 The relbound authors.
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

#ifndef RELBOUND_CORE_CHANNEL_JSON_HPP_
#define RELBOUND_CORE_CHANNEL_JSON_HPP_

#include <string>

#include "core/channel.hpp"

namespace relbound {

// Channel interchange format:
//   {"input": 3, "output": 3, "rows": [["3/4", "1/4", "0"], ...]}
// Entries are rational strings or JSON integers; floating-point entries are
// rejected so exact zero patterns survive the round trip. Structural problems
// raise ParseError, probability problems raise validation errors.
Channel channel_from_json(const std::string& text);

std::string channel_to_json(const Channel& w);

}  // namespace relbound

#endif  // RELBOUND_CORE_CHANNEL_JSON_HPP_
