// Copyright 2026 The realvar Authors
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realvar/polycore.hpp"

namespace realvar {

struct BenchSystem {
  std::string name;
  std::string description;
  std::string text;  // parse_system input
};

/// Embedded benchmark systems; data/<name>.sys holds the same text.
const std::vector<BenchSystem>& corpus();
std::optional<BenchSystem> find_bench(const std::string& name);
PolySystem load_bench(const std::string& name);

}  // namespace realvar
