// Copyright 2026 The symprep Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "symprep/core/circuit.hpp"

namespace symprep {

inline constexpr int kCircuitFormatVersion = 1;

nlohmann::json circuit_to_json(const Circuit& circuit);
/** Throws ParseError naming the layer and gate at fault. */
Circuit circuit_from_json(const nlohmann::json& j);

std::string serialize(const Circuit& circuit);
Circuit deserialize(std::string_view text);

void write_circuit(const std::filesystem::path& path, const Circuit& circuit);
Circuit read_circuit(const std::filesystem::path& path);

nlohmann::json metadata_to_json(const CircuitMetadata& md);
CircuitMetadata metadata_from_json(const nlohmann::json& j);

}  // namespace symprep
