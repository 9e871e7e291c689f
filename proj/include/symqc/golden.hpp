// Copyright 2026 The symqc Authors
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

namespace symqc::golden {

// Frozen hyper-teleportation wiring, mirrored in data/hyper_teleport_circuit.txt.
// Intentionally empty: the exhaustive reconstruction in
// search_hyper_teleport_circuit accepts no CCZ circuit (see that file's tests
// for the search domain), so there is no wiring to freeze and
// hyper_teleport_ccz reports the failure instead of running a wrong circuit.
inline constexpr const char* kHyperTeleportCircuit = "";

}  // namespace symqc::golden
