// Copyright 2026 The hamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "hamsim/matrix.hpp"

namespace hamsim {

// exp(A) by scaling-and-squaring with a machine-precision Taylor core.
// Supported for ||A||_F <= 50 (ample for exp(-iHt) factors); larger norms are
// rejected rather than silently degraded.
CMat expm(const CMat &a);

}  // namespace hamsim
