// Copyright 2026 The Authors.
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

#ifndef RMOP_RMOP_HPP_
#define RMOP_RMOP_HPP_

#include "rmop/attack.hpp"
#include "rmop/bench.hpp"
#include "rmop/common.hpp"
#include "rmop/documents.hpp"
#include "rmop/graph.hpp"
#include "rmop/orienteering.hpp"
#include "rmop/planner.hpp"
#include "rmop/reward.hpp"
#include "rmop/scenario_io.hpp"

#endif  // RMOP_RMOP_HPP_
