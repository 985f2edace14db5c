// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irswpcn Authors
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

#ifndef IRSWPCN_IRSWPCN_HPP
#define IRSWPCN_IRSWPCN_HPP

#include "irswpcn/allocator.hpp"
#include "irswpcn/array_exact.hpp"
#include "irswpcn/channel_model.hpp"
#include "irswpcn/errors.hpp"
#include "irswpcn/experiments.hpp"
#include "irswpcn/golden_section.hpp"
#include "irswpcn/lambert_w.hpp"
#include "irswpcn/oracle.hpp"
#include "irswpcn/scenario_io.hpp"
#include "irswpcn/tilt_optimizer.hpp"

#endif  // IRSWPCN_IRSWPCN_HPP
