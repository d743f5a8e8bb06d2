// Copyright 2026 The infrob Authors.
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

#include "infrob/beliefs.hpp"
#include "infrob/environment.hpp"
#include "infrob/generators.hpp"
#include "infrob/io.hpp"
#include "infrob/justification.hpp"
#include "infrob/lp.hpp"
#include "infrob/oracles.hpp"
#include "infrob/polytope.hpp"
#include "infrob/rational.hpp"
#include "infrob/report.hpp"
#include "infrob/restriction.hpp"
#include "infrob/robustness.hpp"
#include "infrob/solvers.hpp"
#include "infrob/utility.hpp"
