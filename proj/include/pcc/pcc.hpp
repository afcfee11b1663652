// Copyright 2026 The pcc Authors.
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

// Umbrella header.  pcc/exact.hpp is not included here because it requires
// linking GMP; include it directly where exact certification is wanted.

#include "pcc/certify.hpp"
#include "pcc/errors.hpp"
#include "pcc/io.hpp"
#include "pcc/lanczos.hpp"
#include "pcc/linops.hpp"
#include "pcc/oracle.hpp"
#include "pcc/partition.hpp"
#include "pcc/rng.hpp"
#include "pcc/sbm.hpp"
#include "pcc/serialize.hpp"
#include "pcc/solver.hpp"
#include "pcc/sweep.hpp"
