// Copyright 2026 The QIC Authors
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

#include "qic/basis.hpp"
#include "qic/braid.hpp"
#include "qic/constants.hpp"
#include "qic/errors.hpp"
#include "qic/hamiltonian.hpp"
#include "qic/hierarchy.hpp"
#include "qic/jones.hpp"
#include "qic/json_io.hpp"
#include "qic/local_gate.hpp"
#include "qic/noise.hpp"
#include "qic/statevector.hpp"
#include "qic/tl_ops.hpp"
#include "qic/verification.hpp"
