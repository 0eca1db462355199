// Copyright 2026 The supercheq-sim authors
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

#ifndef SUPERCHEQ_SUPERCHEQ_HPP
#define SUPERCHEQ_SUPERCHEQ_HPP

#include "supercheq/analytics.hpp"
#include "supercheq/bits.hpp"
#include "supercheq/circuit.hpp"
#include "supercheq/density.hpp"
#include "supercheq/ee.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/fidelity.hpp"
#include "supercheq/gates.hpp"
#include "supercheq/gf2.hpp"
#include "supercheq/graph.hpp"
#include "supercheq/haar.hpp"
#include "supercheq/ie.hpp"
#include "supercheq/json.hpp"
#include "supercheq/parallel.hpp"
#include "supercheq/smp.hpp"
#include "supercheq/statevector.hpp"
#include "supercheq/stream.hpp"
#include "supercheq/swap_test.hpp"

#endif  // SUPERCHEQ_SUPERCHEQ_HPP
