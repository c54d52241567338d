// Copyright 2026 The PVM Authors
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

#ifndef PVM_PVM_HPP_
#define PVM_PVM_HPP_

#include "pvm/brute_force.hpp"
#include "pvm/classifier.hpp"
#include "pvm/core.hpp"
#include "pvm/coverage.hpp"
#include "pvm/cross_validation.hpp"
#include "pvm/data.hpp"
#include "pvm/dissimilarity.hpp"
#include "pvm/greedy.hpp"
#include "pvm/io.hpp"
#include "pvm/lp_round.hpp"
#include "pvm/mixture.hpp"
#include "pvm/simplex.hpp"
#include "pvm/solver.hpp"

#endif  // PVM_PVM_HPP_
