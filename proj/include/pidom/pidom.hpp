// Copyright 2026 The pidom Authors
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

#ifndef PIDOM_PIDOM_HPP
#define PIDOM_PIDOM_HPP

#include "pidom/characterize.hpp"
#include "pidom/families.hpp"
#include "pidom/graph.hpp"
#include "pidom/graph6.hpp"
#include "pidom/labeling.hpp"
#include "pidom/reduction.hpp"
#include "pidom/solver.hpp"

#endif  // PIDOM_PIDOM_HPP
