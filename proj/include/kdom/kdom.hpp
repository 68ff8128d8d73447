// Copyright 2026 The kdom Authors
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

#ifndef KDOM_KDOM_HPP
#define KDOM_KDOM_HPP

#include "kdom/bench.hpp"
#include "kdom/coverage.hpp"
#include "kdom/digraph.hpp"
#include "kdom/errors.hpp"
#include "kdom/exact.hpp"
#include "kdom/generators.hpp"
#include "kdom/greedy.hpp"
#include "kdom/io.hpp"
#include "kdom/randomized.hpp"
#include "kdom/reachability.hpp"
#include "kdom/report.hpp"
#include "kdom/rng.hpp"

#endif  // KDOM_KDOM_HPP
