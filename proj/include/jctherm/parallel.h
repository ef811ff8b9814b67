// Copyright 2026 The jctherm Authors
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
#ifndef JCTHERM_PARALLEL_H
#define JCTHERM_PARALLEL_H

#include <cstddef>
#include <functional>

namespace jctherm {

/// Environment variable holding the default worker count.
inline constexpr const char *kWorkersEnvVar = "JCTHERM_WORKERS";

/// JCTHERM_WORKERS if set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
int default_workers();

/// Calls body(i) for every i in [0, count) on up to `workers` threads.
/// Each index is visited exactly once; callers write results into slot i so
/// the outcome does not depend on scheduling. The first exception thrown by
/// a body is rethrown after all threads join.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)> &body);

}  // namespace jctherm

#endif
