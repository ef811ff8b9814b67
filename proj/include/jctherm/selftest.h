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

#ifndef JCTHERM_SELFTEST_H
#define JCTHERM_SELFTEST_H

#include <cstdint>
#include <ostream>

namespace jctherm {

struct SelftestSummary {
    int passed = 0;
    int failed = 0;
};

/// Runs the invariant battery of every module, one PASS/FAIL line per check
/// on `out`. `seed` drives the randomized checks.
SelftestSummary run_selftest(std::uint64_t seed, int workers, std::ostream &out);

}  // namespace jctherm

#endif
