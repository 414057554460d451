// Copyright 2026 The patlas Authors.
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

#ifndef PATLAS_PARALLEL_H_
#define PATLAS_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace patlas {

// Worker count: PATLAS_THREADS if set and positive, else the hardware
// concurrency (at least 1).
std::size_t thread_count();

// Calls body(i) for every i in [0, n). Iterations are split into contiguous
// chunks across threads; callers write results into per-index slots so the
// outcome never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace patlas

#endif  // PATLAS_PARALLEL_H_
