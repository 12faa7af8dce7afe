// Copyright 2026 The StressKit Authors
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

#ifndef STRESSKIT_CLI_WORKER_POOL_H_
#define STRESSKIT_CLI_WORKER_POOL_H_

#include <cstddef>
#include <functional>

namespace stresskit::cli {

// Calls fn(i) for every i in [0, n) on up to `jobs` threads. Items are handed
// out in index order. If any call throws, remaining items are skipped and the
// first exception is rethrown after all workers have joined.
void ParallelFor(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace stresskit::cli

#endif  // STRESSKIT_CLI_WORKER_POOL_H_
