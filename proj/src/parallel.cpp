// Copyright 2026 The wnl Authors
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

#include "wnl/parallel.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "wnl/error.hpp"

namespace wnl {

int thread_limit_from_env() {
  const char* raw = std::getenv("WNL_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value < 0) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad WNL_THREADS value '") + raw + "'");
  }
  return value;
}

void apply_thread_limit_from_env() {
  const int limit = thread_limit_from_env();
  if (limit > 0) omp_set_num_threads(limit);
}

int max_threads() noexcept { return omp_get_max_threads(); }

}  // namespace wnl
