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

#pragma once

namespace wnl {

/// Thread cap read from WNL_THREADS: 0 or unset means the OpenMP default.
/// Throws InvalidArgument on a malformed value.
int thread_limit_from_env();

/// Applies thread_limit_from_env() to the OpenMP runtime.
void apply_thread_limit_from_env();

/// Current upper bound on threads in a parallel region.
int max_threads() noexcept;

}  // namespace wnl
