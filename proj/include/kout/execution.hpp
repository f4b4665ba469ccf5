// Copyright 2026 The kout Authors.
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

#ifndef KOUT_EXECUTION_HPP_
#define KOUT_EXECUTION_HPP_

namespace kout {

// Parallel kernels keep a serial twin with identical results; the serial
// path is the reference the tests and benchmarks compare against.
enum class Execution { serial, parallel };

}  // namespace kout

#endif  // KOUT_EXECUTION_HPP_
