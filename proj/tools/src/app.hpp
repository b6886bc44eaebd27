// Copyright 2026 The cyclo Authors
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

#ifndef CYCLO_TOOLS_APP_HPP
#define CYCLO_TOOLS_APP_HPP

#include <ostream>

namespace cyclo::cli {

/// Runs the cyclo command line. Returns the process exit code: 0 success,
/// 1 internal invariant violation or failed check, 2 usage error, 3 input
/// data error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli

#endif  // CYCLO_TOOLS_APP_HPP
