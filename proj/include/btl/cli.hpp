// Copyright 2026 The btlrank Authors.
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

#ifndef BTL_CLI_HPP_
#define BTL_CLI_HPP_

namespace btl {

// Entry point behind the btl binary. Subcommands: simulate, fit, experiment.
// Exit codes: 0 success, 2 usage or configuration error, 3 estimator failure
// in fit, 1 anything else.
int cli_main(int argc, const char* const* argv);

}  // namespace btl

#endif  // BTL_CLI_HPP_
