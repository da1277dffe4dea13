/* Copyright 2026 The canonparse Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CANONPARSE_CLI_HPP_
#define CANONPARSE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace canonparse {

// Entry point of the canonparse command; args excludes the program name.
// Returns 0 on success, 1 when a check fails, 2 on usage errors.
int CliMain(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace canonparse

#endif  // CANONPARSE_CLI_HPP_
