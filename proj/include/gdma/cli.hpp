// Copyright 2026 The gdma Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace gdma::cli {

// Exit statuses:
//   0  success (including exhausted-none search results)
//   1  structural or parameter errors
//   2  hypothesis-not-met
//   3  proven obstruction
//   4  search budget exceeded
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in = std::cin);

}  // namespace gdma::cli
