// Copyright 2026 The PACE Authors.
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

#ifndef PACE_PORTER_HPP
#define PACE_PORTER_HPP

#include <string>

namespace pace {

// One pass of the classic Porter suffix-stripping algorithm. Expects a
// lowercase word; words of length <= 2 and words containing non-alphabetic
// characters are returned unchanged.
std::string porter_stem(const std::string& word);

}  // namespace pace

#endif  // PACE_PORTER_HPP
