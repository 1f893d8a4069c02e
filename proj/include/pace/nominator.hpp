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

#ifndef PACE_NOMINATOR_HPP
#define PACE_NOMINATOR_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pace/domain.hpp"

namespace pace {

// A pattern derived from known pairs, before scoring and promotion.
struct CandidatePattern {
  Pattern pattern;
  std::set<std::string> parents;  // keys of the pairs it was derived from
  double score = 0.0;
};

// Derives a pattern from two known pairs of the same entity type. The prefix
// slot is the longest common token suffix of the two prefixes (alignment
// grows outward from the name), the suffix slot the longest common token
// prefix of the two suffixes, and the name slot the longest common token
// suffix of the two names. Returns nullopt when all three come up empty.
// Throws std::invalid_argument on an entity-type mismatch.
std::optional<CandidatePattern> nominate_pattern(const EntityContextPair& a,
                                                 const EntityContextPair& b);

// Compares all unordered pair-pairs (self-comparison included) within each
// entity type. Candidates are deduplicated by canonical key with parents
// unioned, and patterns already known are dropped. Touches no corpus. With
// same_doc_filter set, comparisons between pairs sharing a source are
// skipped, so a pattern supported only within one document is never
// nominated.
std::map<std::string, std::vector<CandidatePattern>> nominate_all(
    const KnowledgeState& state, bool same_doc_filter = false);

}  // namespace pace

#endif  // PACE_NOMINATOR_HPP
