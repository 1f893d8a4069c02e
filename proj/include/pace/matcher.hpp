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

#ifndef PACE_MATCHER_HPP
#define PACE_MATCHER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pace/corpus.hpp"
#include "pace/domain.hpp"

namespace pace {

// A nominated [entity, context]-pair together with the patterns that
// nominated it. The score is filled in by the scoring phase.
struct CandidatePair {
  EntityContextPair pair;
  std::set<std::string> nominated_by;  // canonical pattern keys
  double score = 0.0;
};

// A pattern matches a chunk iff the prefix slot equals the tokens immediately
// preceding the chunk, the suffix slot equals the tokens immediately
// following it, and the name slot is a contiguous token subsequence of the
// chunk (empty slots match vacuously).
bool slots_context_match(const Pattern& pattern,
                         const std::vector<Token>& tokens, ChunkSpan chunk);
bool name_slot_contained(const Pattern& pattern,
                         const std::vector<Token>& tokens, ChunkSpan chunk);
bool pattern_matches_chunk(const Pattern& pattern,
                           const std::vector<Token>& tokens, ChunkSpan chunk);

// Applies one pattern to one document. On each matching chunk the full chunk
// is extracted as the name along with up to `radius` context tokens on each
// side; shorter context near a document edge is kept as-is. Results are in
// chunk order and not deduplicated.
std::vector<CandidatePair> match_pattern(const Pattern& pattern,
                                         const Document& doc, int radius = 5);

// A known pair viewed as a one-chunk micro-document: its context plus name,
// with the chunk spanning exactly the name. Used for pattern scoring, for
// initializing pattern match counts, and for checking that a nominated
// pattern matches its parents.
Document pair_as_micro_doc(const EntityContextPair& pair);

bool pattern_matches_pair(const Pattern& pattern,
                          const EntityContextPair& pair);

// Result of one corpus search: candidates per entity type in canonical key
// order, and the known-name matches that feed each pattern's f statistic.
struct FindResult {
  std::map<std::string, std::vector<CandidatePair>> candidates_by_type;
  // pattern key -> normalized name keys of known entities it matched, for
  // patterns that matched at least one; used to update f after the scan.
  std::map<std::string, std::set<std::string>> known_name_matches;
};

// Searches the corpus once, applying every known pattern of every type to
// every live document. Candidates equal to already-known pairs are dropped;
// duplicates are merged with their nominating pattern sets unioned. Exactly
// one traversal is recorded regardless of pattern count. Pure with respect to
// `state`; callers apply known_name_matches to update f.
FindResult find_candidates(const KnowledgeState& state, CorpusStore& corpus,
                           int radius = 5, int jobs = 1);

// Applies the known-name matches collected by find_candidates to the
// patterns in state, returning the per-pattern newly recorded names (the f
// delta), in canonical order.
std::map<std::string, std::vector<std::string>> apply_known_name_matches(
    KnowledgeState& state, const FindResult& result);

}  // namespace pace

#endif  // PACE_MATCHER_HPP
