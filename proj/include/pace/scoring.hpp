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

#ifndef PACE_SCORING_HPP
#define PACE_SCORING_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pace/domain.hpp"
#include "pace/matcher.hpp"
#include "pace/nominator.hpp"

namespace pace {

// Promotion fractions and the logarithm base used by both score functions.
// The promoted sets are invariant under the base (it scales every score by
// one positive constant); it is exposed for inspection of reported scores.
struct PromotionPolicy {
  double entity_fraction = 0.5;
  double pattern_fraction = 0.25;
  double log_base = 2.0;
};

// Resolves a canonical pattern key to the pattern, or nullptr.
using PatternResolver =
    std::function<const Pattern*(const std::string& pattern_key)>;

PatternResolver resolver_for(const KnowledgeState& state);

// Basilisk entity score: (1/n) * sum over the n nominating patterns of
// log(1 + f_j). Throws std::invalid_argument when a nominating pattern key
// cannot be resolved or the candidate has none. Used by both PACE and the
// traditional baseline.
//
// The _rank variants compute the score in natural log. Promotion always
// ranks on them: a base change scales every score by the same constant, so
// ranking on the unscaled value keeps the promoted sets bit-for-bit
// identical across bases (dividing by log(base) could round two distinct
// scores into a tie in one base but not another).
double basilisk_entity_rank(const std::set<std::string>& nominated_by,
                            const PatternResolver& resolve);
double basilisk_entity_score(const std::set<std::string>& nominated_by,
                             const PatternResolver& resolve, double log_base);

// Basilisk pattern score composition: (n/N) * log(n), or 0 when either count
// is 0. The counts' meaning differs between PACE (relative to known pairs)
// and the baseline (relative to corpus windows); the formula is shared.
double basilisk_pattern_rank(int n_with_name, int n_total);
double basilisk_pattern_score(int n_with_name, int n_total, double log_base);

// Converts a natural-log rank into the policy base for reporting.
double score_in_base(double rank, double log_base);

double score_entity(const CandidatePair& candidate,
                    const PatternResolver& resolve, double log_base = 2.0);

// Basilisk pattern score with n and N counted relative to the known pairs of
// the candidate's type, each viewed as a one-chunk micro-document: N = pairs
// whose context matches the prefix/suffix slots, n = those where the name
// slot containment also holds. Returns (n/N) * log(n), or 0 when n or N is 0.
double score_pattern(const Pattern& pattern,
                     const std::vector<const EntityContextPair*>& known_pairs,
                     double log_base = 2.0);
double score_pattern(const CandidatePattern& candidate,
                     const KnowledgeState& state, double log_base = 2.0);

// Natural-log rank of a candidate pattern over the known pairs of its type.
double score_pattern_rank(const CandidatePattern& candidate,
                          const KnowledgeState& state);

// One scored candidate as seen by promotion.
struct ScoredRef {
  double score = 0.0;
  std::string key;  // canonical tie-break key
  size_t index = 0;  // position in the caller's candidate list
};

// Sorts descending by score with ties broken ascending by key, then promotes
// the first ceil(fraction * count) entries. Entries with score <= 0 are
// excluded whenever at least one positive score exists; when no score is
// positive the top entries by tie-break order are still promoted. Returns
// indices into the caller's list, in promotion order.
std::vector<size_t> promote(std::vector<ScoredRef> scored, double fraction);

}  // namespace pace

#endif  // PACE_SCORING_HPP
