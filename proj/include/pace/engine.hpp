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

#ifndef PACE_ENGINE_HPP
#define PACE_ENGINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pace/corpus.hpp"
#include "pace/domain.hpp"
#include "pace/matcher.hpp"
#include "pace/nominator.hpp"
#include "pace/scoring.hpp"

namespace pace {

enum class Algorithm { kPace, kTraditional };

struct RunConfig {
  int iterations = 6;  // maximum cycle count
  PromotionPolicy policy;
  Limits limits;
  std::optional<int> ttl;  // document lifetime in cycles; absent = no expiry
  bool same_doc_filter = false;
  Algorithm algorithm = Algorithm::kPace;
  int jobs = 1;
};

// Why a run stopped.
enum class Termination {
  kRunning,
  kFixpoint,      // a cycle promoted zero new pairs (or names)
  kIterationCap,
};

// Everything that happened in one cycle. Together with the seed state the
// sequence of records determines the final state: promoted patterns carry
// their match statistics as of insertion, and f_updates lists the known-name
// matches recorded during the cycle's corpus search.
struct CycleRecord {
  int cycle = 0;
  std::map<std::string, std::vector<CandidatePattern>> pattern_candidates;
  std::map<std::string, std::vector<Pattern>> promoted_patterns;
  std::map<std::string, std::vector<CandidatePair>> pair_candidates;
  std::map<std::string, std::vector<EntityContextPair>> promoted_pairs;
  std::map<std::string, std::vector<std::string>> f_updates;
  int traversals = 0;  // corpus traversals performed by this cycle
  std::vector<std::string> evicted;

  size_t promoted_pair_count() const;
  size_t promoted_pattern_count() const;
};

struct RunTrace {
  std::vector<CycleRecord> cycles;
  Termination termination = Termination::kRunning;
  int total_traversals = 0;
};

// Initializes a pattern's match statistic against a set of known pairs: each
// pair whose micro-document the pattern fully matches contributes its name.
// Applied to every pattern when it enters a known set (seeds against the
// seed pairs, learned patterns against the pairs known at promotion).
void initialize_matched_names(
    Pattern& pattern, const std::map<std::string, EntityContextPair>& pairs);

// The PACE bootstrapping engine. Drives cycles over a corpus store that may
// be re-filled between steps; knowledge only grows.
class PaceEngine {
 public:
  // `seeded` must already contain the seed pairs/patterns (see seeds.hpp).
  PaceEngine(RunConfig config, CorpusStore& corpus, KnowledgeState seeded);

  // Pattern nomination, scoring and promotion against the current state.
  // Touches no document: usable (and tested) with a corpus store that faults
  // on any access.
  CycleRecord run_pattern_phase(int cycle_number);

  // One full cycle: pattern phase, pair phase (exactly one corpus
  // traversal), then expiry.
  const CycleRecord& step();

  // Steps until a cycle promotes zero new pairs or the iteration cap is
  // reached.
  const RunTrace& run();

  const KnowledgeState& state() const { return state_; }
  const RunTrace& trace() const { return trace_; }
  const RunConfig& config() const { return config_; }
  bool finished() const { return trace_.termination != Termination::kRunning; }
  int cycles_run() const { return cycle_; }

 private:
  void pair_phase(CycleRecord& rec);

  RunConfig config_;
  CorpusStore& corpus_;
  KnowledgeState state_;
  RunTrace trace_;
  int cycle_ = 0;
};

const char* termination_name(Termination t);

}  // namespace pace

#endif  // PACE_ENGINE_HPP
