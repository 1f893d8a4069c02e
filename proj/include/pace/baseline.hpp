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

#ifndef PACE_BASELINE_HPP
#define PACE_BASELINE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pace/corpus.hpp"
#include "pace/domain.hpp"
#include "pace/engine.hpp"

namespace pace {

// Traditional bootstrapping stores entity names without context.
struct KnownName {
  TokenSeq tokens;
  std::string surface;
  int learned_at = 0;
};

struct BaselineTypeKnowledge {
  std::map<std::string, KnownName> names;  // keyed by joined tokens
  std::map<std::string, Pattern> patterns;
};

struct BaselineKnowledge {
  std::map<std::string, BaselineTypeKnowledge> by_type;

  bool insert_name(const std::string& type, KnownName name);
  bool insert_pattern(const Pattern& pattern);
  size_t name_count() const;
};

// A pattern nominated from the context of a known-name occurrence, with the
// documents that supplied supporting occurrences.
struct BaselineCandidatePattern {
  Pattern pattern;
  std::set<std::string> support_docs;
  double score = 0.0;
};

// A name nominated by matching known patterns against the corpus.
struct BaselineCandidateName {
  std::string entity_type;
  TokenSeq name;
  std::string surface;
  std::set<std::string> nominated_by;  // pattern keys
  std::set<std::string> sources;       // document ids
  double score = 0.0;
};

struct BaselineCycleRecord {
  int cycle = 0;
  std::map<std::string, std::vector<BaselineCandidatePattern>>
      pattern_candidates;
  std::map<std::string, std::vector<Pattern>> promoted_patterns;
  std::map<std::string, std::vector<BaselineCandidateName>> name_candidates;
  std::map<std::string, std::vector<KnownName>> promoted_names;
  int traversals = 0;
  std::vector<std::string> evicted;

  size_t promoted_name_count() const;
};

struct BaselineTrace {
  std::vector<BaselineCycleRecord> cycles;
  Termination termination = Termination::kRunning;
  int total_traversals = 0;
};

// The instrumented traditional bootstrapping cycle: traversal one locates
// known-name occurrences and nominates a maximally specific pattern from
// each occurrence's context, scoring candidates against the corpus's context
// windows; traversal two matches known patterns to nominate names. Shares
// the text pipeline, chunk-based matching, scoring formulas and promotion
// policy with PACE so the only variables are context storage and traversal
// structure.
class TraditionalEngine {
 public:
  TraditionalEngine(RunConfig config, CorpusStore& corpus,
                    BaselineKnowledge seeded);

  const BaselineCycleRecord& step();
  const BaselineTrace& run();

  const BaselineKnowledge& state() const { return state_; }
  const BaselineTrace& trace() const { return trace_; }
  bool finished() const { return trace_.termination != Termination::kRunning; }
  int cycles_run() const { return cycle_; }

 private:
  RunConfig config_;
  CorpusStore& corpus_;
  BaselineKnowledge state_;
  BaselineTrace trace_;
  int cycle_ = 0;
};

}  // namespace pace

#endif  // PACE_BASELINE_HPP
