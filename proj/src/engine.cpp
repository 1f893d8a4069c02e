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

#include "pace/engine.hpp"

#include <stdexcept>

namespace pace {

size_t CycleRecord::promoted_pair_count() const {
  size_t n = 0;
  for (const auto& [type, pairs] : promoted_pairs) n += pairs.size();
  return n;
}

size_t CycleRecord::promoted_pattern_count() const {
  size_t n = 0;
  for (const auto& [type, patterns] : promoted_patterns) n += patterns.size();
  return n;
}

void initialize_matched_names(
    Pattern& pattern, const std::map<std::string, EntityContextPair>& pairs) {
  for (const auto& [key, pair] : pairs) {
    if (pattern_matches_pair(pattern, pair))
      pattern.record_matched_name(pair.name_key());
  }
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::kRunning:
      return "running";
    case Termination::kFixpoint:
      return "fixpoint";
    case Termination::kIterationCap:
      return "iteration_cap";
  }
  return "unknown";
}

PaceEngine::PaceEngine(RunConfig config, CorpusStore& corpus,
                       KnowledgeState seeded)
    : config_(std::move(config)), corpus_(corpus), state_(std::move(seeded)) {
  if (config_.iterations < 1)
    throw std::invalid_argument("iterations must be >= 1");
}

CycleRecord PaceEngine::run_pattern_phase(int cycle_number) {
  CycleRecord rec;
  rec.cycle = cycle_number;
  auto candidates = nominate_all(state_, config_.same_doc_filter);
  for (auto& [type, cands] : candidates) {
    std::vector<ScoredRef> scored;
    scored.reserve(cands.size());
    for (size_t i = 0; i < cands.size(); ++i) {
      double rank = score_pattern_rank(cands[i], state_);
      cands[i].score = score_in_base(rank, config_.policy.log_base);
      scored.push_back({rank, cands[i].pattern.key(), i});
    }
    for (size_t idx : promote(scored, config_.policy.pattern_fraction)) {
      Pattern p = cands[idx].pattern;
      p.set_promotion_score(cands[idx].score);
      initialize_matched_names(p, state_.by_type[type].pairs);
      state_.insert_pattern(p);
      rec.promoted_patterns[type].push_back(std::move(p));
    }
    rec.pattern_candidates[type] = std::move(cands);
  }
  return rec;
}

void PaceEngine::pair_phase(CycleRecord& rec) {
  int traversals_before = corpus_.scan_counter().traversals();
  FindResult found = find_candidates(state_, corpus_, config_.limits.context_radius,
                                     config_.jobs);
  rec.f_updates = apply_known_name_matches(state_, found);

  PatternResolver resolve = resolver_for(state_);
  for (auto& [type, cands] : found.candidates_by_type) {
    std::vector<ScoredRef> scored;
    scored.reserve(cands.size());
    for (size_t i = 0; i < cands.size(); ++i) {
      double rank = basilisk_entity_rank(cands[i].nominated_by, resolve);
      cands[i].score = score_in_base(rank, config_.policy.log_base);
      scored.push_back({rank, cands[i].pair.key(), i});
    }
    for (size_t idx : promote(scored, config_.policy.entity_fraction)) {
      EntityContextPair pair = cands[idx].pair;
      pair.learned_at = rec.cycle;
      state_.insert_pair(pair);
      rec.promoted_pairs[type].push_back(std::move(pair));
    }
    rec.pair_candidates[type] = std::move(cands);
  }
  rec.traversals += corpus_.scan_counter().traversals() - traversals_before;
}

const CycleRecord& PaceEngine::step() {
  if (finished())
    throw std::logic_error("engine already terminated");
  ++cycle_;
  CycleRecord rec = run_pattern_phase(cycle_);
  pair_phase(rec);
  rec.evicted = corpus_.expire(cycle_, config_.ttl);

  bool fixpoint = rec.promoted_pair_count() == 0;
  trace_.cycles.push_back(std::move(rec));
  trace_.total_traversals = corpus_.scan_counter().traversals();
  if (fixpoint) {
    trace_.termination = Termination::kFixpoint;
  } else if (cycle_ >= config_.iterations) {
    trace_.termination = Termination::kIterationCap;
  }
  return trace_.cycles.back();
}

const RunTrace& PaceEngine::run() {
  while (!finished()) step();
  return trace_;
}

}  // namespace pace
