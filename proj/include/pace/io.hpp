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

#ifndef PACE_IO_HPP
#define PACE_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pace/baseline.hpp"
#include "pace/domain.hpp"
#include "pace/engine.hpp"
#include "pace/text.hpp"

namespace pace {

// Seed file contents after normalization. Pair and pattern slot text is raw
// surface text in the file; it is tokenized, filtered and stemmed at load.
struct SeedData {
  std::vector<EntityType> entity_types;
  std::vector<EntityContextPair> pairs;
  std::vector<Pattern> patterns;
};

// Parses and checks a seed file. Violations (undeclared types, slot length
// bounds, empty or trivial slots after normalization, malformed JSON) are
// returned as human-readable strings; the seed data is only usable when the
// report is empty.
struct SeedReport {
  std::vector<std::string> violations;
  SeedData data;

  bool ok() const { return violations.empty(); }
};

SeedReport parse_seed_file(const std::string& path,
                           const TextPipeline& pipeline,
                           const Limits& limits = {});
SeedReport parse_seed_json(const std::string& json_text,
                           const TextPipeline& pipeline,
                           const Limits& limits = {});

// Builds the initial knowledge for a PACE run: seed pairs enter with
// learned_at 0 and source "seed"; every seed pattern's match statistic is
// initialized against the seed pairs. Throws std::invalid_argument when the
// seed data is empty (a run needs at least one pair or pattern).
KnowledgeState seed_knowledge(const SeedData& seeds);

// Same for the traditional baseline: names are kept without context.
BaselineKnowledge seed_baseline_knowledge(const SeedData& seeds);

// Everything echoed into the result file; excludes output paths and the jobs
// count so that re-running an echoed configuration (at any parallelism)
// reproduces the result byte for byte.
struct RunPaths {
  std::string seeds;
  std::string corpus;
  std::string stopwords = "builtin";
  std::optional<std::string> filter;
};

// Deterministic JSON views (sorted keys, canonical array orders).
std::string result_json(const RunConfig& config, const RunPaths& paths,
                        const SeedData& seeds, const KnowledgeState& state,
                        const RunTrace& trace);
std::string result_json(const RunConfig& config, const RunPaths& paths,
                        const SeedData& seeds, const BaselineKnowledge& state,
                        const BaselineTrace& trace);

// Line-delimited JSON trace, one event per line.
std::string trace_ndjson(const RunConfig& config, const RunTrace& trace);
std::string trace_ndjson(const RunConfig& config, const BaselineTrace& trace);

// Ingests every .txt file under `dir` (recursively, sorted by relative
// path); the document id is the relative path. `admit` may drop documents
// (the relevance hook); null admits everything.
size_t ingest_directory(CorpusStore& store, const std::string& dir,
                        const std::function<bool(const std::string&)>& admit =
                            nullptr,
                        int cycle = 0);

// Reads one id per line ('#' comments) for the --filter document admission
// list.
std::function<bool(const std::string&)> admission_from_file(
    const std::string& path);

}  // namespace pace

#endif  // PACE_IO_HPP
