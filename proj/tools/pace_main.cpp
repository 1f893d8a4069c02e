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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pace/baseline.hpp"
#include "pace/engine.hpp"
#include "pace/io.hpp"

namespace {

struct RunOptions {
  std::string seeds;
  std::string corpus;
  std::string output;
  std::string trace;
  std::string stopwords;
  std::string filter;
  std::string algorithm = "pace";
  int iterations = 6;
  double entity_frac = 0.5;
  double pattern_frac = 0.25;
  double log_base = 2.0;
  int radius = 5;
  int max_name_tokens = 10;
  int ttl = 0;  // 0 = off
  bool same_doc_filter = false;
  int jobs = 1;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

pace::TextPipeline make_pipeline(const RunOptions& opt) {
  pace::Stoplist stoplist = opt.stopwords.empty()
                                ? pace::Stoplist::builtin()
                                : pace::Stoplist::from_file(opt.stopwords);
  return pace::TextPipeline(std::move(stoplist), opt.max_name_tokens);
}

int cmd_run(const RunOptions& opt) {
  pace::RunConfig config;
  config.iterations = opt.iterations;
  config.policy.entity_fraction = opt.entity_frac;
  config.policy.pattern_fraction = opt.pattern_frac;
  config.policy.log_base = opt.log_base;
  config.limits.context_radius = opt.radius;
  config.limits.max_name_tokens = opt.max_name_tokens;
  if (opt.ttl > 0) config.ttl = opt.ttl;
  config.same_doc_filter = opt.same_doc_filter;
  config.jobs = opt.jobs;
  config.algorithm = opt.algorithm == "traditional"
                         ? pace::Algorithm::kTraditional
                         : pace::Algorithm::kPace;

  pace::TextPipeline pipeline = make_pipeline(opt);
  pace::SeedReport seeds = pace::parse_seed_file(opt.seeds, pipeline,
                                                 config.limits);
  if (!seeds.ok()) {
    for (const std::string& v : seeds.violations)
      std::cerr << "seed error: " << v << "\n";
    return 1;
  }

  pace::CorpusStore corpus(pipeline);
  std::function<bool(const std::string&)> admit;
  if (!opt.filter.empty()) admit = pace::admission_from_file(opt.filter);
  size_t ingested = pace::ingest_directory(corpus, opt.corpus, admit, 0);
  std::cerr << "ingested " << ingested << " documents from " << opt.corpus
            << "\n";

  pace::RunPaths paths;
  paths.seeds = opt.seeds;
  paths.corpus = opt.corpus;
  paths.stopwords = opt.stopwords.empty() ? "builtin" : opt.stopwords;
  if (!opt.filter.empty()) paths.filter = opt.filter;

  std::string result;
  std::string trace;
  if (config.algorithm == pace::Algorithm::kPace) {
    pace::PaceEngine engine(config, corpus,
                            pace::seed_knowledge(seeds.data));
    engine.run();
    result = pace::result_json(config, paths, seeds.data, engine.state(),
                               engine.trace());
    trace = pace::trace_ndjson(config, engine.trace());
    std::cerr << "pace: " << engine.cycles_run() << " cycles, "
              << engine.trace().total_traversals << " traversals\n";
  } else {
    pace::TraditionalEngine engine(config, corpus,
                                   pace::seed_baseline_knowledge(seeds.data));
    engine.run();
    result = pace::result_json(config, paths, seeds.data, engine.state(),
                               engine.trace());
    trace = pace::trace_ndjson(config, engine.trace());
    std::cerr << "traditional: " << engine.cycles_run() << " cycles, "
              << engine.trace().total_traversals << " traversals\n";
  }
  write_file(opt.output, result);
  if (!opt.trace.empty()) write_file(opt.trace, trace);
  return 0;
}

int cmd_validate_seeds(const RunOptions& opt) {
  pace::TextPipeline pipeline = make_pipeline(opt);
  pace::Limits limits{opt.radius, opt.max_name_tokens};
  pace::SeedReport report = pace::parse_seed_file(opt.seeds, pipeline, limits);
  if (report.ok()) {
    std::cout << "ok: " << report.data.entity_types.size() << " entity types, "
              << report.data.pairs.size() << " pairs, "
              << report.data.patterns.size() << " patterns\n";
    return 0;
  }
  for (const std::string& v : report.violations)
    std::cout << "violation: " << v << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PACE bootstrapping entity extraction"};
  app.require_subcommand(1);
  RunOptions opt;

  CLI::App* run = app.add_subcommand("run", "run a bootstrapping cycle loop");
  run->add_option("--seeds", opt.seeds, "seed JSON file")->required();
  run->add_option("--corpus", opt.corpus, "directory of UTF-8 .txt documents")
      ->required();
  run->add_option("--output", opt.output, "result JSON path")->required();
  run->add_option("--trace", opt.trace, "trace NDJSON path");
  run->add_option("--iterations", opt.iterations, "maximum cycles")
      ->check(CLI::PositiveNumber);
  run->add_option("--entity-frac", opt.entity_frac,
                  "fraction of candidate pairs promoted per cycle");
  run->add_option("--pattern-frac", opt.pattern_frac,
                  "fraction of candidate patterns promoted per cycle");
  run->add_option("--log-base", opt.log_base, "logarithm base for scores");
  run->add_option("--radius", opt.radius, "context radius in tokens");
  run->add_option("--max-name-tokens", opt.max_name_tokens,
                  "maximum tokens in an entity name");
  run->add_option("--ttl", opt.ttl, "document lifetime in cycles (0 = off)");
  run->add_flag("--same-doc-filter", opt.same_doc_filter,
                "discard patterns supported only within one document");
  run->add_option("--algorithm", opt.algorithm, "pace or traditional")
      ->check(CLI::IsMember({"pace", "traditional"}));
  run->add_option("--stopwords", opt.stopwords, "stopword list file");
  run->add_option("--filter", opt.filter,
                  "file listing admitted document ids (default: all)");
  run->add_option("--jobs", opt.jobs, "worker threads for corpus scans")
      ->check(CLI::PositiveNumber);

  CLI::App* validate =
      app.add_subcommand("validate-seeds", "check a seed file");
  validate->add_option("seeds", opt.seeds, "seed JSON file")->required();
  validate->add_option("--stopwords", opt.stopwords, "stopword list file");
  validate->add_option("--radius", opt.radius, "context radius in tokens");
  validate->add_option("--max-name-tokens", opt.max_name_tokens,
                       "maximum tokens in an entity name");

  CLI11_PARSE(app, argc, argv);
  try {
    if (run->parsed()) return cmd_run(opt);
    if (validate->parsed()) return cmd_validate_seeds(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
