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

#include <cctype>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "pace/porter.hpp"
#include "pace/text.hpp"

using namespace pace;

namespace {

struct StemPair {
  const char* word;
  const char* stem;
};

// Single-pass stems, frozen from an independently written reference
// implementation of the published algorithm (itself checked against the
// algorithm description's per-step examples).
constexpr StemPair kPorterPairs[] = {
    {"caresses", "caress"},   {"ponies", "poni"},
    {"ties", "ti"},           {"caress", "caress"},
    {"cats", "cat"},          {"feed", "feed"},
    {"agreed", "agre"},       {"plastered", "plaster"},
    {"bled", "bled"},         {"motoring", "motor"},
    {"sing", "sing"},         {"conflated", "conflat"},
    {"troubled", "troubl"},   {"sized", "size"},
    {"hopping", "hop"},       {"tanned", "tan"},
    {"falling", "fall"},      {"hissing", "hiss"},
    {"fizzed", "fizz"},       {"failing", "fail"},
    {"filing", "file"},       {"happy", "happi"},
    {"sky", "sky"},           {"relational", "relat"},
    {"conditional", "condit"}, {"rational", "ration"},
    {"valenci", "valenc"},    {"hesitanci", "hesit"},
    {"digitizer", "digit"},   {"conformabli", "conform"},
    {"radicalli", "radic"},   {"differentli", "differ"},
    {"vileli", "vile"},       {"analogousli", "analog"},
    {"vietnamization", "vietnam"}, {"predication", "predic"},
    {"operator", "oper"},     {"feudalism", "feudal"},
    {"decisiveness", "decis"}, {"hopefulness", "hope"},
    {"callousness", "callous"}, {"formaliti", "formal"},
    {"sensitiviti", "sensit"}, {"sensibiliti", "sensibl"},
    {"triplicate", "triplic"}, {"formative", "form"},
    {"formalize", "formal"},  {"electriciti", "electr"},
    {"electrical", "electr"}, {"hopeful", "hope"},
    {"goodness", "good"},     {"revival", "reviv"},
    {"allowance", "allow"},   {"inference", "infer"},
    {"airliner", "airlin"},   {"gyroscopic", "gyroscop"},
    {"adjustable", "adjust"}, {"defensible", "defens"},
    {"irritant", "irrit"},    {"replacement", "replac"},
    {"adjustment", "adjust"}, {"dependent", "depend"},
    {"adoption", "adopt"},    {"communism", "commun"},
    {"activate", "activ"},    {"angulariti", "angular"},
    {"homologous", "homolog"}, {"effective", "effect"},
    {"bowdlerize", "bowdler"}, {"probate", "probat"},
    {"rate", "rate"},         {"cease", "ceas"},
    {"generalizations", "gener"}, {"oscillators", "oscil"},
    {"processes", "process"}, {"exploits", "exploit"},
    {"android", "android"},   {"vulnerability", "vulner"},
    {"attackers", "attack"},  {"previously", "previous"},
    {"unknown", "unknown"},   {"flaws", "flaw"},
    {"injection", "inject"},  {"arbitrary", "arbitrari"},
    {"execution", "execut"},  {"malware", "malwar"},
    {"abuses", "abus"},       {"borrows", "borrow"},
    {"techniques", "techniqu"}, {"windows", "window"},
    {"applications", "applic"}, {"exploitable", "exploit"},
    {"unlikely", "unlik"},    {"remote", "remot"},
    {"code", "code"},         {"category", "categori"},
    {"bug", "bug"},
};

std::string random_word(std::mt19937& rng) {
  static const char* kSuffixes[] = {
      "",     "s",        "es",     "ed",       "ing",     "eed",
      "ies",  "ly",       "ational", "tional",  "ization", "ousness",
      "iviti", "ful",     "ness",   "ative",    "alize",   "al",
      "ance", "ement",    "ion",    "e",        "y",       "ers",
      "ment", "able",
  };
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> letter(0, 25);
  std::uniform_int_distribution<size_t> suffix(
      0, sizeof(kSuffixes) / sizeof(kSuffixes[0]) - 1);
  std::string w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back(static_cast<char>('a' + letter(rng)));
  return w + kSuffixes[suffix(rng)];
}

}  // namespace

TEST_CASE("porter: frozen reference vocabulary") {
  for (const StemPair& p : kPorterPairs) {
    CAPTURE(p.word);
    CHECK(porter_stem(p.word) == p.stem);
  }
}

TEST_CASE("porter: short words and non-alphabetic input unchanged") {
  CHECK(porter_stem("do") == "do");
  CHECK(porter_stem("a") == "a");
  CHECK(porter_stem("cve-2013-3660") == "cve-2013-3660");
  CHECK(porter_stem("windows8") == "windows8");
}

TEST_CASE("normalize: lowercases and stems") {
  TextPipeline pipe;
  CHECK(pipe.normalize("Android") == "android");
  CHECK(pipe.normalize("processes") == "process");
  CHECK(pipe.normalize("exploits") == "exploit");
  CHECK(pipe.normalize("CVE-2013-3660") == "cve-2013-3660");
}

TEST_CASE("normalize: single-pass porter residues are iterated out") {
  TextPipeline pipe;
  // porter("agreed") = "agre" but porter("agre") = "agr"; stored knowledge
  // must be stable under re-normalization.
  CHECK(pipe.normalize("agreed") == "agr");
  CHECK(pipe.normalize("previously") == "previou");
  CHECK(pipe.normalize("abuses") == "abu");
}

TEST_CASE("normalize: idempotent over fuzzed words") {
  TextPipeline pipe;
  std::mt19937 rng(1234);
  for (int i = 0; i < 5000; ++i) {
    std::string w = random_word(rng);
    std::string once = pipe.normalize(w);
    CAPTURE(w);
    REQUIRE(pipe.normalize(once) == once);
    REQUIRE(!once.empty());
  }
}

TEST_CASE("tokenize: empty input") {
  TextPipeline pipe;
  CHECK(pipe.tokenize("").empty());
}

TEST_CASE("tokenize: words carry indices") {
  TextPipeline pipe;
  auto tokens = pipe.tokenize("allow attacker to");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].surface == "allow");
  CHECK(tokens[1].surface == "attacker");
  CHECK(tokens[2].surface == "to");
  CHECK(tokens[0].index == 0);
  CHECK(tokens[1].index == 1);
  CHECK(tokens[2].index == 2);
  CHECK(tokens[1].normalized == "attack");
  CHECK(!tokens[2].is_stopword);  // "to" breaks chunks but stays in the stream
}

TEST_CASE("tokenize: punctuation becomes standalone stopword tokens") {
  TextPipeline pipe;
  auto tokens = pipe.tokenize("flaws in Android, and...");
  std::vector<std::string> surfaces;
  for (const auto& t : tokens) surfaces.push_back(t.surface);
  CHECK(surfaces == std::vector<std::string>{"flaws", "in", "Android", ",",
                                             "and", ".", ".", "."});
  for (const auto& t : tokens) {
    if (t.surface == "," || t.surface == ".") {
      CHECK(t.is_stopword);
      CHECK(!t.normalized.empty());
    }
  }
}

TEST_CASE("tokenize: intra-word hyphens and dots survive") {
  TextPipeline pipe;
  auto tokens = pipe.tokenize("see CVE-2013-3660 (and v1.2.3)");
  bool found_cve = false;
  bool found_ver = false;
  for (const auto& t : tokens) {
    if (t.surface == "CVE-2013-3660") found_cve = true;
    if (t.surface == "v1.2.3") found_ver = true;
  }
  CHECK(found_cve);
  CHECK(found_ver);
}

TEST_CASE("tokenize: surfaces preserve the text's word content") {
  TextPipeline pipe;
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> nch(0, 60);
  std::uniform_int_distribution<int> ch(32, 126);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    int n = nch(rng);
    for (int i = 0; i < n; ++i) text.push_back(static_cast<char>(ch(rng)));
    std::string concat;
    for (const auto& t : pipe.tokenize(text)) concat += t.surface;
    std::string nonspace;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) nonspace.push_back(c);
    CAPTURE(text);
    REQUIRE(concat == nonspace);
  }
}

TEST_CASE("filtered_stream: removes stopwords, keeps indices") {
  TextPipeline pipe(Stoplist::from_words({"to"}));
  auto tokens = pipe.tokenize("allow attacker to");
  auto filtered = pipe.filtered_stream(tokens);
  REQUIRE(filtered.size() == 2);
  CHECK(filtered[0].surface == "allow");
  CHECK(filtered[1].surface == "attacker");
  CHECK(filtered[0].index == 0);
  CHECK(filtered[1].index == 1);
}

TEST_CASE("filtered_stream: all stopwords yields empty") {
  TextPipeline pipe;
  auto filtered = pipe.filtered_stream(pipe.tokenize("the a is , ."));
  CHECK(filtered.empty());
}

TEST_CASE("filtered_stream: shipped stoplist on a known phrase") {
  TextPipeline pipe;
  auto filtered =
      pipe.filtered_stream(pipe.tokenize("the malware also abuses a"));
  std::vector<std::string> surfaces;
  for (const auto& t : filtered) surfaces.push_back(t.surface);
  CHECK(surfaces == std::vector<std::string>{"malware", "also", "abuses"});
  // indices refer to the raw token sequence
  CHECK(filtered[0].index == 1);
  CHECK(filtered[1].index == 2);
  CHECK(filtered[2].index == 3);
}

TEST_CASE("filtered_stream: projection") {
  TextPipeline pipe;
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    for (int i = 0; i < 12; ++i) text += random_word(rng) + " ";
    auto once = pipe.filtered_stream(pipe.tokenize(text));
    auto twice = pipe.filtered_stream(once);
    REQUIRE(once.size() == twice.size());
  }
}

TEST_CASE("chunk: an all-eligible phrase is one span") {
  TextPipeline pipe;
  auto filtered = pipe.analyze("inject arbitrary PHP code");
  auto chunks = pipe.chunk(filtered);
  REQUIRE(chunks.size() == 1);
  CHECK(chunks[0] == ChunkSpan{0, 4});
}

TEST_CASE("chunk: empty stream") {
  TextPipeline pipe;
  CHECK(pipe.chunk({}).empty());
}

TEST_CASE("chunk: greedy split at the cap") {
  TextPipeline pipe;
  std::string text;
  for (int i = 0; i < 12; ++i) text += "kernel ";
  auto filtered = pipe.analyze(text);
  REQUIRE(filtered.size() == 12);
  auto chunks = pipe.chunk(filtered);
  REQUIRE(chunks.size() == 2);
  CHECK(chunks[0] == ChunkSpan{0, 10});
  CHECK(chunks[1] == ChunkSpan{10, 12});
}

TEST_CASE("chunk: closed-class words break runs") {
  TextPipeline pipe;
  auto filtered =
      pipe.analyze("The worm exploits previously unknown flaws in Android and "
                   "borrows techniques from Windows");
  auto chunks = pipe.chunk(filtered);
  bool has_android_alone = false;
  for (auto c : chunks) {
    if (c.length() == 1 && filtered[c.start].normalized == "android")
      has_android_alone = true;
  }
  CHECK(has_android_alone);
}

TEST_CASE("chunk: spans never overlap, never exceed the cap, stay ordered") {
  TextPipeline pipe;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    int n = static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) text += random_word(rng) + " ";
    auto filtered = pipe.analyze(text);
    auto chunks = pipe.chunk(filtered);
    int prev_end = 0;
    for (auto c : chunks) {
      REQUIRE(c.start >= prev_end);
      REQUIRE(c.length() >= 1);
      REQUIRE(c.length() <= 10);
      REQUIRE(c.end <= static_cast<int>(filtered.size()));
      prev_end = c.end;
    }
    // determinism
    REQUIRE(pipe.chunk(filtered) == chunks);
  }
}

TEST_CASE("stoplist: file loading with comments") {
  std::string path = "test_stopwords_tmp.txt";
  {
    std::ofstream out(path);
    out << "# comment line\nthe\nTo  \n\n  a # trailing\n";
  }
  Stoplist list = Stoplist::from_file(path);
  CHECK(list.size() == 3);
  CHECK(list.contains("the"));
  CHECK(list.contains("to"));
  CHECK(list.contains("a"));
  CHECK(!list.contains("malware"));
  std::remove(path.c_str());
  CHECK_THROWS_AS(Stoplist::from_file("no_such_file_anywhere.txt"),
                  std::runtime_error);
}

TEST_CASE("stoplist: builtin honors the documented memberships") {
  Stoplist list = Stoplist::builtin();
  CHECK(list.contains("the"));
  CHECK(list.contains("a"));
  CHECK(!list.contains("to"));  // chunk blocker, not a stopword
  CHECK(!list.contains("in"));
  CHECK(!list.contains("also"));
  CHECK(!list.contains("could"));
  CHECK(list.size() >= 40);
}
