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

#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "pace/matcher.hpp"
#include "pace/nominator.hpp"

using namespace pace;
using namespace pace::testing;

namespace {

// Independent re-derivation of the slot construction, via reversed copies
// and std::mismatch.
TokenSeq oracle_common_suffix(TokenSeq a, TokenSeq b) {
  std::reverse(a.begin(), a.end());
  std::reverse(b.begin(), b.end());
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  TokenSeq out(a.begin(), ia);
  std::reverse(out.begin(), out.end());
  return out;
}

TokenSeq oracle_common_prefix(const TokenSeq& a, const TokenSeq& b) {
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return TokenSeq(a.begin(), ia);
}

EntityContextPair random_pair(WordGen& gen, const std::string& type) {
  EntityContextPair p;
  p.entity_type = type;
  p.name = gen.seq(1, 4);
  p.prefix = gen.seq(0, 5);
  p.suffix = gen.seq(0, 5);
  p.source = "doc" + std::to_string(gen.pick(3)) + ".txt";
  return p;
}

}  // namespace

TEST_CASE("nominate_pattern: self-comparison is the full context") {
  EntityContextPair x = make_pair_of("effect", "inject arbitrari php code",
                                     "that could allow attack to",
                                     "and execut rogu command on");
  auto cand = nominate_pattern(x, x);
  REQUIRE(cand.has_value());
  CHECK(cand->pattern.prefix_slot() == x.prefix);
  CHECK(cand->pattern.name_slot() == x.name);
  CHECK(cand->pattern.suffix_slot() == x.suffix);
  CHECK(cand->parents == std::set<std::string>{x.key()});
}

TEST_CASE("nominate_pattern: longest common prefix suffix from the name "
          "outward") {
  EntityContextPair a = make_pair_of("effect", "inject code",
                                     "that could allow attacker to",
                                     "and execut rogu");
  EntityContextPair b = make_pair_of("effect", "drop tabl",
                                     "bug could allow attacker to",
                                     "and delet file");
  auto cand = nominate_pattern(a, b);
  REQUIRE(cand.has_value());
  CHECK(cand->pattern.prefix_slot() == toks("could allow attacker to"));
  CHECK(cand->pattern.suffix_slot() == toks("and"));
  CHECK(cand->pattern.name_slot().empty());
}

TEST_CASE("nominate_pattern: no common tokens yields none") {
  EntityContextPair a = make_pair_of("effect", "alpha", "one two", "three");
  EntityContextPair b = make_pair_of("effect", "beta", "four five", "six");
  CHECK(!nominate_pattern(a, b).has_value());
}

TEST_CASE("nominate_pattern: type mismatch is an error") {
  EntityContextPair a = make_pair_of("effect", "alpha");
  EntityContextPair b = make_pair_of("software", "alpha");
  CHECK_THROWS_AS(nominate_pattern(a, b), std::invalid_argument);
}

TEST_CASE("nominate_pattern: algebra on fuzzed pairs") {
  WordGen gen(7, 6);
  for (int trial = 0; trial < 3000; ++trial) {
    EntityContextPair a = random_pair(gen, "t");
    EntityContextPair b = random_pair(gen, "t");
    auto ab = nominate_pattern(a, b);
    auto ba = nominate_pattern(b, a);

    // symmetry
    REQUIRE(ab.has_value() == ba.has_value());
    if (ab.has_value()) {
      REQUIRE(ab->pattern.key() == ba->pattern.key());

      // slots equal the independent oracle's
      REQUIRE(ab->pattern.prefix_slot() ==
              oracle_common_suffix(a.prefix, b.prefix));
      REQUIRE(ab->pattern.suffix_slot() ==
              oracle_common_prefix(a.suffix, b.suffix));
      REQUIRE(ab->pattern.name_slot() == oracle_common_suffix(a.name, b.name));

      // never all-empty
      REQUIRE(!(ab->pattern.prefix_slot().empty() &&
                ab->pattern.name_slot().empty() &&
                ab->pattern.suffix_slot().empty()));

      // parent-match consistency: the nominated pattern matches both parents
      REQUIRE(pattern_matches_pair(ab->pattern, a));
      REQUIRE(pattern_matches_pair(ab->pattern, b));

      // specificity: slots are suffixes/prefixes of the self-comparison's
      auto aa = nominate_pattern(a, a);
      REQUIRE(aa.has_value());
      REQUIRE(oracle_common_suffix(aa->pattern.prefix_slot(),
                                   ab->pattern.prefix_slot()) ==
              ab->pattern.prefix_slot());
      REQUIRE(oracle_common_prefix(aa->pattern.suffix_slot(),
                                   ab->pattern.suffix_slot()) ==
              ab->pattern.suffix_slot());
      REQUIRE(oracle_common_suffix(aa->pattern.name_slot(),
                                   ab->pattern.name_slot()) ==
              ab->pattern.name_slot());
    }
  }
}

TEST_CASE("nominate_all: a single pair yields its full-context pattern") {
  KnowledgeState state;
  EntityContextPair x = make_pair_of("software", "android", "flaw in",
                                     "and borrow");
  state.insert_pair(x);
  auto by_type = nominate_all(state);
  REQUIRE(by_type.count("software") == 1);
  REQUIRE(by_type.at("software").size() == 1);
  const CandidatePattern& cand = by_type.at("software")[0];
  CHECK(cand.pattern.prefix_slot() == x.prefix);
  CHECK(cand.pattern.name_slot() == x.name);
  CHECK(cand.pattern.suffix_slot() == x.suffix);
}

TEST_CASE("nominate_all: equals a brute-force enumeration on a 4-pair set") {
  KnowledgeState state;
  std::vector<EntityContextPair> pairs = {
      make_pair_of("t", "android", "flaw in", "and borrow"),
      make_pair_of("t", "window", "flaw in", "and steal"),
      make_pair_of("t", "linux kernel", "bug in", "and borrow"),
      make_pair_of("t", "php", "flaw in", "and borrow"),
  };
  for (const auto& p : pairs) state.insert_pair(p);

  // independent enumeration
  std::map<std::string, std::set<std::string>> expected;  // key -> parents
  for (size_t i = 0; i < pairs.size(); ++i) {
    for (size_t j = i; j < pairs.size(); ++j) {
      TokenSeq pre = oracle_common_suffix(pairs[i].prefix, pairs[j].prefix);
      TokenSeq suf = oracle_common_prefix(pairs[i].suffix, pairs[j].suffix);
      TokenSeq name = oracle_common_suffix(pairs[i].name, pairs[j].name);
      if (pre.empty() && suf.empty() && name.empty()) continue;
      std::string key = canonical_key("t", pre, name, suf);
      expected[key].insert(pairs[i].key());
      expected[key].insert(pairs[j].key());
    }
  }

  auto by_type = nominate_all(state);
  REQUIRE(by_type.count("t") == 1);
  const auto& cands = by_type.at("t");
  REQUIRE(cands.size() == expected.size());
  for (const CandidatePattern& c : cands) {
    CAPTURE(display_tokens(c.pattern.prefix_slot()));
    REQUIRE(expected.count(c.pattern.key()) == 1);
    REQUIRE(c.parents == expected.at(c.pattern.key()));
  }
  // combinatorial bound: at most k(k+1)/2 distinct candidates
  CHECK(cands.size() <= pairs.size() * (pairs.size() + 1) / 2);
}

TEST_CASE("nominate_all: known patterns are not re-nominated") {
  KnowledgeState state;
  EntityContextPair x = make_pair_of("software", "android", "flaw in", "");
  state.insert_pair(x);
  auto first = nominate_all(state);
  REQUIRE(first.at("software").size() == 1);
  state.insert_pattern(first.at("software")[0].pattern);
  auto second = nominate_all(state);
  CHECK(second.count("software") == 0);
}

TEST_CASE("nominate_all: same-document filter skips same-source comparisons") {
  KnowledgeState state;
  state.insert_pair(make_pair_of("t", "alpha", "common prefix", "",
                                 "doc1.txt"));
  state.insert_pair(make_pair_of("t", "beta", "common prefix", "",
                                 "doc1.txt"));
  CHECK(nominate_all(state, false).at("t").size() == 3);
  CHECK(nominate_all(state, true).count("t") == 0);

  // a third pair from another document revives cross-document comparisons
  state.insert_pair(make_pair_of("t", "gamma", "common prefix", "",
                                 "doc2.txt"));
  auto filtered = nominate_all(state, true);
  REQUIRE(filtered.count("t") == 1);
  for (const CandidatePattern& c : filtered.at("t")) {
    CHECK(c.parents.size() >= 2);  // never a lone self-comparison
  }
}

TEST_CASE("nominate_all: two entity types never mix") {
  KnowledgeState state;
  state.insert_pair(make_pair_of("a_type", "alpha", "shared prefix", ""));
  state.insert_pair(make_pair_of("b_type", "beta", "shared prefix", ""));
  auto by_type = nominate_all(state);
  REQUIRE(by_type.count("a_type") == 1);
  REQUIRE(by_type.count("b_type") == 1);
  for (const auto& [type, cands] : by_type) {
    for (const CandidatePattern& c : cands) {
      CHECK(c.pattern.entity_type() == type);
      CHECK(c.parents.size() == 1);  // only the self-comparison exists
    }
  }
}
