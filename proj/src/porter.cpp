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

#include "pace/porter.hpp"

#include <algorithm>
#include <array>
#include <string_view>

namespace pace {
namespace {

bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// 'y' counts as a vowel when preceded by a consonant; at position 0 it is a
// consonant.
bool is_consonant(std::string_view w, size_t i) {
  char c = w[i];
  if (is_vowel_letter(c)) return false;
  if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
  return true;
}

// m in the [C](VC){m}[V] decomposition.
int measure(std::string_view stem) {
  int m = 0;
  size_t i = 0;
  size_t n = stem.size();
  while (i < n && is_consonant(stem, i)) ++i;
  while (i < n) {
    while (i < n && !is_consonant(stem, i)) ++i;
    if (i >= n) break;
    while (i < n && is_consonant(stem, i)) ++i;
    ++m;
  }
  return m;
}

bool contains_vowel(std::string_view stem) {
  for (size_t i = 0; i < stem.size(); ++i)
    if (!is_consonant(stem, i)) return true;
  return false;
}

bool ends_double_consonant(std::string_view w) {
  size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o condition: stem ends consonant-vowel-consonant and the final consonant
// is not w, x or y.
bool ends_cvc(std::string_view w) {
  size_t n = w.size();
  if (n < 3) return false;
  if (is_consonant(w, n - 3) && !is_consonant(w, n - 2) &&
      is_consonant(w, n - 1)) {
    char last = w[n - 1];
    return last != 'w' && last != 'x' && last != 'y';
  }
  return false;
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string step1a(std::string w) {
  if (ends_with(w, "sses")) return w.substr(0, w.size() - 2);
  if (ends_with(w, "ies")) return w.substr(0, w.size() - 2);
  if (ends_with(w, "ss")) return w;
  if (ends_with(w, "s")) return w.substr(0, w.size() - 1);
  return w;
}

std::string step1b(std::string w) {
  if (ends_with(w, "eed")) {
    std::string_view stem(w.data(), w.size() - 3);
    if (measure(stem) > 0) w.pop_back();
    return w;
  }
  bool fired = false;
  if (ends_with(w, "ed")) {
    std::string_view stem(w.data(), w.size() - 2);
    if (contains_vowel(stem)) {
      w.resize(w.size() - 2);
      fired = true;
    }
  } else if (ends_with(w, "ing")) {
    std::string_view stem(w.data(), w.size() - 3);
    if (contains_vowel(stem)) {
      w.resize(w.size() - 3);
      fired = true;
    }
  }
  if (fired) {
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
      w.push_back('e');
    } else if (ends_double_consonant(w)) {
      char last = w.back();
      if (last != 'l' && last != 's' && last != 'z') w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
      w.push_back('e');
    }
  }
  return w;
}

std::string step1c(std::string w) {
  if (ends_with(w, "y") &&
      contains_vowel(std::string_view(w.data(), w.size() - 1))) {
    w.back() = 'i';
  }
  return w;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Longest matching suffix wins; the rule then applies only if the remaining
// stem satisfies measure(stem) > min_measure, otherwise the step is a no-op.
std::string rewrite_longest(std::string w, const Rule* rules, size_t count,
                            int min_measure) {
  const Rule* best = nullptr;
  for (size_t i = 0; i < count; ++i) {
    if (ends_with(w, rules[i].suffix)) {
      if (best == nullptr || rules[i].suffix.size() > best->suffix.size())
        best = &rules[i];
    }
  }
  if (best == nullptr) return w;
  std::string_view stem(w.data(), w.size() - best->suffix.size());
  if (measure(stem) > min_measure)
    return std::string(stem) + std::string(best->replacement);
  return w;
}

constexpr std::array<Rule, 20> kStep2Rules = {{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
    {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
    {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
    {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
    {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
    {"iviti", "ive"},   {"biliti", "ble"},
}};

constexpr std::array<Rule, 7> kStep3Rules = {{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
}};

constexpr std::array<std::string_view, 19> kStep4Suffixes = {
    "al",    "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
    "ment",  "ent",  "ion",  "ou",  "ism", "ate",  "iti",  "ous", "ive",
    "ize",
};

std::string step4(std::string w) {
  std::string_view best;
  for (std::string_view suffix : kStep4Suffixes) {
    if (ends_with(w, suffix) && suffix.size() > best.size()) best = suffix;
  }
  if (best.empty()) return w;
  std::string_view stem(w.data(), w.size() - best.size());
  if (measure(stem) > 1) {
    if (best == "ion" && !(ends_with(stem, "s") || ends_with(stem, "t")))
      return w;
    return std::string(stem);
  }
  return w;
}

std::string step5a(std::string w) {
  if (ends_with(w, "e")) {
    std::string_view stem(w.data(), w.size() - 1);
    int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
  }
  return w;
}

std::string step5b(std::string w) {
  if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l')
    w.pop_back();
  return w;
}

}  // namespace

std::string porter_stem(const std::string& word) {
  if (word.size() <= 2) return word;
  for (char c : word) {
    if (c < 'a' || c > 'z') return word;
  }
  std::string w = word;
  w = step1a(std::move(w));
  w = step1b(std::move(w));
  w = step1c(std::move(w));
  w = rewrite_longest(std::move(w), kStep2Rules.data(), kStep2Rules.size(), 0);
  w = rewrite_longest(std::move(w), kStep3Rules.data(), kStep3Rules.size(), 0);
  w = step4(std::move(w));
  w = step5a(std::move(w));
  w = step5b(std::move(w));
  return w;
}

}  // namespace pace
