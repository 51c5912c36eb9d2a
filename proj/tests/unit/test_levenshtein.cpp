// Copyright 2026 The kchlint Authors
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

#include <doctest.h>

#include <random>

#include "core/levenshtein.h"
#include "oracles/levenshtein_oracle.h"

using kchlint::levenshtein;

namespace {

std::string random_string(std::mt19937_64& rng, std::size_t max_len) {
  static const std::string alphabet = "abcde_xy";
  std::size_t len = rng() % (max_len + 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
  return s;
}

}  // namespace

TEST_CASE("oracle sanity") {
  CHECK(oracle::levenshtein("kitten", "sitting") == 3);
  CHECK(oracle::levenshtein("", "") == 0);
  CHECK(oracle::levenshtein("flaw", "lawn") == 2);
}

TEST_CASE("levenshtein: examples") {
  CHECK(levenshtein("", "abc") == 3);
  CHECK(levenshtein("read_exel", "read_excel") == 1);
  CHECK(levenshtein("arrya", "array") == 2);
  CHECK(levenshtein("max_len_len_str", "max_len_str") == 4);
}

TEST_CASE("levenshtein: matches the oracle on random pairs") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    std::string a = random_string(rng, 15);
    std::string b = random_string(rng, 15);
    REQUIRE_MESSAGE(levenshtein(a, b) == oracle::levenshtein(a, b), a << " / " << b);
  }
}

TEST_CASE("levenshtein: metric properties") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    std::string a = random_string(rng, 8);
    std::string b = random_string(rng, 8);
    std::string c = random_string(rng, 8);
    CHECK(levenshtein(a, b) == levenshtein(b, a));
    CHECK((levenshtein(a, b) == 0) == (a == b));
    CHECK(levenshtein(a, c) <= levenshtein(a, b) + levenshtein(b, c));
  }
}

TEST_CASE("thresholds") {
  using kchlint::within_identifier_threshold;
  using kchlint::within_suggestion_threshold;
  CHECK(within_suggestion_threshold("read_exel", 1));
  CHECK(within_suggestion_threshold("arrya", 2));
  CHECK_FALSE(within_suggestion_threshold("gte", 2));  // ceil(3/3) = 1
  CHECK_FALSE(within_suggestion_threshold("averylongname", 3));
  CHECK(within_identifier_threshold("max_len_len_str", 4));
  CHECK_FALSE(within_identifier_threshold("max_len_len_str", 6));
  CHECK_FALSE(within_identifier_threshold("xqz", 2));
}
