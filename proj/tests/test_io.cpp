// Copyright 2026 The qsd authors
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

#include <cstdio>
#include <string>

#include "doctest.h"
#include "qsd/ensemble.hpp"
#include "qsd/errors.hpp"
#include "qsd/random.hpp"
#include "qsd/serialization.hpp"
#include "reference.hpp"
#include "test_support.hpp"

using namespace qsd;

TEST_CASE("format_real pins 17 significant digits") {
  CHECK(format_real(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(-0.25) == "-0.25");
}

TEST_CASE("digest matches the reference vectors") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64(std::string_view("a")) == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("ensemble text round trip is bit exact") {
  // irrational entries exercise the full 17-digit path
  const Ensemble original = random_ensemble(2024, 3, 3);
  const std::string text = to_json(original);
  const Ensemble back = parse_ensemble(text);
  REQUIRE(back.m() == original.m());
  for (std::size_t i = 0; i < original.m(); ++i) {
    CHECK(back.priors[i] == original.priors[i]);
    REQUIRE(back.states[i].dim() == original.states[i].dim());
    CHECK(test::max_abs_diff(back.states[i], original.states[i]) == 0.0);
  }
  // and the re-rendered document is byte-identical
  CHECK(to_json(back) == text);
}

TEST_CASE("povm file round trip preserves the kind tag") {
  const Povm original = ref::case5_unambiguous_povm();
  const std::string path = "/tmp/qsd_test_povm.json";
  save_povm(path, original);
  const Povm back = load_povm(path);
  CHECK(back.kind == Povm::Kind::unambiguous);
  REQUIRE(back.elements.size() == original.elements.size());
  for (std::size_t i = 0; i < original.elements.size(); ++i) {
    CHECK(test::max_abs_diff(back.elements[i], original.elements[i]) == 0.0);
  }
  std::remove(path.c_str());
}

TEST_CASE("ensemble file round trip") {
  const Ensemble original = ref::case1();
  const std::string path = "/tmp/qsd_test_ensemble.json";
  save_ensemble(path, original);
  const Ensemble back = load_ensemble(path);
  CHECK(to_json(back) == to_json(original));
  std::remove(path.c_str());
}

TEST_CASE("parse failures carry diagnostics") {
  CHECK_THROWS_AS(parse_ensemble("not json {"), ParseError);
  CHECK_THROWS_AS(parse_ensemble("{\"dim\": 2}"), ParseError);
  CHECK_THROWS_AS(load_ensemble("/nonexistent/path.json"), ParseError);

  // structurally fine, sums to 0.98: a validation error, not a parse error
  const std::string bad_priors =
      "{\"dim\": 2, \"priors\": [0.49, 0.49], \"states\": ["
      "[[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],"
      "[[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]]}";
  CHECK_THROWS_AS(parse_ensemble(bad_priors), BadPrior);

  // complex scalar must be a [re, im] pair
  const std::string bad_pair =
      "{\"dim\": 2, \"priors\": [0.5, 0.5], \"states\": ["
      "[[1.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],"
      "[[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]]}";
  CHECK_THROWS_AS(parse_ensemble(bad_pair), ParseError);

  const std::string bad_kind =
      "{\"dim\": 2, \"kind\": \"sideways\", \"elements\": ["
      "[[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],"
      "[[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]]}";
  CHECK_THROWS_AS(parse_povm(bad_kind), ParseError);
}

TEST_CASE("json writer layout is stable") {
  JsonWriter w;
  w.begin_object();
  w.key("name").value("x");
  w.key("flag").value(true);
  w.key("nothing").null_value();
  w.key("list").begin_array(true);
  w.value(1.0 / 3.0);
  w.value(std::int64_t{-2});
  w.end_array();
  w.key("spliced").raw_value("{\"inner\": 1}");
  w.end_object();
  CHECK(w.take() ==
        "{\n  \"name\": \"x\",\n  \"flag\": true,\n  \"nothing\": null,\n"
        "  \"list\": [0.33333333333333331, -2],\n"
        "  \"spliced\": {\"inner\": 1}\n}\n");
}
