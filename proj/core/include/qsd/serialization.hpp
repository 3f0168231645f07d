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

#ifndef QSD_SERIALIZATION_HPP_
#define QSD_SERIALIZATION_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsd/ensemble.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

// Every real number leaving this library in text form goes through here:
// %.17g, which round-trips any IEEE-754 double bit-exactly and is locale
// independent (the library never calls setlocale).
std::string format_real(double x);

// Minimal JSON emitter with deterministic output: fields appear in insertion
// order, reals are printed by format_real, and layout (two-space indentation,
// optional single-line arrays) depends only on the call sequence. Parsing is
// delegated to a full JSON library; this class exists because serializers
// that re-derive shortest representations cannot promise the fixed 17
// significant digits the file format and report formats require.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  // compact = true renders the whole array on one line.
  JsonWriter& begin_array(bool compact = false);
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(double x);
  JsonWriter& value(std::int64_t x);
  JsonWriter& value(std::uint64_t x);
  JsonWriter& value(int x) { return value(static_cast<std::int64_t>(x)); }
  JsonWriter& value(bool b);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& null_value();
  // Splices pre-rendered JSON into the current slot verbatim. The caller
  // owns its validity.
  JsonWriter& raw_value(std::string_view json_text);

  // Finishes the document (trailing newline included) and returns it.
  std::string take();

 private:
  struct Frame {
    char kind;  // '{' or '['
    bool compact;
    bool has_items;
  };

  void prepare_slot();
  void newline_indent();

  std::string out_;
  std::vector<Frame> stack_;
  bool pending_key_ = false;
};

// File format, one JSON document per object, UTF-8, reals at 17 significant
// digits (bit-exact round trip):
//
//   ensemble: {"dim": n, "priors": [p...], "states": [[[re, im] x n*n]...]}
//   povm:     {"dim": n, "kind": "ambiguous"|"unambiguous",
//              "elements": [[[re, im] x n*n]...]}
//
// Matrices are flat row-major lists of [re, im] pairs. Loading validates
// eagerly: structural problems throw ParseError (with position/field
// diagnostics), semantic problems throw the validation errors of
// ensemble.hpp.
// Emits one matrix into an open writer as the flat row-major [re, im] pair
// list the file format uses (for embedding matrices in larger reports).
void write_matrix(JsonWriter& w, const ComplexMatrix& m);

std::string to_json(const Ensemble& e);
std::string to_json(const Povm& p);
Ensemble parse_ensemble(const std::string& text, const Tolerances& tol = {});
Povm parse_povm(const std::string& text, const Tolerances& tol = {});

void save_ensemble(const std::string& path, const Ensemble& e);
Ensemble load_ensemble(const std::string& path, const Tolerances& tol = {});
void save_povm(const std::string& path, const Povm& p);
Povm load_povm(const std::string& path, const Tolerances& tol = {});

// FNV-1a 64-bit digest, printed as 16 hex digits; used for input stamps in
// reports and for config hashes.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace qsd

#endif  // QSD_SERIALIZATION_HPP_
