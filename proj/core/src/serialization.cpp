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

#include "qsd/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "qsd/errors.hpp"

namespace qsd {

// Matrices serialize as flat row-major [re, im] pair lists.
void write_matrix(JsonWriter& w, const ComplexMatrix& m) {
  w.begin_array(/*compact=*/true);
  for (const Complex& v : m.entries()) {
    w.begin_array(/*compact=*/true);
    w.value(v.real());
    w.value(v.imag());
    w.end_array();
  }
  w.end_array();
}

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* name,
                          const char* object_kind) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw ParseError(std::string(object_kind) + ": missing field \"" + name +
                     "\"");
  }
  return *it;
}

void reject_unknown_fields(const json& doc,
                           std::initializer_list<const char*> known,
                           const char* object_kind) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) {
      throw ParseError(std::string(object_kind) + ": unknown field \"" +
                       it.key() + "\"");
    }
  }
}

std::size_t parse_dim(const json& doc, const char* object_kind) {
  const json& d = require_field(doc, "dim", object_kind);
  if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0) {
    throw ParseError(std::string(object_kind) +
                     ": \"dim\" must be a positive integer");
  }
  return d.get<std::size_t>();
}

ComplexMatrix parse_matrix(const json& node, std::size_t dim,
                           const std::string& label) {
  if (!node.is_array() || node.size() != dim * dim) {
    throw ParseError(label + ": expected " + std::to_string(dim * dim) +
                     " [re, im] pairs");
  }
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (std::size_t k = 0; k < node.size(); ++k) {
    const json& pair = node[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw ParseError(label + ", entry " + std::to_string(k) +
                       ": malformed complex scalar (want [re, im])");
    }
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return ComplexMatrix::from_entries(dim, std::move(entries));
}

json parse_document(const std::string& text, const char* object_kind) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) {
      throw ParseError(std::string(object_kind) +
                       ": top-level value must be an object");
    }
    return doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(object_kind) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) throw ParseError("error while reading " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
  if (!out.good()) throw ParseError("error while writing " + path);
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

JsonWriter& JsonWriter::begin_object() {
  prepare_slot();
  out_ += '{';
  stack_.push_back({'{', false, false});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const Frame f = stack_.back();
  stack_.pop_back();
  if (f.has_items) newline_indent();
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array(bool compact) {
  prepare_slot();
  out_ += '[';
  stack_.push_back({'[', compact, false});
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const Frame f = stack_.back();
  stack_.pop_back();
  if (f.has_items && !f.compact) newline_indent();
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  prepare_slot();
  out_ += '"';
  out_.append(name);
  out_ += "\": ";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  prepare_slot();
  out_ += format_real(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t x) {
  prepare_slot();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t x) {
  prepare_slot();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  prepare_slot();
  out_ += b ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::null_value() {
  prepare_slot();
  out_ += "null";
  return *this;
}

JsonWriter& JsonWriter::raw_value(std::string_view json_text) {
  prepare_slot();
  out_ += json_text;
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  prepare_slot();
  out_ += '"';
  for (char c : s) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      case '\r': out_ += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out_ += buf;
        } else {
          out_ += c;  // UTF-8 passes through untouched
        }
    }
  }
  out_ += '"';
  return *this;
}

std::string JsonWriter::take() {
  out_ += '\n';
  return std::move(out_);
}

void JsonWriter::prepare_slot() {
  if (pending_key_) {
    // Value immediately follows its key on the same line.
    pending_key_ = false;
    return;
  }
  if (stack_.empty()) return;
  Frame& f = stack_.back();
  if (f.has_items) out_ += ',';
  f.has_items = true;
  if (f.compact) {
    if (out_.back() == ',') out_ += ' ';
  } else {
    newline_indent();
  }
}

void JsonWriter::newline_indent() {
  out_ += '\n';
  out_.append(2 * stack_.size(), ' ');
}

std::string to_json(const Ensemble& e) {
  JsonWriter w;
  w.begin_object();
  w.key("dim").value(e.dim());
  w.key("priors").begin_array(/*compact=*/true);
  for (double p : e.priors) w.value(p);
  w.end_array();
  w.key("states").begin_array();
  for (const ComplexMatrix& rho : e.states) write_matrix(w, rho);
  w.end_array();
  w.end_object();
  return w.take();
}

std::string to_json(const Povm& p) {
  JsonWriter w;
  w.begin_object();
  w.key("dim").value(p.dim());
  w.key("kind").value(p.kind == Povm::Kind::ambiguous ? "ambiguous"
                                                      : "unambiguous");
  w.key("elements").begin_array();
  for (const ComplexMatrix& e : p.elements) write_matrix(w, e);
  w.end_array();
  w.end_object();
  return w.take();
}

Ensemble parse_ensemble(const std::string& text, const Tolerances& tol) {
  const json doc = parse_document(text, "ensemble");
  reject_unknown_fields(doc, {"dim", "priors", "states"}, "ensemble");
  const std::size_t dim = parse_dim(doc, "ensemble");

  const json& priors_node = require_field(doc, "priors", "ensemble");
  if (!priors_node.is_array() || priors_node.empty()) {
    throw ParseError("ensemble: \"priors\" must be a non-empty array");
  }
  std::vector<double> priors;
  priors.reserve(priors_node.size());
  for (std::size_t i = 0; i < priors_node.size(); ++i) {
    if (!priors_node[i].is_number()) {
      throw ParseError("ensemble: prior " + std::to_string(i) +
                       " is not a number");
    }
    priors.push_back(priors_node[i].get<double>());
  }

  const json& states_node = require_field(doc, "states", "ensemble");
  if (!states_node.is_array()) {
    throw ParseError("ensemble: \"states\" must be an array");
  }
  std::vector<ComplexMatrix> states;
  states.reserve(states_node.size());
  for (std::size_t i = 0; i < states_node.size(); ++i) {
    states.push_back(
        parse_matrix(states_node[i], dim, "state " + std::to_string(i)));
  }
  return validate_ensemble(std::move(priors), std::move(states), tol);
}

Povm parse_povm(const std::string& text, const Tolerances& tol) {
  const json doc = parse_document(text, "povm");
  reject_unknown_fields(doc, {"dim", "kind", "elements"}, "povm");
  const std::size_t dim = parse_dim(doc, "povm");

  const json& kind_node = require_field(doc, "kind", "povm");
  Povm::Kind kind;
  if (kind_node == "ambiguous") {
    kind = Povm::Kind::ambiguous;
  } else if (kind_node == "unambiguous") {
    kind = Povm::Kind::unambiguous;
  } else {
    throw ParseError(
        "povm: \"kind\" must be \"ambiguous\" or \"unambiguous\"");
  }

  const json& elements_node = require_field(doc, "elements", "povm");
  if (!elements_node.is_array() || elements_node.empty()) {
    throw ParseError("povm: \"elements\" must be a non-empty array");
  }
  std::vector<ComplexMatrix> elements;
  elements.reserve(elements_node.size());
  for (std::size_t i = 0; i < elements_node.size(); ++i) {
    elements.push_back(
        parse_matrix(elements_node[i], dim, "element " + std::to_string(i)));
  }
  return validate_povm(kind, std::move(elements), tol);
}

void save_ensemble(const std::string& path, const Ensemble& e) {
  write_file(path, to_json(e));
}

Ensemble load_ensemble(const std::string& path, const Tolerances& tol) {
  return parse_ensemble(read_file(path), tol);
}

void save_povm(const std::string& path, const Povm& p) {
  write_file(path, to_json(p));
}

Povm load_povm(const std::string& path, const Tolerances& tol) {
  return parse_povm(read_file(path), tol);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

}  // namespace qsd
