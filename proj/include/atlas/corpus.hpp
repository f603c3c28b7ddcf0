/*
 * Copyright 2026 The Axiom Atlas Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "atlas/error.hpp"
#include "atlas/registry.hpp"

namespace atlas {

enum class VectorKind { Binary, Weighted };

constexpr std::string_view kind_name(VectorKind kind) noexcept {
  return kind == VectorKind::Binary ? "binary" : "weighted";
}

/// Weights over one axiom system (plain or composite id), each in [0,1].
/// Binary vectors hold only exact 0s and 1s. Length is checked against the
/// registry when the vector enters a corpus.
class ProofVector {
 public:
  ProofVector(std::string system_id, std::vector<double> entries, VectorKind kind)
      : system_id_(std::move(system_id)), entries_(std::move(entries)), kind_(kind) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      double w = entries_[i];
      if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
        throw Error(ErrorCode::OutOfRangeWeight,
                    "weight " + std::to_string(w) + " at coordinate " + std::to_string(i) +
                        " is outside [0,1]");
      }
      if (kind_ == VectorKind::Binary && w != 0.0 && w != 1.0) {
        throw Error(ErrorCode::KindMismatch, "binary vector has non-binary entry at coordinate " +
                                                 std::to_string(i));
      }
    }
  }

  static ProofVector binary(std::string system_id, std::vector<double> entries) {
    return {std::move(system_id), std::move(entries), VectorKind::Binary};
  }

  static ProofVector weighted(std::string system_id, std::vector<double> entries) {
    return {std::move(system_id), std::move(entries), VectorKind::Weighted};
  }

  /// Binary when every entry is exactly 0 or 1, weighted otherwise.
  static ProofVector infer(std::string system_id, std::vector<double> entries) {
    bool all_binary = true;
    for (double w : entries) all_binary = all_binary && (w == 0.0 || w == 1.0);
    return {std::move(system_id), std::move(entries),
            all_binary ? VectorKind::Binary : VectorKind::Weighted};
  }

  const std::string& system_id() const noexcept { return system_id_; }
  const std::vector<double>& entries() const noexcept { return entries_; }
  VectorKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

  bool is_zero() const {
    for (double w : entries_)
      if (w > 0.0) return false;
    return true;
  }

  /// Coordinates with strictly positive weight.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] > 0.0) out.push_back(i);
    return out;
  }

  bool operator==(const ProofVector&) const = default;

 private:
  std::string system_id_;
  std::vector<double> entries_;
  VectorKind kind_;
};

struct Theorem {
  std::string id;
  std::string name;
  std::string statement;
  ProofVector vector;
  std::vector<std::string> tags;

  bool operator==(const Theorem&) const = default;
};

namespace detail {

inline void validate_theorem(const Theorem& t, const Registry& registry) {
  if (t.id.empty()) throw Error(ErrorCode::InvalidArgument, "theorem id must be non-empty");
  for (char c : t.id) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      throw Error(ErrorCode::InvalidArgument,
                  "theorem id '" + t.id + "' must not contain whitespace or commas");
    }
  }
  if (t.name.empty()) throw Error(ErrorCode::InvalidArgument, "theorem '" + t.id + "' has no name");
  if (!registry.contains(t.vector.system_id())) {
    throw Error(ErrorCode::UnknownSystem, "theorem '" + t.id + "' references unknown system '" +
                                              t.vector.system_id() + "'");
  }
  auto dim = registry.dimension_of(t.vector.system_id());
  if (t.vector.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "theorem '" + t.id + "': vector has " + std::to_string(t.vector.size()) +
                    " entries but system '" + t.vector.system_id() + "' has dimension " +
                    std::to_string(dim));
  }
}

}  // namespace detail

/// Immutable theorem collection bound to the registry its vectors reference.
/// add() returns a new corpus.
class Corpus {
 public:
  Corpus() : registry_(builtin_registry()) {}
  explicit Corpus(Registry registry) : registry_(std::move(registry)) {}

  const Registry& registry() const noexcept { return registry_; }
  const std::vector<Theorem>& theorems() const noexcept { return theorems_; }
  std::size_t size() const noexcept { return theorems_.size(); }
  bool empty() const noexcept { return theorems_.empty(); }

  const Theorem* find(std::string_view id) const {
    for (const auto& t : theorems_)
      if (t.id == id) return &t;
    return nullptr;
  }

  const Theorem& at(std::string_view id) const {
    if (const auto* t = find(id)) return *t;
    throw Error(ErrorCode::UnknownTheorem, "no theorem with id '" + std::string(id) + "'");
  }

  /// Theorems on `system_id`, in corpus order.
  std::vector<Theorem> slice(std::string_view system_id) const {
    std::vector<Theorem> out;
    for (const auto& t : theorems_)
      if (t.vector.system_id() == system_id) out.push_back(t);
    return out;
  }

  Corpus add(Theorem record) const& {
    Corpus next = *this;
    return std::move(next).add(std::move(record));
  }

  Corpus add(Theorem record) && {
    if (find(record.id) != nullptr) {
      throw Error(ErrorCode::DuplicateId, "theorem id '" + record.id + "' already present");
    }
    detail::validate_theorem(record, registry_);
    theorems_.push_back(std::move(record));
    return std::move(*this);
  }

  bool operator==(const Corpus&) const = default;

 private:
  Registry registry_;
  std::vector<Theorem> theorems_;
};

inline Corpus add_theorem(const Corpus& corpus, Theorem record) {
  return corpus.add(std::move(record));
}

/// u ++ v over `composite`, whose parts must be u's parts followed by v's.
inline ProofVector concat_vectors(const ProofVector& u, const ProofVector& v,
                                  const CompositeSystem& composite) {
  auto expected = detail::split(u.system_id(), '+');
  auto tail = detail::split(v.system_id(), '+');
  expected.insert(expected.end(), tail.begin(), tail.end());
  if (composite.parts() != expected) {
    throw Error(ErrorCode::CompositionMismatch,
                "composite '" + composite.id() + "' does not match '" + u.system_id() + "' ++ '" +
                    v.system_id() + "'");
  }
  if (u.size() + v.size() != composite.dimension()) {
    throw Error(ErrorCode::CompositionMismatch,
                "vector lengths do not add up to composite dimension " +
                    std::to_string(composite.dimension()));
  }
  std::vector<double> entries = u.entries();
  entries.insert(entries.end(), v.entries().begin(), v.entries().end());
  auto kind = (u.kind() == VectorKind::Binary && v.kind() == VectorKind::Binary)
                  ? VectorKind::Binary
                  : VectorKind::Weighted;
  return {composite.id(), std::move(entries), kind};
}

/// The nine reference theorems: three each over hilbert, peano and zfc.
inline Corpus seed_paper_corpus() {
  struct Row {
    const char* id;
    const char* name;
    const char* statement;
    const char* system;
    std::vector<double> vector;
  };
  const std::vector<Row> rows = {
      {"pythagorean", "Pythagorean Theorem",
       "In a right triangle, the square of the hypotenuse equals the sum of the squares of the "
       "other two sides.",
       "hilbert", {1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1}},
      {"triangle_angle_sum", "Sum of Angles in Triangle",
       "The sum of the interior angles of a triangle is 180 degrees.", "hilbert",
       {1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1}},
      {"euler_line", "Euler Line (Orthocenter–Centroid–Circumcenter)",
       "The orthocenter, centroid, and circumcenter of a triangle are collinear.", "hilbert",
       {1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1}},
      {"add_zero_identity", "a + 0 = a", "For every natural number a, a + 0 = a.", "peano",
       {1, 0, 0, 0, 1}},
      {"add_comm", "a + b = b + a", "For all natural numbers a and b, a + b = b + a.", "peano",
       {1, 1, 0, 0, 1}},
      {"infinitude_of_primes", "Infinitely Many Primes", "There are infinitely many primes.",
       "peano", {1, 1, 0, 0, 1}},
      {"singleton_exists", "Singleton Set Exists",
       "For every set x, the singleton set {x} exists.", "zfc",
       {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
      {"union_exists", "Union of Two Sets Exists",
       "For any two sets a and b, the union of a and b exists.", "zfc",
       {1, 0, 1, 1, 0, 0, 0, 0, 0, 0}},
      {"power_set_exists", "Power Set Exists", "The power set of any set exists.", "zfc",
       {1, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
  };
  Corpus corpus(builtin_registry());
  for (const auto& r : rows) {
    corpus = std::move(corpus).add(Theorem{r.id, r.name, r.statement, ProofVector::binary(r.system, r.vector), {}});
  }
  return corpus;
}

inline constexpr int k_corpus_format_version = 1;

/// Corpus document: {"version": 1, "theorems": [{id, name, statement,
/// system, kind, vector[, tags]}]}. Binary vectors are written as integers.
inline std::string export_corpus(const Corpus& corpus) {
  nlohmann::ordered_json doc;
  doc["version"] = k_corpus_format_version;
  auto list = nlohmann::ordered_json::array();
  for (const auto& t : corpus.theorems()) {
    nlohmann::ordered_json entry;
    entry["id"] = t.id;
    entry["name"] = t.name;
    entry["statement"] = t.statement;
    entry["system"] = t.vector.system_id();
    entry["kind"] = std::string(kind_name(t.vector.kind()));
    auto vec = nlohmann::ordered_json::array();
    for (double w : t.vector.entries()) {
      if (t.vector.kind() == VectorKind::Binary)
        vec.push_back(static_cast<int>(w));
      else
        vec.push_back(w);
    }
    entry["vector"] = std::move(vec);
    if (!t.tags.empty()) entry["tags"] = t.tags;
    list.push_back(std::move(entry));
  }
  doc["theorems"] = std::move(list);
  return doc.dump(2) + "\n";
}

inline Corpus import_corpus(std::string_view document, const Registry& registry = builtin_registry()) {
  auto doc = detail::parse_json(document, "corpus");
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "corpus: expected a JSON object");
  const auto& version = detail::require_field(doc, "version", "$");
  if (!version.is_number_integer() || version.get<int>() != k_corpus_format_version) {
    throw Error(ErrorCode::Parse, "$.version: unsupported corpus version (expected 1)");
  }
  const auto& list = detail::require_field(doc, "theorems", "$");
  if (!list.is_array()) throw Error(ErrorCode::Parse, "$.theorems: expected array");

  Corpus corpus(registry);
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string path = "$.theorems[" + std::to_string(i) + "]";
    const auto& e = list[i];
    if (!e.is_object()) throw Error(ErrorCode::Parse, path + ": expected object");
    auto id = detail::require_string(e, "id", path);
    auto name = detail::require_string(e, "name", path);
    auto statement = detail::optional_string(e, "statement", path);
    auto system = detail::require_string(e, "system", path);
    auto kind_text = detail::require_string(e, "kind", path);
    VectorKind kind;
    if (kind_text == "binary")
      kind = VectorKind::Binary;
    else if (kind_text == "weighted")
      kind = VectorKind::Weighted;
    else
      throw Error(ErrorCode::Parse, path + ".kind: expected \"binary\" or \"weighted\"");
    const auto& vec = detail::require_field(e, "vector", path);
    if (!vec.is_array()) throw Error(ErrorCode::Parse, path + ".vector: expected array");
    std::vector<double> entries;
    entries.reserve(vec.size());
    for (std::size_t j = 0; j < vec.size(); ++j) {
      if (!vec[j].is_number()) {
        throw Error(ErrorCode::Parse, path + ".vector[" + std::to_string(j) + "]: expected number");
      }
      entries.push_back(vec[j].get<double>());
    }
    std::vector<std::string> tags;
    if (auto it = e.find("tags"); it != e.end()) {
      if (!it->is_array()) throw Error(ErrorCode::Parse, path + ".tags: expected array");
      for (const auto& tag : *it) {
        if (!tag.is_string()) throw Error(ErrorCode::Parse, path + ".tags: expected strings");
        tags.push_back(tag.get<std::string>());
      }
    }
    corpus = std::move(corpus).add(Theorem{std::move(id), std::move(name), std::move(statement),
                                ProofVector(std::move(system), std::move(entries), kind),
                                std::move(tags)});
  }
  return corpus;
}

}  // namespace atlas
