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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "atlas/builtin_data.hpp"
#include "atlas/error.hpp"

namespace atlas {

namespace detail {

inline bool is_system_id(std::string_view id) {
  if (id.empty() || !(id.front() >= 'a' && id.front() <= 'z')) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

/// Parses JSON, reporting syntax errors as ErrorCode::Parse with a line number.
inline nlohmann::json parse_json(std::string_view text, std::string_view what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    throw Error(ErrorCode::Parse, std::string(what) + ": line " +
                                      std::to_string(line_of(text, byte)) +
                                      ": malformed JSON");
  }
}

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* field,
                                           const std::string& path) {
  auto it = obj.find(field);
  if (it == obj.end()) throw Error(ErrorCode::Parse, path + "." + field + ": missing field");
  return *it;
}

inline std::string require_string(const nlohmann::json& obj, const char* field,
                                  const std::string& path) {
  const auto& v = require_field(obj, field, path);
  if (!v.is_string()) throw Error(ErrorCode::Parse, path + "." + field + ": expected string");
  return v.get<std::string>();
}

inline std::string optional_string(const nlohmann::json& obj, const char* field,
                                   const std::string& path) {
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) throw Error(ErrorCode::Parse, path + "." + field + ": expected string");
  return it->get<std::string>();
}

}  // namespace detail

struct Axiom {
  std::size_t index = 0;
  std::string key;
  std::string name;
  std::string group;        // empty when ungrouped
  std::string description;  // may be empty

  bool operator==(const Axiom&) const = default;
};

/// Ordered, indexed axiom basis. The axiom order is the coordinate order of
/// every proof vector over this system and never changes after construction.
class AxiomSystem {
 public:
  AxiomSystem(std::string id, std::string name, std::vector<Axiom> axioms)
      : id_(std::move(id)), name_(std::move(name)), axioms_(std::move(axioms)) {
    if (!detail::is_system_id(id_)) {
      throw Error(ErrorCode::Parse, "invalid system id '" + id_ +
                                        "' (expected lowercase identifier)");
    }
    if (axioms_.empty()) throw Error(ErrorCode::EmptySystem, "system '" + id_ + "' has no axioms");
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < axioms_.size(); ++i) {
      auto& ax = axioms_[i];
      ax.index = i;
      if (ax.key.empty()) {
        throw Error(ErrorCode::Parse, "system '" + id_ + "': axiom " + std::to_string(i) +
                                          " has an empty key");
      }
      if (!seen.insert(ax.key).second) {
        throw Error(ErrorCode::DuplicateKey,
                    "system '" + id_ + "': duplicate axiom key '" + ax.key + "'");
      }
    }
  }

  const std::string& id() const noexcept { return id_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Axiom>& axioms() const noexcept { return axioms_; }
  std::size_t dimension() const noexcept { return axioms_.size(); }

  const Axiom& axiom_at(std::size_t i) const { return axioms_.at(i); }

  std::optional<std::size_t> index_of(std::string_view key) const {
    for (const auto& ax : axioms_)
      if (ax.key == key) return ax.index;
    return std::nullopt;
  }

  bool operator==(const AxiomSystem&) const = default;

 private:
  std::string id_;
  std::string name_;
  std::vector<Axiom> axioms_;
};

/// Parses an axiom-system definition document (JSON object with `id`,
/// `name` and an ordered `axioms` array).
inline AxiomSystem load_system(std::string_view definition_text) {
  auto doc = detail::parse_json(definition_text, "axiom system");
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "axiom system: expected a JSON object");
  auto id = detail::require_string(doc, "id", "$");
  auto name = detail::require_string(doc, "name", "$");
  const auto& list = detail::require_field(doc, "axioms", "$");
  if (!list.is_array()) throw Error(ErrorCode::Parse, "$.axioms: expected array");

  std::vector<Axiom> axioms;
  axioms.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string path = "$.axioms[" + std::to_string(i) + "]";
    const auto& entry = list[i];
    if (!entry.is_object()) throw Error(ErrorCode::Parse, path + ": expected object");
    Axiom ax;
    ax.index = i;
    ax.key = detail::require_string(entry, "key", path);
    if (ax.key.empty()) throw Error(ErrorCode::Parse, path + ".key: must be non-empty");
    ax.name = detail::require_string(entry, "name", path);
    ax.group = detail::optional_string(entry, "group", path);
    ax.description = detail::optional_string(entry, "description", path);
    axioms.push_back(std::move(ax));
  }
  return AxiomSystem(std::move(id), std::move(name), std::move(axioms));
}

/// Serializes to the definition-file format; load_system(dump_system(s)) == s.
inline std::string dump_system(const AxiomSystem& system) {
  nlohmann::ordered_json doc;
  doc["id"] = system.id();
  doc["name"] = system.name();
  auto list = nlohmann::ordered_json::array();
  for (const auto& ax : system.axioms()) {
    nlohmann::ordered_json entry;
    entry["key"] = ax.key;
    entry["name"] = ax.name;
    if (!ax.group.empty()) entry["group"] = ax.group;
    if (!ax.description.empty()) entry["description"] = ax.description;
    list.push_back(std::move(entry));
  }
  doc["axioms"] = std::move(list);
  return doc.dump(2) + "\n";
}

/// Concatenated coordinate space of several systems. Composite ids join the
/// part ids with '+', e.g. "peano+zfc".
class CompositeSystem {
 public:
  const std::vector<std::string>& parts() const noexcept { return parts_; }
  const std::vector<std::size_t>& part_dimensions() const noexcept { return dims_; }
  std::size_t dimension() const noexcept { return dimension_; }

  std::string id() const {
    std::string out;
    for (const auto& p : parts_) {
      if (!out.empty()) out += '+';
      out += p;
    }
    return out;
  }

  std::optional<std::size_t> offset_of(std::string_view part) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i] == part) return offsets_[i];
    return std::nullopt;
  }

  bool operator==(const CompositeSystem&) const = default;

 private:
  friend CompositeSystem compose(std::span<const AxiomSystem>);

  std::vector<std::string> parts_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t dimension_ = 0;
};

inline CompositeSystem compose(std::span<const AxiomSystem> systems) {
  if (systems.empty()) throw Error(ErrorCode::EmptyComposition, "cannot compose zero systems");
  CompositeSystem out;
  for (const auto& s : systems) {
    if (std::find(out.parts_.begin(), out.parts_.end(), s.id()) != out.parts_.end()) {
      throw Error(ErrorCode::DuplicatePart, "system '" + s.id() + "' appears twice in composition");
    }
    out.parts_.push_back(s.id());
    out.dims_.push_back(s.dimension());
    out.offsets_.push_back(out.dimension_);
    out.dimension_ += s.dimension();
  }
  return out;
}

/// Immutable collection of axiom systems keyed by id.
class Registry {
 public:
  Registry() = default;

  explicit Registry(std::vector<AxiomSystem> systems) : systems_(std::move(systems)) {
    std::unordered_set<std::string> ids;
    for (const auto& s : systems_) {
      if (!ids.insert(s.id()).second) {
        throw Error(ErrorCode::DuplicateSystem, "system id '" + s.id() + "' registered twice");
      }
    }
  }

  const std::vector<AxiomSystem>& systems() const noexcept { return systems_; }
  std::size_t size() const noexcept { return systems_.size(); }

  const AxiomSystem* find(std::string_view id) const {
    for (const auto& s : systems_)
      if (s.id() == id) return &s;
    return nullptr;
  }

  const AxiomSystem& at(std::string_view id) const {
    if (const auto* s = find(id)) return *s;
    throw Error(ErrorCode::UnknownSystem, "unknown axiom system '" + std::string(id) + "'");
  }

  /// Resolves a plain or composite ("a+b") id to its composition.
  CompositeSystem composite(std::string_view id) const {
    std::vector<AxiomSystem> parts;
    for (const auto& part : detail::split(id, '+')) parts.push_back(at(part));
    return compose(parts);
  }

  bool contains(std::string_view id) const {
    for (const auto& part : detail::split(id, '+'))
      if (find(part) == nullptr) return false;
    return true;
  }

  std::size_t dimension_of(std::string_view id) const {
    if (id.find('+') == std::string_view::npos) return at(id).dimension();
    return composite(id).dimension();
  }

  /// New registry with one more system; this one is left untouched.
  Registry with(AxiomSystem system) const {
    auto systems = systems_;
    systems.push_back(std::move(system));
    return Registry(std::move(systems));
  }

  bool operator==(const Registry&) const = default;

 private:
  std::vector<AxiomSystem> systems_;
};

/// The five shipped systems: hilbert (12), peano (5), zfc (10),
/// vector_space (8), group (4).
inline const Registry& builtin_registry() {
  static const Registry registry = [] {
    std::vector<AxiomSystem> systems;
    for (auto text : builtin::k_system_definitions) systems.push_back(load_system(text));
    return Registry(std::move(systems));
  }();
  return registry;
}

}  // namespace atlas
