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
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atlas/corpus.hpp"
#include "atlas/error.hpp"

namespace atlas {

enum class Metric { Cosine, Euclidean, Jaccard };

constexpr std::string_view metric_name(Metric m) noexcept {
  switch (m) {
    case Metric::Cosine: return "cosine";
    case Metric::Euclidean: return "euclidean";
    case Metric::Jaccard: return "jaccard";
  }
  return "cosine";
}

inline Metric parse_metric(std::string_view text) {
  if (text == "cosine") return Metric::Cosine;
  if (text == "euclidean") return Metric::Euclidean;
  if (text == "jaccard") return Metric::Jaccard;
  throw Error(ErrorCode::InvalidArgument,
              "unknown metric '" + std::string(text) + "' (expected cosine|euclidean|jaccard)");
}

/// Cosine and Jaccard are similarities (higher is closer); Euclidean is a distance.
constexpr bool is_similarity(Metric m) noexcept { return m != Metric::Euclidean; }

/// Fixed 6-decimal rendering used by every textual output.
inline std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

namespace detail {

inline void require_same_system(const ProofVector& u, const ProofVector& v) {
  if (u.system_id() != v.system_id()) {
    throw Error(ErrorCode::SystemMismatch, "cannot compare vectors over '" + u.system_id() +
                                               "' and '" + v.system_id() + "'");
  }
  if (u.size() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vectors over '" + u.system_id() +
                                                  "' have different lengths");
  }
}

}  // namespace detail

inline double cosine_similarity(const ProofVector& u, const ProofVector& v) {
  detail::require_same_system(u, v);
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) {
    throw Error(ErrorCode::ZeroVector, "cosine similarity is undefined for an all-zero vector");
  }
  return std::clamp(dot / std::sqrt(uu * vv), 0.0, 1.0);
}

/// 1 - cosine similarity, the distance used wherever cosine must act as one.
inline double cosine_distance(const ProofVector& u, const ProofVector& v) {
  return std::max(0.0, 1.0 - cosine_similarity(u, v));
}

inline double euclidean_distance(const ProofVector& u, const ProofVector& v) {
  detail::require_same_system(u, v);
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double d = u[i] - v[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

/// Jaccard index of the supports (entries > 0). Two empty supports give 1.
inline double jaccard_index(const ProofVector& u, const ProofVector& v) {
  detail::require_same_system(u, v);
  std::size_t both = 0, either = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    bool a = u[i] > 0.0, b = v[i] > 0.0;
    both += (a && b) ? 1 : 0;
    either += (a || b) ? 1 : 0;
  }
  if (either == 0) return 1.0;
  return static_cast<double>(both) / static_cast<double>(either);
}

/// Raw metric value: a similarity for cosine/jaccard, a distance for euclidean.
inline double metric_value(Metric m, const ProofVector& u, const ProofVector& v) {
  switch (m) {
    case Metric::Cosine: return cosine_similarity(u, v);
    case Metric::Euclidean: return euclidean_distance(u, v);
    case Metric::Jaccard: return jaccard_index(u, v);
  }
  return 0.0;
}

/// Dissimilarity for clustering: 1 - cosine, euclidean, or 1 - jaccard.
inline double metric_distance(Metric m, const ProofVector& u, const ProofVector& v) {
  switch (m) {
    case Metric::Cosine: return cosine_distance(u, v);
    case Metric::Euclidean: return euclidean_distance(u, v);
    case Metric::Jaccard: return std::max(0.0, 1.0 - jaccard_index(u, v));
  }
  return 0.0;
}

/// Square, symmetric, labeled matrix of metric values.
class SimilarityMatrix {
 public:
  SimilarityMatrix(std::vector<std::string> labels, std::vector<double> values, Metric metric,
                   std::size_t dimension)
      : labels_(std::move(labels)), values_(std::move(values)), metric_(metric),
        dimension_(dimension) {
    if (labels_.empty()) throw Error(ErrorCode::EmptySlice, "similarity matrix needs at least one label");
    if (values_.size() != labels_.size() * labels_.size()) {
      throw Error(ErrorCode::DimensionMismatch, "similarity matrix values are not n x n");
    }
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  Metric metric() const noexcept { return metric_; }
  /// Vector dimension of the underlying system (used to normalize euclidean values).
  std::size_t dimension() const noexcept { return dimension_; }
  double at(std::size_t row, std::size_t col) const { return values_.at(row * size() + col); }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> values_;
  Metric metric_;
  std::size_t dimension_;
};

namespace detail {

/// Ensures a non-empty slice whose theorems share one system; returns that id.
inline const std::string& common_system(std::span<const Theorem> slice) {
  if (slice.empty()) throw Error(ErrorCode::EmptySlice, "no theorems given");
  const auto& sys = slice.front().vector.system_id();
  for (const auto& t : slice) {
    if (t.vector.system_id() != sys) {
      throw Error(ErrorCode::MixedSystems, "theorems '" + slice.front().id + "' and '" + t.id +
                                               "' are over different systems");
    }
  }
  return sys;
}

}  // namespace detail

inline SimilarityMatrix similarity_matrix(std::span<const Theorem> slice, Metric metric) {
  detail::common_system(slice);
  const std::size_t n = slice.size();
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double v = metric_value(metric, slice[i].vector, slice[j].vector);
      values[i * n + j] = v;
      values[j * n + i] = v;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& t : slice) labels.push_back(t.id);
  return {std::move(labels), std::move(values), metric, slice.front().vector.size()};
}

/// Header `id,<label>...`, then one `<label>,v...` row per label at 6 decimals.
inline std::string export_matrix_csv(const SimilarityMatrix& m) {
  std::string out = "id";
  for (const auto& l : m.labels()) out += "," + l;
  out += "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += m.labels()[i];
    for (std::size_t j = 0; j < m.size(); ++j) out += "," + format_fixed6(m.at(i, j));
    out += "\n";
  }
  return out;
}

struct MatrixTable {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;
};

inline MatrixTable parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  for (auto& line : detail::split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(detail::split(line, ','));
  }
  if (rows.empty() || rows.front().empty() || rows.front().front() != "id") {
    throw Error(ErrorCode::Parse, "matrix csv: line 1: expected header starting with 'id'");
  }
  MatrixTable table;
  table.labels.assign(rows.front().begin() + 1, rows.front().end());
  const std::size_t n = table.labels.size();
  if (rows.size() != n + 1) {
    throw Error(ErrorCode::Parse, "matrix csv: expected " + std::to_string(n) + " data rows");
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != n + 1 || row.front() != table.labels[r - 1]) {
      throw Error(ErrorCode::Parse, "matrix csv: line " + std::to_string(r + 1) +
                                        ": row label or width does not match header");
    }
    std::vector<double> values;
    for (std::size_t c = 1; c < row.size(); ++c) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(row[c], &used));
        if (used != row[c].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "matrix csv: line " + std::to_string(r + 1) +
                                          ": bad number '" + row[c] + "'");
      }
    }
    table.values.push_back(std::move(values));
  }
  return table;
}

}  // namespace atlas
