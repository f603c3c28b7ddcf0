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
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atlas/corpus.hpp"
#include "atlas/error.hpp"
#include "atlas/metrics.hpp"

namespace atlas {

enum class Linkage { Single, Complete, Average };

constexpr std::string_view linkage_name(Linkage l) noexcept {
  switch (l) {
    case Linkage::Single: return "single";
    case Linkage::Complete: return "complete";
    case Linkage::Average: return "average";
  }
  return "average";
}

inline Linkage parse_linkage(std::string_view text) {
  if (text == "single") return Linkage::Single;
  if (text == "complete") return Linkage::Complete;
  if (text == "average") return Linkage::Average;
  throw Error(ErrorCode::InvalidArgument,
              "unknown linkage '" + std::string(text) + "' (expected single|complete|average)");
}

/// Distances closer than this are treated as ties and resolved by member ids.
inline constexpr double k_merge_tie_tolerance = 1e-12;

/// One agglomeration step. Nodes 0..n-1 are leaves; node n+k is the cluster
/// created by merge k.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;

  bool operator==(const Merge&) const = default;
};

struct Dendrogram {
  std::vector<std::string> leaves;
  std::vector<Merge> merges;
  Linkage linkage = Linkage::Average;
  Metric metric = Metric::Cosine;

  /// Theorem id for leaves, "#k" for the k-th merge.
  std::string node_label(std::size_t node) const {
    if (node < leaves.size()) return leaves[node];
    return "#" + std::to_string(node - leaves.size());
  }

  /// `leaf <id>` lines, then `merge <left> <right> @ <height>` lines.
  std::string to_text() const {
    std::string out;
    for (const auto& l : leaves) out += "leaf " + l + "\n";
    for (const auto& m : merges) {
      out += "merge " + node_label(m.left) + " " + node_label(m.right) + " @ " +
             format_fixed6(m.height) + "\n";
    }
    return out;
  }

  bool operator==(const Dendrogram&) const = default;
};

struct FamilyPartition {
  double threshold = 0.0;
  std::vector<std::vector<std::string>> families;
};

/// Agglomerative clustering over metric_distance. Equal-distance candidates
/// are ordered by (smaller min-member id, larger min-member id); the cluster
/// with the smaller min-member id becomes the left child.
inline Dendrogram cluster(std::span<const Theorem> slice, Metric metric,
                          Linkage linkage = Linkage::Average) {
  if (slice.size() < 2) throw Error(ErrorCode::TooFewItems, "clustering needs at least two theorems");
  detail::common_system(slice);
  const std::size_t n = slice.size();

  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      dist[i][j] = dist[j][i] = metric_distance(metric, slice[i].vector, slice[j].vector);

  struct Active {
    std::size_t node;
    std::size_t size;
    std::string min_label;
  };
  std::vector<std::optional<Active>> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[i] = Active{i, 1, slice[i].id};

  Dendrogram out;
  out.linkage = linkage;
  out.metric = metric;
  for (const auto& t : slice) out.leaves.push_back(t.id);

  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t best_a = 0, best_b = 0;
    double best_d = 0.0;
    std::pair<std::string_view, std::string_view> best_key;
    bool found = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!clusters[a]) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!clusters[b]) continue;
        std::string_view la = clusters[a]->min_label, lb = clusters[b]->min_label;
        auto key = la < lb ? std::pair{la, lb} : std::pair{lb, la};
        double d = dist[a][b];
        bool better = !found || d < best_d - k_merge_tie_tolerance ||
                      (std::abs(d - best_d) <= k_merge_tie_tolerance && key < best_key);
        if (better) {
          found = true;
          best_a = a;
          best_b = b;
          best_d = d;
          best_key = key;
        }
      }
    }

    // Slot `keep` receives the merged cluster; `drop` is retired.
    std::size_t keep = best_a, drop = best_b;
    if (clusters[drop]->min_label < clusters[keep]->min_label) std::swap(keep, drop);
    const Active left = *clusters[keep];
    const Active right = *clusters[drop];
    out.merges.push_back(Merge{left.node, right.node, best_d});

    for (std::size_t k = 0; k < n; ++k) {
      if (!clusters[k] || k == keep || k == drop) continue;
      double dl = dist[keep][k], dr = dist[drop][k];
      double merged = 0.0;
      switch (linkage) {
        case Linkage::Single: merged = std::min(dl, dr); break;
        case Linkage::Complete: merged = std::max(dl, dr); break;
        case Linkage::Average:
          merged = (static_cast<double>(left.size) * dl + static_cast<double>(right.size) * dr) /
                   static_cast<double>(left.size + right.size);
          break;
      }
      dist[keep][k] = dist[k][keep] = merged;
    }
    clusters[keep] = Active{n + step, left.size + right.size, left.min_label};
    clusters[drop].reset();
  }
  return out;
}

/// Connected components of the merges with height <= threshold. Families are
/// ordered by their first leaf; members keep leaf order.
inline FamilyPartition cut(const Dendrogram& dendrogram, double threshold) {
  if (!(threshold >= 0.0)) throw Error(ErrorCode::InvalidArgument, "cut threshold must be >= 0");
  const std::size_t n = dendrogram.leaves.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Any leaf of a node works as its representative.
  std::vector<std::size_t> rep(n + dendrogram.merges.size());
  std::iota(rep.begin(), rep.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
  for (std::size_t k = 0; k < dendrogram.merges.size(); ++k) {
    const auto& m = dendrogram.merges[k];
    rep[n + k] = rep[m.left];
    if (m.height <= threshold) {
      auto a = root(rep[m.left]), b = root(rep[m.right]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  FamilyPartition out;
  out.threshold = threshold;
  std::vector<std::size_t> family_of_root(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = root(i);
    if (family_of_root[r] == n) {
      family_of_root[r] = out.families.size();
      out.families.emplace_back();
    }
    out.families[family_of_root[r]].push_back(dendrogram.leaves[i]);
  }
  return out;
}

struct Neighbor {
  std::string id;
  double score = 0.0;

  bool operator==(const Neighbor&) const = default;
};

namespace detail {

/// Best first: similarity descending or distance ascending, then id ascending.
inline void rank_neighbors(std::vector<Neighbor>& list, Metric metric) {
  std::sort(list.begin(), list.end(), [metric](const Neighbor& a, const Neighbor& b) {
    if (a.score != b.score) return is_similarity(metric) ? a.score > b.score : a.score < b.score;
    return a.id < b.id;
  });
}

}  // namespace detail

/// k most similar corpus theorems on the query's system. Under cosine,
/// candidates with all-zero vectors are skipped; an all-zero query is an error.
inline std::vector<Neighbor> nearest(const Corpus& corpus, const ProofVector& query, Metric metric,
                                     std::size_t k, std::string_view exclude_id = {}) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (!corpus.registry().contains(query.system_id())) {
    throw Error(ErrorCode::UnknownSystem, "unknown axiom system '" + query.system_id() + "'");
  }
  if (metric == Metric::Cosine && query.is_zero()) {
    throw Error(ErrorCode::ZeroVector, "cosine similarity is undefined for an all-zero query");
  }
  std::vector<Neighbor> ranked;
  for (const auto& t : corpus.theorems()) {
    if (t.vector.system_id() != query.system_id() || t.id == exclude_id) continue;
    if (metric == Metric::Cosine && t.vector.is_zero()) continue;
    ranked.push_back({t.id, metric_value(metric, query, t.vector)});
  }
  detail::rank_neighbors(ranked, metric);
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

namespace detail {

template <typename Combine>
ProofVector support_fold(std::span<const Theorem> theorems, Combine combine) {
  if (theorems.empty()) throw Error(ErrorCode::EmptyList, "no theorems given");
  const auto& sys = common_system(theorems);
  const std::size_t dim = theorems.front().vector.size();
  std::vector<double> acc(dim);
  for (std::size_t i = 0; i < dim; ++i) acc[i] = theorems.front().vector[i] > 0.0 ? 1.0 : 0.0;
  for (const auto& t : theorems.subspan(1)) {
    if (t.vector.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "theorem '" + t.id + "' has a different length");
    }
    for (std::size_t i = 0; i < dim; ++i) acc[i] = combine(acc[i] > 0.0, t.vector[i] > 0.0) ? 1.0 : 0.0;
  }
  return ProofVector::binary(sys, std::move(acc));
}

}  // namespace detail

/// Axioms used by every theorem (entrywise AND of supports). This is the
/// intersection of recorded dependencies, not a minimal axiom set.
inline ProofVector common_core(std::span<const Theorem> theorems) {
  return detail::support_fold(theorems, [](bool a, bool b) { return a && b; });
}

/// Axioms used by any theorem (entrywise OR of supports).
inline ProofVector footprint(std::span<const Theorem> theorems) {
  return detail::support_fold(theorems, [](bool a, bool b) { return a || b; });
}

/// 1 - mean similarity to the k nearest others (cosine, jaccard), or mean
/// distance to them (euclidean). Most isolated first, ties by id.
inline std::vector<Neighbor> outlier_scores(std::span<const Theorem> slice, Metric metric,
                                            std::size_t k) {
  if (slice.size() < 2) throw Error(ErrorCode::TooFewItems, "outlier scores need at least two theorems");
  detail::common_system(slice);
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (k > slice.size() - 1) {
    throw Error(ErrorCode::TooFewItems, "k = " + std::to_string(k) + " exceeds the " +
                                            std::to_string(slice.size() - 1) + " available neighbors");
  }
  auto matrix = similarity_matrix(slice, metric);
  const std::size_t n = slice.size();
  std::vector<Neighbor> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(matrix.at(i, j));
    if (is_similarity(metric))
      std::sort(others.begin(), others.end(), std::greater<>());
    else
      std::sort(others.begin(), others.end());
    double mean = std::accumulate(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(k), 0.0) /
                  static_cast<double>(k);
    out.push_back({slice[i].id, is_similarity(metric) ? 1.0 - mean : mean});
  }
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  return out;
}

}  // namespace atlas
