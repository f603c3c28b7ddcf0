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
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/corpus.hpp"
#include "atlas/error.hpp"
#include "atlas/metrics.hpp"
#include "atlas/registry.hpp"

namespace atlas {

struct HeatmapOptions {
  std::string low_color = "#FFFFFF";   // value 0
  std::string high_color = "#08306B";  // value 1
  int cell_size = 24;
  int gutter = 4;
  std::string font_family = "sans-serif";
  int font_size = 12;
  std::string title;
};

/// Everything needed to draw one heatmap. values is row-major, each in [0,1].
/// raw_values, when present, is emitted alongside as `data-raw`.
struct HeatmapSpec {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<double> values;
  std::optional<std::vector<double>> raw_values;
  HeatmapOptions options;
};

namespace detail {

inline std::array<int, 3> parse_hex_color(std::string_view text) {
  auto hex = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorCode::InvalidArgument, "bad color '" + std::string(text) + "' (expected #RRGGBB)");
  };
  if (text.size() != 7 || text[0] != '#') {
    throw Error(ErrorCode::InvalidArgument, "bad color '" + std::string(text) + "' (expected #RRGGBB)");
  }
  return {hex(text[1]) * 16 + hex(text[2]), hex(text[3]) * 16 + hex(text[4]),
          hex(text[5]) * 16 + hex(text[6])};
}

/// Linear RGB interpolation between the palette endpoints.
inline std::string lerp_color(const std::array<int, 3>& lo, const std::array<int, 3>& hi,
                              double t) {
  char buf[8];
  int ch[3];
  for (int i = 0; i < 3; ++i)
    ch[i] = static_cast<int>(std::lround(lo[i] + (hi[i] - lo[i]) * t));
  std::snprintf(buf, sizeof buf, "#%02X%02X%02X", ch[0], ch[1], ch[2]);
  return buf;
}

inline std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Rough width estimate for layout; counts UTF-8 code points.
inline int text_width(std::string_view text, int font_size) {
  int points = 0;
  for (unsigned char c : text)
    if ((c & 0xC0) != 0x80) ++points;
  return points * font_size * 6 / 10;
}

}  // namespace detail

/// Renders an SVG 1.1 heatmap. Each cell is a `<rect class="cell">` carrying
/// data-row, data-col and data-value (6 decimals). Output is deterministic.
inline std::string render_heatmap(const HeatmapSpec& spec) {
  const std::size_t rows = spec.row_labels.size(), cols = spec.col_labels.size();
  if (rows == 0 || cols == 0) throw Error(ErrorCode::EmptySlice, "heatmap needs at least one row and column");
  if (spec.values.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "heatmap values do not match label counts");
  }
  if (spec.raw_values && spec.raw_values->size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "heatmap raw values do not match label counts");
  }
  for (double v : spec.values) {
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorCode::OutOfRangeWeight, "heatmap value outside [0,1]");
  }
  const auto& opt = spec.options;
  if (opt.cell_size <= 0 || opt.gutter < 0 || opt.font_size <= 0) {
    throw Error(ErrorCode::InvalidArgument, "heatmap cell size and font size must be positive");
  }
  const auto lo = detail::parse_hex_color(opt.low_color);
  const auto hi = detail::parse_hex_color(opt.high_color);

  int row_label_w = 0, col_label_w = 0;
  for (const auto& l : spec.row_labels) row_label_w = std::max(row_label_w, detail::text_width(l, opt.font_size));
  for (const auto& l : spec.col_labels) col_label_w = std::max(col_label_w, detail::text_width(l, opt.font_size));

  const int pad = 8;
  const int step = opt.cell_size + opt.gutter;
  const int title_h = opt.title.empty() ? 0 : opt.font_size * 2;
  const int left = pad + row_label_w + pad;
  const int top = pad + title_h + col_label_w + pad;
  const int width = left + static_cast<int>(cols) * step - opt.gutter + pad;
  const int height = top + static_cast<int>(rows) * step - opt.gutter + pad;

  auto num = [](int v) { return std::to_string(v); };
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
         "\" font-family=\"" + detail::xml_escape(opt.font_family) + "\" font-size=\"" +
         num(opt.font_size) + "\">\n";
  if (!opt.title.empty()) {
    svg += "<title>" + detail::xml_escape(opt.title) + "</title>\n";
    svg += "<text class=\"title\" x=\"" + num(pad) + "\" y=\"" + num(pad + opt.font_size) +
           "\" font-weight=\"bold\">" + detail::xml_escape(opt.title) + "</text>\n";
  }

  svg += "<g class=\"cells\">\n";
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      double v = spec.values[i * cols + j];
      svg += "<rect class=\"cell\" x=\"" + num(left + static_cast<int>(j) * step) + "\" y=\"" +
             num(top + static_cast<int>(i) * step) + "\" width=\"" + num(opt.cell_size) +
             "\" height=\"" + num(opt.cell_size) + "\" fill=\"" + detail::lerp_color(lo, hi, v) +
             "\" data-row=\"" + std::to_string(i) + "\" data-col=\"" + std::to_string(j) +
             "\" data-value=\"" + format_fixed6(v) + "\"";
      if (spec.raw_values) svg += " data-raw=\"" + format_fixed6((*spec.raw_values)[i * cols + j]) + "\"";
      svg += "/>\n";
    }
  }
  svg += "</g>\n";

  svg += "<g class=\"row-labels\" text-anchor=\"end\">\n";
  for (std::size_t i = 0; i < rows; ++i) {
    int y = top + static_cast<int>(i) * step + opt.cell_size / 2 + opt.font_size / 3;
    svg += "<text class=\"row-label\" x=\"" + num(left - pad / 2) + "\" y=\"" + num(y) + "\">" +
           detail::xml_escape(spec.row_labels[i]) + "</text>\n";
  }
  svg += "</g>\n";

  svg += "<g class=\"col-labels\" text-anchor=\"start\">\n";
  for (std::size_t j = 0; j < cols; ++j) {
    int x = left + static_cast<int>(j) * step + opt.cell_size / 2 + opt.font_size / 3;
    int y = top - pad / 2;
    svg += "<text class=\"col-label\" x=\"" + num(x) + "\" y=\"" + num(y) +
           "\" transform=\"rotate(-90 " + num(x) + " " + num(y) + ")\">" +
           detail::xml_escape(spec.col_labels[j]) + "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

/// Column labels for a plain or composite system: axiom keys, prefixed with
/// "<system>." for composites.
inline std::vector<std::string> axiom_labels(const Registry& registry, std::string_view system_id) {
  std::vector<std::string> out;
  const auto parts = detail::split(system_id, '+');
  for (const auto& part : parts) {
    for (const auto& ax : registry.at(part).axioms())
      out.push_back(parts.size() == 1 ? ax.key : part + "." + ax.key);
  }
  return out;
}

/// Rows are theorems, columns the axioms of their shared system.
inline std::string render_vector_heatmap(std::span<const Theorem> slice, const Registry& registry,
                                         HeatmapOptions options = {}) {
  const auto& system = detail::common_system(slice);
  HeatmapSpec spec;
  spec.col_labels = axiom_labels(registry, system);
  for (const auto& t : slice) {
    if (t.vector.size() != spec.col_labels.size()) {
      throw Error(ErrorCode::DimensionMismatch, "theorem '" + t.id + "' does not match system '" + system + "'");
    }
    spec.row_labels.push_back(t.id);
    spec.values.insert(spec.values.end(), t.vector.entries().begin(), t.vector.entries().end());
  }
  spec.options = std::move(options);
  return render_heatmap(spec);
}

/// Theorem ids on both axes. Euclidean values are divided by sqrt(dimension)
/// for coloring and data-value; the unscaled value goes to data-raw.
inline std::string render_similarity_heatmap(const SimilarityMatrix& matrix, HeatmapOptions options = {}) {
  HeatmapSpec spec;
  spec.row_labels = matrix.labels();
  spec.col_labels = matrix.labels();
  spec.values = matrix.values();
  if (matrix.metric() == Metric::Euclidean) {
    spec.raw_values = matrix.values();
    double scale = matrix.dimension() == 0 ? 1.0 : 1.0 / std::sqrt(static_cast<double>(matrix.dimension()));
    for (auto& v : spec.values) v = std::clamp(v * scale, 0.0, 1.0);
  }
  spec.options = std::move(options);
  return render_heatmap(spec);
}

}  // namespace atlas
