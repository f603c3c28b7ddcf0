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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atlas/analysis.hpp"
#include "atlas/assistant.hpp"
#include "atlas/corpus.hpp"
#include "atlas/error.hpp"
#include "atlas/metrics.hpp"
#include "atlas/registry.hpp"
#include "atlas/viz.hpp"

namespace atlas::cli {

inline constexpr int k_exit_ok = 0;
inline constexpr int k_exit_domain_error = 1;
inline constexpr int k_exit_usage = 2;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes to a sibling temp file and renames it over `path`.
inline void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::Io, "write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::Io, "cannot replace '" + path + "'");
  }
}

inline std::string format_vector(const ProofVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v.kind() == VectorKind::Binary ? std::to_string(static_cast<int>(v[i])) : format_fixed6(v[i]);
  }
  return out;
}

inline std::vector<double> parse_vector_arg(const std::string& text) {
  std::vector<double> out;
  for (const auto& field : detail::split(text, ',')) {
    auto cell = detail::trim(field);
    char* end = nullptr;
    double w = std::strtod(cell.c_str(), &end);
    if (cell.empty() || end != cell.c_str() + cell.size()) {
      throw Error(ErrorCode::Parse, "vector entry '" + cell + "' is not a number");
    }
    out.push_back(w);
  }
  return out;
}

namespace detail {

struct Context {
  std::string corpus_path = "corpus.json";
  std::vector<std::string> registry_paths;
  std::string lexicon_path;

  Registry registry() const {
    Registry r = builtin_registry();
    for (const auto& p : registry_paths) r = r.with(load_system(read_file(p)));
    return r;
  }

  Corpus corpus() const { return load_corpus(corpus_path); }

  Corpus load_corpus(const std::string& path) const {
    std::string text;
    try {
      text = read_file(path);
    } catch (const Error&) {
      throw Error(ErrorCode::Io, "cannot read corpus '" + path + "' (create one with `atlas seed`)");
    }
    return import_corpus(text, registry());
  }

  Lexicon lexicon() const {
    if (lexicon_path.empty()) return default_lexicon();
    return load_lexicon(read_file(lexicon_path));
  }
};

inline void require_system(const Registry& registry, const std::string& id) {
  if (!registry.contains(id)) throw Error(ErrorCode::UnknownSystem, "unknown axiom system '" + id + "'");
}

inline void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file_atomic(path, text);
}

}  // namespace detail

/// Parses argv and runs one subcommand. Returns 0 on success, 1 on a domain
/// error (printed as `E_CODE: message`), 2 on a usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::Context ctx;
  CLI::App app{"Axiom atlas: proof vectors over axiom systems", "atlas"};
  app.require_subcommand(1);
  app.add_option("--corpus", ctx.corpus_path, "Corpus file")->capture_default_str();
  app.add_option("--registry", ctx.registry_paths, "Extra axiom-system definition file (repeatable)");
  app.add_option("--lexicon", ctx.lexicon_path, "Keyword lexicon file for suggest");

  std::string metric_text = "cosine";
  std::string linkage_text = "average";
  std::string out_path;

  auto* systems = app.add_subcommand("systems", "List, show or dump axiom systems");
  systems->require_subcommand(1);
  systems->add_subcommand("list", "List registered systems");
  std::string system_arg;
  auto* systems_show = systems->add_subcommand("show", "Show the axioms of a system");
  systems_show->add_option("id", system_arg)->required();
  auto* systems_dump = systems->add_subcommand("dump", "Print a system definition file");
  systems_dump->add_option("id", system_arg)->required();
  systems_dump->add_option("--out", out_path, "Output path");

  auto* seed = app.add_subcommand("seed", "Write the nine-theorem seed corpus");
  seed->add_option("--out", out_path, "Output path (defaults to --corpus)");

  std::string add_corpus, add_id, add_name, add_statement, add_system, add_vector, add_kind = "auto";
  std::vector<std::string> add_tags;
  auto* add = app.add_subcommand("add", "Add a theorem to a corpus file");
  add->add_option("corpus", add_corpus)->required();
  add->add_option("--id", add_id)->required();
  add->add_option("--name", add_name)->required();
  add->add_option("--statement", add_statement);
  add->add_option("--system", add_system)->required();
  add->add_option("--vector", add_vector, "Comma-separated weights")->required();
  add->add_option("--kind", add_kind)->check(CLI::IsMember({"auto", "binary", "weighted"}))->capture_default_str();
  add->add_option("--tag", add_tags);

  std::string import_path;
  auto* import_cmd = app.add_subcommand("import", "Validate a corpus document and store it as the corpus");
  import_cmd->add_option("file", import_path)->required();
  import_cmd->add_option("--out", out_path, "Destination (defaults to --corpus)");

  auto* export_cmd = app.add_subcommand("export", "Print the corpus document");
  export_cmd->add_option("--out", out_path, "Output path");

  std::string id_a, id_b;
  auto* sim = app.add_subcommand("sim", "Similarity of two theorems");
  sim->add_option("a", id_a)->required();
  sim->add_option("b", id_b)->required();
  sim->add_option("--metric", metric_text)->capture_default_str();

  bool want_csv = false, want_svg = false;
  auto* matrix = app.add_subcommand("matrix", "Pairwise matrix over one system");
  matrix->add_option("--system", system_arg)->required();
  matrix->add_option("--metric", metric_text)->capture_default_str();
  auto* csv_flag = matrix->add_flag("--csv", want_csv, "CSV output (default)");
  matrix->add_flag("--svg", want_svg, "SVG heatmap output")->excludes(csv_flag);
  matrix->add_option("--out", out_path, "Output path");

  std::optional<double> cut_threshold;
  auto* cluster_cmd = app.add_subcommand("cluster", "Agglomerative clustering over one system");
  cluster_cmd->add_option("--system", system_arg)->required();
  cluster_cmd->add_option("--metric", metric_text)->capture_default_str();
  cluster_cmd->add_option("--linkage", linkage_text)->capture_default_str();
  cluster_cmd->add_option("--cut", cut_threshold, "Print families at this merge height");

  std::string svg_path, title;
  auto* heatmap = app.add_subcommand("heatmap", "Proof-vector heatmap of one system");
  heatmap->add_option("--system", system_arg)->required();
  heatmap->add_option("--svg", svg_path, "Output path")->required();
  heatmap->add_option("--title", title);

  std::string nearest_id, nearest_vector;
  std::size_t k = 3;
  auto* nearest_cmd = app.add_subcommand("nearest", "k most similar theorems");
  auto* nearest_id_opt = nearest_cmd->add_option("id", nearest_id, "Theorem id (excluded from results)");
  auto* nearest_vec_opt = nearest_cmd->add_option("--vector", nearest_vector, "Query vector")->excludes(nearest_id_opt);
  nearest_cmd->add_option("--system", system_arg, "System of --vector")->needs(nearest_vec_opt);
  nearest_cmd->add_option("-k", k)->capture_default_str();
  nearest_cmd->add_option("--metric", metric_text)->capture_default_str();

  std::vector<std::string> ids;
  auto* core = app.add_subcommand("core", "Axioms used by every listed theorem");
  core->add_option("ids", ids)->required();
  auto* foot = app.add_subcommand("footprint", "Axioms used by any listed theorem");
  foot->add_option("ids", ids)->required();

  std::size_t outlier_k = 1;
  auto* outliers = app.add_subcommand("outliers", "Isolation scores, most isolated first");
  outliers->add_option("--system", system_arg)->required();
  outliers->add_option("-k", outlier_k)->capture_default_str();
  outliers->add_option("--metric", metric_text)->capture_default_str();

  std::string statement, mode_text = "auto";
  double timeout = 30.0;
  auto* suggest_cmd = app.add_subcommand("suggest", "Predict system, vector and similar theorems for a statement");
  suggest_cmd->add_option("statement", statement)->required();
  suggest_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"remote", "offline", "auto"}))->capture_default_str();
  suggest_cmd->add_option("--timeout", timeout, "Remote request timeout in seconds")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? k_exit_ok : k_exit_usage;
  }

  try {
    if (*systems) {
      auto registry = ctx.registry();
      if (systems->got_subcommand("list")) {
        for (const auto& s : registry.systems())
          out << s.id() << "\t" << s.dimension() << "\t" << s.name() << "\n";
      } else if (*systems_show) {
        const auto& s = registry.at(system_arg);
        out << s.id() << "\t" << s.name() << "\t" << s.dimension() << "\n";
        for (const auto& ax : s.axioms())
          out << ax.index << "\t" << ax.key << "\t" << (ax.group.empty() ? "-" : ax.group) << "\t" << ax.name << "\n";
      } else {
        detail::emit(out, dump_system(registry.at(system_arg)), out_path);
      }
    } else if (*seed) {
      write_file_atomic(out_path.empty() ? ctx.corpus_path : out_path, export_corpus(seed_paper_corpus()));
    } else if (*add) {
      auto corpus = ctx.load_corpus(add_corpus);
      auto entries = parse_vector_arg(add_vector);
      auto vec = add_kind == "binary"   ? ProofVector::binary(add_system, entries)
                 : add_kind == "weighted" ? ProofVector::weighted(add_system, entries)
                                          : ProofVector::infer(add_system, entries);
      corpus = corpus.add(Theorem{add_id, add_name, add_statement, std::move(vec), add_tags});
      write_file_atomic(add_corpus, export_corpus(corpus));
    } else if (*import_cmd) {
      auto corpus = import_corpus(read_file(import_path), ctx.registry());
      write_file_atomic(out_path.empty() ? ctx.corpus_path : out_path, export_corpus(corpus));
      out << "imported " << corpus.size() << " theorems\n";
    } else if (*export_cmd) {
      detail::emit(out, export_corpus(ctx.corpus()), out_path);
    } else if (*sim) {
      auto metric = parse_metric(metric_text);
      auto corpus = ctx.corpus();
      out << format_fixed6(metric_value(metric, corpus.at(id_a).vector, corpus.at(id_b).vector)) << "\n";
    } else if (*matrix) {
      auto metric = parse_metric(metric_text);
      auto corpus = ctx.corpus();
      detail::require_system(corpus.registry(), system_arg);
      auto m = similarity_matrix(corpus.slice(system_arg), metric);
      detail::emit(out, want_svg ? render_similarity_heatmap(m) : export_matrix_csv(m), out_path);
    } else if (*cluster_cmd) {
      auto metric = parse_metric(metric_text);
      auto linkage = parse_linkage(linkage_text);
      auto corpus = ctx.corpus();
      detail::require_system(corpus.registry(), system_arg);
      auto dendrogram = cluster(corpus.slice(system_arg), metric, linkage);
      out << dendrogram.to_text();
      if (cut_threshold) {
        auto part = cut(dendrogram, *cut_threshold);
        for (std::size_t i = 0; i < part.families.size(); ++i) {
          out << "family " << i << ":";
          for (const auto& id : part.families[i]) out << " " << id;
          out << "\n";
        }
      }
    } else if (*heatmap) {
      auto corpus = ctx.corpus();
      detail::require_system(corpus.registry(), system_arg);
      HeatmapOptions opts;
      opts.title = title;
      write_file_atomic(svg_path, render_vector_heatmap(corpus.slice(system_arg), corpus.registry(), opts));
    } else if (*nearest_cmd) {
      auto metric = parse_metric(metric_text);
      auto corpus = ctx.corpus();
      std::optional<ProofVector> query;
      if (!nearest_id.empty()) {
        query = corpus.at(nearest_id).vector;
      } else if (!nearest_vector.empty()) {
        if (system_arg.empty()) throw Error(ErrorCode::InvalidArgument, "--vector needs --system");
        query = ProofVector::infer(system_arg, parse_vector_arg(nearest_vector));
        detail::require_system(corpus.registry(), system_arg);
        if (query->size() != corpus.registry().dimension_of(system_arg)) {
          throw Error(ErrorCode::DimensionMismatch, "query vector length does not match system '" + system_arg + "'");
        }
      } else {
        throw Error(ErrorCode::InvalidArgument, "give a theorem id or --vector with --system");
      }
      for (const auto& n : nearest(corpus, *query, metric, k, nearest_id))
        out << n.id << "\t" << format_fixed6(n.score) << "\n";
    } else if (*core || *foot) {
      auto corpus = ctx.corpus();
      std::vector<Theorem> picked;
      for (const auto& id : ids) picked.push_back(corpus.at(id));
      auto v = *core ? common_core(picked) : footprint(picked);
      out << "system: " << v.system_id() << "\nvector: " << format_vector(v) << "\n";
    } else if (*outliers) {
      auto metric = parse_metric(metric_text);
      auto corpus = ctx.corpus();
      detail::require_system(corpus.registry(), system_arg);
      for (const auto& n : outlier_scores(corpus.slice(system_arg), metric, outlier_k))
        out << n.id << "\t" << format_fixed6(n.score) << "\n";
    } else if (*suggest_cmd) {
      auto corpus = ctx.corpus();
      auto config = BackendConfig::from_env(parse_backend_mode(mode_text));
      config.timeout_seconds = timeout;
      auto s = suggest(statement, corpus, config, ctx.lexicon());
      out << "system: " << s.system_id << "\n";
      out << "vector: " << format_vector(s.vector) << "\n";
      out << "confidence: " << format_fixed6(s.confidence) << "\n";
      out << "backend: " << backend_name(s.backend) << "\n";
      out << "explanation: " << s.explanation << "\n";
      for (const auto& n : s.similar) out << "similar: " << n.id << "\t" << format_fixed6(n.score) << "\n";
    }
  } catch (const Error& e) {
    err << code_name(e.code()) << ": " << e.what() << "\n";
    return k_exit_domain_error;
  } catch (const std::exception&) {
    err << "E_INTERNAL: unexpected failure\n";
    return k_exit_domain_error;
  }
  return k_exit_ok;
}

}  // namespace atlas::cli
