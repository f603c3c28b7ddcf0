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
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "atlas/analysis.hpp"
#include "atlas/builtin_data.hpp"
#include "atlas/corpus.hpp"
#include "atlas/error.hpp"
#include "atlas/metrics.hpp"
#include "atlas/registry.hpp"

namespace atlas {

// ---------------------------------------------------------------------------
// Tokens and lexicon

using TokenSet = std::set<std::string>;

/// Lowercased runs of ASCII letters and digits.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : text) {
    if (std::isalnum(c) && c < 0x80) {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

/// Token set without function words.
inline TokenSet content_tokens(std::string_view text) {
  static const std::set<std::string, std::less<>> stopwords = {
      "a",    "an",  "and",   "any",  "are",  "as",   "at",  "be",   "by",
      "every", "for", "from", "if",   "in",   "is",   "it",  "its",  "of",
      "on",   "or",  "than",  "that", "the",  "then", "there", "this", "to",
      "with", "all", "each",  "some", "no",   "not"};
  TokenSet out;
  for (auto& tok : tokenize(text))
    if (!stopwords.contains(tok)) out.insert(std::move(tok));
  return out;
}

inline double token_jaccard(const TokenSet& a, const TokenSet& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t both = 0;
  for (const auto& t : a) both += b.count(t);
  return static_cast<double>(both) / static_cast<double>(a.size() + b.size() - both);
}

/// Keyword lists keyed by system id.
using Lexicon = std::map<std::string, TokenSet>;

inline Lexicon load_lexicon(std::string_view text) {
  auto doc = detail::parse_json(text, "lexicon");
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "lexicon: expected an object keyed by system id");
  Lexicon lex;
  for (const auto& [id, words] : doc.items()) {
    if (!words.is_array()) throw Error(ErrorCode::Parse, "lexicon." + id + ": expected array");
    auto& set = lex[id];
    for (const auto& w : words) {
      if (!w.is_string()) throw Error(ErrorCode::Parse, "lexicon." + id + ": expected strings");
      for (auto& tok : tokenize(w.get<std::string>())) set.insert(std::move(tok));
    }
  }
  return lex;
}

inline const Lexicon& default_lexicon() {
  static const Lexicon lex = load_lexicon(builtin::k_lexicon);
  return lex;
}

// ---------------------------------------------------------------------------
// Offline classification and prediction

struct SystemScore {
  std::string id;
  double score = 0.0;
};

/// Scores every registered system by lexicon hits plus overlap with the
/// corpus statements and names on that system, normalized to sum to 1.
/// No hits anywhere gives uniform scores. Sorted descending, ties by id.
inline std::vector<SystemScore> classify_system(std::string_view statement, const Corpus& corpus,
                                                const Lexicon& lexicon = default_lexicon()) {
  const auto tokens = content_tokens(statement);
  if (tokens.empty() && tokenize(statement).empty()) {
    throw Error(ErrorCode::EmptyStatement, "statement is empty");
  }
  std::vector<SystemScore> scores;
  double total = 0.0;
  for (const auto& system : corpus.registry().systems()) {
    TokenSet vocab;
    if (auto it = lexicon.find(system.id()); it != lexicon.end()) vocab = it->second;
    TokenSet seen;
    for (const auto& t : corpus.theorems()) {
      if (t.vector.system_id() != system.id()) continue;
      for (auto& tok : content_tokens(t.statement)) seen.insert(std::move(tok));
      for (auto& tok : content_tokens(t.name)) seen.insert(std::move(tok));
    }
    double raw = 0.0;
    for (const auto& tok : tokens) raw += static_cast<double>(vocab.count(tok) + seen.count(tok));
    scores.push_back({system.id(), raw});
    total += raw;
  }
  for (auto& s : scores)
    s.score = total > 0.0 ? s.score / total : 1.0 / static_cast<double>(scores.size());
  std::sort(scores.begin(), scores.end(), [](const SystemScore& a, const SystemScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  return scores;
}

struct VectorPrediction {
  ProofVector vector;
  double confidence = 0.0;
  std::string matched_id;  // empty when the majority vote was used
  std::size_t voters = 0;  // theorems that took part in the vote
};

inline constexpr double k_match_threshold = 0.5;
inline constexpr double k_centroid_confidence = 0.25;

/// Copies the vector of the best token-overlap match on `system` when the
/// overlap reaches 0.5; otherwise a per-coordinate majority vote over the
/// system's theorems (mean >= 0.5 gives 1).
inline VectorPrediction predict_vector_offline(std::string_view statement, const AxiomSystem& system,
                                               const Corpus& corpus) {
  auto slice = corpus.slice(system.id());
  if (slice.empty()) {
    throw Error(ErrorCode::NoCorpusForSystem, "no corpus theorems on system '" + system.id() + "'");
  }
  const auto query = content_tokens(statement);
  const Theorem* best = nullptr;
  double best_overlap = -1.0;
  for (const auto& t : slice) {
    double overlap = std::max(token_jaccard(query, content_tokens(t.statement)),
                              token_jaccard(query, content_tokens(t.name)));
    if (overlap > best_overlap || (overlap == best_overlap && t.id < best->id)) {
      best = &t;
      best_overlap = overlap;
    }
  }
  if (best_overlap >= k_match_threshold) {
    return {best->vector, best_overlap, best->id, 0};
  }
  const std::size_t dim = system.dimension();
  std::vector<double> votes(dim, 0.0);
  for (const auto& t : slice)
    for (std::size_t i = 0; i < dim && i < t.vector.size(); ++i) votes[i] += t.vector[i];
  std::vector<double> entries(dim);
  for (std::size_t i = 0; i < dim; ++i)
    entries[i] = votes[i] / static_cast<double>(slice.size()) >= 0.5 ? 1.0 : 0.0;
  return {ProofVector::binary(system.id(), std::move(entries)), k_centroid_confidence, {}, slice.size()};
}

namespace detail {

inline std::string join_list(const std::vector<std::string>& items) {
  if (items.empty()) return {};
  if (items.size() == 1) return items[0];
  if (items.size() == 2) return items[0] + " and " + items[1];
  std::string out;
  for (std::size_t i = 0; i + 1 < items.size(); ++i) out += items[i] + ", ";
  return out + "and " + items.back();
}

}  // namespace detail

/// Template explanation naming the axiom groups with positive weight.
inline std::string explain_vector(const AxiomSystem& system, const ProofVector& vector) {
  std::vector<std::string> groups;
  for (std::size_t i = 0; i < vector.size() && i < system.dimension(); ++i) {
    if (vector[i] <= 0.0) continue;
    std::string g = system.axiom_at(i).group.empty() ? "ungrouped" : system.axiom_at(i).group;
    if (std::find(groups.begin(), groups.end(), g) == groups.end()) groups.push_back(std::move(g));
  }
  if (groups.empty()) return "No " + system.name() + " axioms are predicted.";
  return "Uses " + detail::join_list(groups) + " axioms of " + system.name() + ".";
}

// ---------------------------------------------------------------------------
// Remote backend

enum class BackendMode { Remote, Offline, Auto };

inline BackendMode parse_backend_mode(std::string_view text) {
  if (text == "remote") return BackendMode::Remote;
  if (text == "offline") return BackendMode::Offline;
  if (text == "auto") return BackendMode::Auto;
  throw Error(ErrorCode::InvalidArgument,
              "unknown mode '" + std::string(text) + "' (expected remote|offline|auto)");
}

struct BackendConfig {
  std::string endpoint;
  std::string api_key;
  std::string model;
  double timeout_seconds = 30.0;
  BackendMode mode = BackendMode::Auto;

  bool has_remote() const { return !endpoint.empty() && !api_key.empty() && !model.empty(); }

  /// Reads ATLAS_LLM_ENDPOINT, ATLAS_LLM_API_KEY and ATLAS_LLM_MODEL.
  static BackendConfig from_env(BackendMode mode = BackendMode::Auto) {
    auto get = [](const char* name) {
      const char* v = std::getenv(name);
      return v ? std::string(v) : std::string();
    };
    BackendConfig cfg;
    cfg.endpoint = get("ATLAS_LLM_ENDPOINT");
    cfg.api_key = get("ATLAS_LLM_API_KEY");
    cfg.model = get("ATLAS_LLM_MODEL");
    cfg.mode = mode;
    return cfg;
  }
};

/// Sends one prompt and returns the model's reply text. Transport failures
/// throw ErrorCode::BackendUnavailable.
class LanguageModelBackend {
 public:
  virtual ~LanguageModelBackend() = default;
  virtual std::string complete(const std::string& prompt) = 0;
};

/// POSTs a chat-completion style JSON body to the configured endpoint.
/// Accepts OpenAI-style `choices[0].message.content`, `choices[0].text`, a
/// top-level `content`/`text` string, or a plain-text body.
class HttpBackend final : public LanguageModelBackend {
 public:
  explicit HttpBackend(BackendConfig config) : config_(std::move(config)) {
    auto scheme_end = config_.endpoint.find("://");
    if (scheme_end == std::string::npos) {
      throw Error(ErrorCode::BackendUnavailable, "endpoint '" + config_.endpoint + "' is not an http(s) URL");
    }
    auto path_start = config_.endpoint.find('/', scheme_end + 3);
    origin_ = config_.endpoint.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : config_.endpoint.substr(path_start);
  }

  std::string complete(const std::string& prompt) override {
    httplib::Client client(origin_);
    if (!client.is_valid()) {
      throw Error(ErrorCode::BackendUnavailable, "cannot open a client for '" + origin_ + "'");
    }
    auto seconds = static_cast<time_t>(config_.timeout_seconds);
    auto micros = static_cast<time_t>((config_.timeout_seconds - static_cast<double>(seconds)) * 1e6);
    client.set_connection_timeout(seconds, micros);
    client.set_read_timeout(seconds, micros);
    client.set_write_timeout(seconds, micros);

    nlohmann::json body = {
        {"model", config_.model},
        {"temperature", 0},
        {"messages", nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
    };
    httplib::Headers headers = {{"Authorization", "Bearer " + config_.api_key}};
    auto res = client.Post(path_, headers, body.dump(), "application/json");
    if (!res) {
      throw Error(ErrorCode::BackendUnavailable, "request to backend failed: " + httplib::to_string(res.error()));
    }
    if (res->status < 200 || res->status >= 300) {
      throw Error(ErrorCode::BackendUnavailable, "backend answered HTTP " + std::to_string(res->status));
    }
    return extract_content(res->body);
  }

  static std::string extract_content(const std::string& body) {
    auto doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return body;
    if (auto it = doc.find("choices"); it != doc.end() && it->is_array() && !it->empty()) {
      const auto& first = (*it)[0];
      if (first.contains("message") && first["message"].contains("content") &&
          first["message"]["content"].is_string())
        return first["message"]["content"].get<std::string>();
      if (first.contains("text") && first["text"].is_string()) return first["text"].get<std::string>();
    }
    for (const char* key : {"content", "text", "reply"})
      if (auto it = doc.find(key); it != doc.end() && it->is_string()) return it->get<std::string>();
    return body;
  }

 private:
  BackendConfig config_;
  std::string origin_;
  std::string path_;
};

inline std::string build_prompt(std::string_view statement, const Registry& registry) {
  std::string p;
  p += "You classify mathematical theorems by the foundational axioms their proofs use.\n";
  p += "Available axiom systems (coordinates in order):\n";
  for (const auto& s : registry.systems()) {
    p += "- " + s.id() + " (" + s.name() + ", dimension " + std::to_string(s.dimension()) + "):";
    for (const auto& ax : s.axioms()) p += " [" + std::to_string(ax.index) + "] " + ax.key + " " + ax.name + ";";
    p += "\n";
  }
  p += "\nTheorem: " + std::string(statement) + "\n\n";
  p += "Pick the single best axiom system and predict its proof vector: one weight in [0,1] per\n"
       "axiom, in the order listed (1 = used, 0 = unused). Reply with exactly these lines and\n"
       "nothing else:\n"
       "system: <system id>\n"
       "vector: <w1>,<w2>,...\n"
       "explanation: <one to three sentences naming the axiom groups the proof relies on>\n";
  return p;
}

struct BackendReply {
  std::string system_id;
  ProofVector vector;
  std::string explanation;
};

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::string strip_prefix(const std::string& line, std::string_view prefix, int line_no) {
  if (line.rfind(prefix, 0) != 0) {
    throw Error(ErrorCode::MalformedBackendReply,
                "line " + std::to_string(line_no) + " must start with '" + std::string(prefix) + "'");
  }
  return trim(std::string_view(line).substr(prefix.size()));
}

}  // namespace detail

/// Parses `system: <id>` / `vector: <v1>,<v2>,...` / `explanation: <text>`
/// (the explanation may continue on later lines). Finite weights outside
/// [0,1] are clipped; a wrong length or non-numeric weight is malformed.
inline BackendReply parse_backend_reply(std::string_view text, const Registry& registry) {
  std::vector<std::string> lines;
  for (auto& l : detail::split(detail::trim(text), '\n')) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    lines.push_back(std::move(l));
  }
  if (lines.size() < 3) throw Error(ErrorCode::MalformedBackendReply, "reply has fewer than three lines");
  auto system_id = detail::strip_prefix(lines[0], "system:", 1);
  auto vector_text = detail::strip_prefix(lines[1], "vector:", 2);
  auto explanation = detail::strip_prefix(lines[2], "explanation:", 3);
  for (std::size_t i = 3; i < lines.size(); ++i) {
    auto more = detail::trim(lines[i]);
    if (!more.empty()) explanation += " " + more;
  }
  if (explanation.empty()) throw Error(ErrorCode::MalformedBackendReply, "explanation is empty");

  const auto* system = registry.find(system_id);
  if (system == nullptr) {
    throw Error(ErrorCode::UnknownSystemInReply, "backend chose unknown system '" + system_id + "'");
  }
  std::vector<double> entries;
  for (const auto& field : detail::split(vector_text, ',')) {
    auto cell = detail::trim(field);
    char* end = nullptr;
    double w = std::strtod(cell.c_str(), &end);
    if (cell.empty() || end != cell.c_str() + cell.size() || !std::isfinite(w)) {
      throw Error(ErrorCode::MalformedBackendReply, "vector entry '" + cell + "' is not a finite number");
    }
    entries.push_back(std::clamp(w, 0.0, 1.0));
  }
  if (entries.size() != system->dimension()) {
    throw Error(ErrorCode::MalformedBackendReply,
                "vector has " + std::to_string(entries.size()) + " entries, system '" + system_id +
                    "' has " + std::to_string(system->dimension()));
  }
  return {system_id, ProofVector::infer(system_id, std::move(entries)), std::move(explanation)};
}

/// One request plus at most one repair request on a malformed reply.
inline BackendReply query_backend(LanguageModelBackend& backend, std::string_view statement,
                                  const Registry& registry) {
  const auto prompt = build_prompt(statement, registry);
  try {
    return parse_backend_reply(backend.complete(prompt), registry);
  } catch (const Error& first) {
    if (first.code() != ErrorCode::MalformedBackendReply) throw;
    auto repair = prompt + "\nYour previous reply was rejected (" + first.what() +
                  "). Answer again using exactly the three-line format above.\n";
    try {
      return parse_backend_reply(backend.complete(repair), registry);
    } catch (const Error& second) {
      if (second.code() != ErrorCode::MalformedBackendReply) throw;
      throw Error(ErrorCode::MalformedBackendReply,
                  std::string("backend reply still malformed after one retry: ") + second.what());
    }
  }
}

// ---------------------------------------------------------------------------
// Pipeline

enum class BackendKind { Remote, Offline };

constexpr std::string_view backend_name(BackendKind k) noexcept {
  return k == BackendKind::Remote ? "remote" : "offline";
}

struct Suggestion {
  std::string system_id;
  ProofVector vector;
  std::string explanation;
  std::vector<Neighbor> similar;
  BackendKind backend = BackendKind::Offline;
  double confidence = 0.0;
};

inline constexpr std::size_t k_similar_count = 3;

namespace detail {

inline std::vector<Neighbor> similar_theorems(const Corpus& corpus, const ProofVector& v) {
  if (v.is_zero()) return {};
  return nearest(corpus, v, Metric::Cosine, k_similar_count);
}

inline Suggestion suggest_offline(std::string_view statement, const Corpus& corpus,
                                  const Lexicon& lexicon) {
  for (const auto& ranked : classify_system(statement, corpus, lexicon)) {
    const auto& system = corpus.registry().at(ranked.id);
    if (corpus.slice(system.id()).empty()) continue;
    auto pred = predict_vector_offline(statement, system, corpus);
    std::string why = explain_vector(system, pred.vector);
    if (!pred.matched_id.empty()) {
      why += " Closest recorded theorem: " + corpus.at(pred.matched_id).name + ".";
    } else {
      why += " Predicted by majority vote over " + std::to_string(pred.voters) + " recorded " +
             system.name() + " theorems.";
    }
    Suggestion s{system.id(), pred.vector, std::move(why), {}, BackendKind::Offline, pred.confidence};
    s.similar = similar_theorems(corpus, s.vector);
    return s;
  }
  throw Error(ErrorCode::NoCorpusForSystem, "the corpus has no theorems to predict from");
}

inline Suggestion suggest_remote(std::string_view statement, const Corpus& corpus,
                                 LanguageModelBackend& backend, const Lexicon& lexicon) {
  auto reply = query_backend(backend, statement, corpus.registry());
  double confidence = 0.0;
  for (const auto& s : classify_system(statement, corpus, lexicon))
    if (s.id == reply.system_id) confidence = s.score;
  Suggestion out{reply.system_id, reply.vector, reply.explanation, {}, BackendKind::Remote, confidence};
  out.similar = similar_theorems(corpus, out.vector);
  return out;
}

}  // namespace detail

/// Statement in; system, vector, explanation and the top-3 cosine neighbors
/// out. `backend` is used for remote and auto modes; auto falls back to the
/// offline predictor when the backend is unreachable.
inline Suggestion suggest(std::string_view statement, const Corpus& corpus, const BackendConfig& config,
                          LanguageModelBackend* backend, const Lexicon& lexicon = default_lexicon()) {
  if (tokenize(statement).empty()) throw Error(ErrorCode::EmptyStatement, "statement is empty");
  switch (config.mode) {
    case BackendMode::Offline: return detail::suggest_offline(statement, corpus, lexicon);
    case BackendMode::Remote:
      if (backend == nullptr) throw Error(ErrorCode::BackendUnavailable, "no remote backend configured");
      return detail::suggest_remote(statement, corpus, *backend, lexicon);
    case BackendMode::Auto:
      if (backend != nullptr) {
        try {
          return detail::suggest_remote(statement, corpus, *backend, lexicon);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BackendUnavailable) throw;
        }
      }
      return detail::suggest_offline(statement, corpus, lexicon);
  }
  return detail::suggest_offline(statement, corpus, lexicon);
}

/// Builds an HttpBackend from `config` when it names an endpoint, key and model.
inline Suggestion suggest(std::string_view statement, const Corpus& corpus, const BackendConfig& config,
                          const Lexicon& lexicon = default_lexicon()) {
  if (tokenize(statement).empty()) throw Error(ErrorCode::EmptyStatement, "statement is empty");
  if (config.mode == BackendMode::Offline) return suggest(statement, corpus, config, nullptr, lexicon);
  if (!config.has_remote()) {
    if (config.mode == BackendMode::Remote) {
      throw Error(ErrorCode::BackendUnavailable,
                  "remote mode needs ATLAS_LLM_ENDPOINT, ATLAS_LLM_API_KEY and ATLAS_LLM_MODEL");
    }
    return suggest(statement, corpus, config, nullptr, lexicon);
  }
  std::unique_ptr<HttpBackend> http;
  try {
    http = std::make_unique<HttpBackend>(config);
  } catch (const Error&) {
    if (config.mode == BackendMode::Remote) throw;
  }
  return suggest(statement, corpus, config, http.get(), lexicon);
}

}  // namespace atlas
