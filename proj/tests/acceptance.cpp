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

// Acceptance runner: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "atlas/atlas.hpp"
#include "oracles.hpp"
#include "stub_server.hpp"

using namespace atlas;

namespace {

// Tolerances, pinned.
constexpr double k_metric_tol = 1e-9;
constexpr double k_height_tol = 1e-6;
constexpr double k_oracle_tol = 1e-9;
constexpr double k_roundtrip_tol = 1e-6;
constexpr int k_property_cases = 1000;

struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

const std::map<std::string, std::vector<double>> k_reference_vectors = {
    {"pythagorean", {1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1}},
    {"triangle_angle_sum", {1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1}},
    {"euler_line", {1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1}},
    {"add_zero_identity", {1, 0, 0, 0, 1}},
    {"add_comm", {1, 1, 0, 0, 1}},
    {"infinitude_of_primes", {1, 1, 0, 0, 1}},
    {"singleton_exists", {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"union_exists", {1, 0, 1, 1, 0, 0, 0, 0, 0, 0}},
    {"power_set_exists", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
};

Theorem make(std::string id, std::string sys, std::vector<double> v) {
  return Theorem{std::move(id), "T", "", ProofVector::infer(std::move(sys), std::move(v)), {}};
}

std::vector<std::vector<double>> oracle_distances(const std::vector<Theorem>& s, Metric m) {
  const auto n = s.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& u = s[i].vector.entries();
      const auto& v = s[j].vector.entries();
      d[i][j] = m == Metric::Cosine      ? oracle::plain_cosine_distance(u, v)
                : m == Metric::Euclidean ? oracle::plain_euclidean(u, v)
                                         : 1.0 - oracle::set_jaccard(u, v);
    }
  return d;
}

oracle::NaiveLinkage naive(Linkage l) {
  return l == Linkage::Single ? oracle::NaiveLinkage::Single
         : l == Linkage::Complete ? oracle::NaiveLinkage::Complete
                                  : oracle::NaiveLinkage::Average;
}

bool same_merges(const std::vector<Theorem>& slice, Metric m, Linkage l) {
  auto got = cluster(slice, m, l);
  std::vector<std::string> labels;
  for (const auto& t : slice) labels.push_back(t.id);
  auto want = oracle::naive_cluster(labels, oracle_distances(slice, m), naive(l));
  if (got.merges.size() != want.size()) return false;
  for (std::size_t k = 0; k < want.size(); ++k) {
    if (got.merges[k].left != want[k].left || got.merges[k].right != want[k].right) return false;
    if (std::abs(got.merges[k].height - want[k].height) > k_oracle_tol) return false;
  }
  return true;
}

bool has_similar(const Suggestion& s, const std::string& id) {
  return std::any_of(s.similar.begin(), s.similar.end(), [&](const Neighbor& n) { return n.id == id; });
}

std::string chat_body(const std::string& content) {
  return nlohmann::json{{"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}}}.dump();
}

void seed_fidelity(Check& c) {
  auto seed = seed_paper_corpus();
  c.expect(seed.size() == 9, "seed size is not 9");
  for (const auto& t : seed.theorems()) {
    auto it = k_reference_vectors.find(t.id);
    c.expect(it != k_reference_vectors.end(), "unexpected seed id " + t.id);
    if (it != k_reference_vectors.end()) c.expect(t.vector.entries() == it->second, "vector differs for " + t.id);
    c.expect(t.vector.kind() == VectorKind::Binary, t.id + " is not binary");
  }
  c.expect(seed.registry().dimension_of("hilbert") == 12, "hilbert dim");
  c.expect(seed.registry().dimension_of("peano") == 5, "peano dim");
  c.expect(seed.registry().dimension_of("zfc") == 10, "zfc dim");
}

void worked_example(Check& c, const char* statement, const char* system, std::vector<double> vector,
                    const char* similar) {
  BackendConfig cfg;
  cfg.mode = BackendMode::Offline;
  auto s = suggest(statement, seed_paper_corpus(), cfg);
  c.expect(s.system_id == system, "system was " + s.system_id);
  c.expect(s.vector.entries() == vector, "vector mismatch");
  c.expect(has_similar(s, similar), std::string("similar lacks ") + similar);
  c.expect(s.backend == BackendKind::Offline, "backend not offline");
}

void derived_metrics(Check& c) {
  auto seed = seed_paper_corpus();
  struct Case {
    const char *a, *b;
    double exact;
  } cases[] = {{"pythagorean", "triangle_angle_sum", 10.0 / 11.0},
               {"pythagorean", "euler_line", 10.0 / std::sqrt(110.0)},
               {"triangle_angle_sum", "euler_line", 9.0 / std::sqrt(110.0)}};
  for (const auto& k : cases) {
    const auto& u = seed.at(k.a).vector;
    const auto& v = seed.at(k.b).vector;
    double brute = oracle::set_cosine(u.entries(), v.entries());
    c.expect(std::abs(brute - k.exact) <= k_metric_tol, std::string("oracle disagrees for ") + k.a + "," + k.b);
    c.expect(std::abs(cosine_similarity(u, v) - k.exact) <= k_metric_tol,
             std::string("cosine off for ") + k.a + "," + k.b);
  }
}

void clustering(Check& c) {
  auto seed = seed_paper_corpus();
  auto d = cluster(seed.slice("hilbert"), Metric::Cosine, Linkage::Average);
  c.expect(d.merges.size() == 2, "merge count");
  if (d.merges.size() != 2) return;
  c.expect(d.node_label(d.merges[0].left) == "euler_line" && d.node_label(d.merges[0].right) == "pythagorean",
           "first merge members");
  c.expect(std::abs(d.merges[0].height - 0.046537) <= k_height_tol, "first height");
  c.expect(d.node_label(d.merges[1].right) == "triangle_angle_sum", "second merge member");
  c.expect(std::abs(d.merges[1].height - 0.116397) <= k_height_tol, "second height");

  for (const char* sys : {"hilbert", "peano", "zfc"}) {
    auto slice = seed.slice(sys);
    for (unsigned mask = 0; mask < (1u << slice.size()); ++mask) {
      std::vector<Theorem> sub;
      for (std::size_t i = 0; i < slice.size(); ++i)
        if (mask & (1u << i)) sub.push_back(slice[i]);
      if (sub.size() < 2) continue;
      for (auto m : {Metric::Cosine, Metric::Euclidean, Metric::Jaccard})
        for (auto l : {Linkage::Single, Linkage::Complete, Linkage::Average})
          c.expect(same_merges(sub, m, l), std::string("naive mismatch on ") + sys + " subset");
    }
  }
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Theorem> slice;
    auto n = 2 + rng() % 5;  // sizes 2..6
    for (std::size_t i = 0; i < n; ++i)
      slice.push_back(make(std::string(1, static_cast<char>('a' + rng() % 26)) + std::to_string(i), "s",
                           oracle::random_nonzero(rng, 6, trial % 2 == 0)));
    for (auto m : {Metric::Cosine, Metric::Euclidean, Metric::Jaccard})
      for (auto l : {Linkage::Single, Linkage::Complete, Linkage::Average})
        c.expect(same_merges(slice, m, l), "naive mismatch on random slice " + std::to_string(trial));
  }
}

void metric_properties(Check& c) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> dims(1, 16);
  for (int i = 0; i < k_property_cases; ++i) {
    const bool binary = i % 2 == 0;
    auto d = dims(rng);
    auto a = ProofVector::infer("s", oracle::random_nonzero(rng, d, binary));
    auto b = ProofVector::infer("s", oracle::random_nonzero(rng, d, binary));
    auto x = ProofVector::infer("s", oracle::random_nonzero(rng, d, binary));
    // symmetry
    c.expect(cosine_similarity(a, b) == cosine_similarity(b, a), "cosine symmetry");
    c.expect(euclidean_distance(a, b) == euclidean_distance(b, a), "euclidean symmetry");
    c.expect(jaccard_index(a, b) == jaccard_index(b, a), "jaccard symmetry");
    // ranges
    double cs = cosine_similarity(a, b), js = jaccard_index(a, b), ed = euclidean_distance(a, b);
    c.expect(cs >= 0.0 && cs <= 1.0, "cosine range");
    c.expect(js >= 0.0 && js <= 1.0, "jaccard range");
    c.expect(ed >= 0.0 && ed <= std::sqrt(static_cast<double>(d)) + 1e-12, "euclidean range");
    // self-identity
    c.expect(std::abs(cosine_similarity(a, a) - 1.0) <= 1e-12, "cosine self");
    c.expect(euclidean_distance(a, a) == 0.0, "euclidean self");
    c.expect(jaccard_index(a, a) == 1.0, "jaccard self");
    // triangle inequality
    c.expect(euclidean_distance(a, b) <= euclidean_distance(a, x) + euclidean_distance(x, b) + 1e-12,
             "triangle inequality");
    // coordinate permutation
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> pa(d), pb(d);
    for (std::size_t k = 0; k < d; ++k) {
      pa[k] = a[perm[k]];
      pb[k] = b[perm[k]];
    }
    auto qa = ProofVector::infer("s", pa), qb = ProofVector::infer("s", pb);
    c.expect(std::abs(cosine_similarity(qa, qb) - cs) <= 1e-12, "cosine permutation");
    c.expect(std::abs(euclidean_distance(qa, qb) - ed) <= 1e-12, "euclidean permutation");
    c.expect(jaccard_index(qa, qb) == js, "jaccard permutation");
  }
  std::size_t pairs = 0;
  for (std::size_t d = 1; d <= 8; ++d) {
    for (unsigned ua = 0; ua < (1u << d); ++ua)
      for (unsigned ub = 0; ub < (1u << d); ++ub) {
        std::vector<double> u(d), v(d);
        for (std::size_t k = 0; k < d; ++k) {
          u[k] = (ua >> k) & 1u;
          v[k] = (ub >> k) & 1u;
        }
        auto pu = ProofVector::binary("s", u), pv = ProofVector::binary("s", v);
        ++pairs;
        c.expect(std::abs(jaccard_index(pu, pv) - oracle::set_jaccard(u, v)) <= k_oracle_tol, "jaccard oracle");
        c.expect(std::abs(euclidean_distance(pu, pv) - oracle::plain_euclidean(u, v)) <= k_oracle_tol,
                 "euclidean oracle");
        if (ua != 0 && ub != 0)
          c.expect(std::abs(cosine_similarity(pu, pv) - oracle::set_cosine(u, v)) <= k_oracle_tol, "cosine oracle");
      }
  }
  c.expect(pairs == 87380, "exhaustive pair count");
}

void support_algebra(Check& c) {
  auto slice = seed_paper_corpus().slice("hilbert");
  c.expect(common_core(slice).entries() == std::vector<double>{1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1}, "core");
  c.expect(footprint(slice).entries() == std::vector<double>(12, 1.0), "footprint");
  std::mt19937 rng(7);
  for (int trial = 0; trial < k_property_cases; ++trial) {
    std::vector<Theorem> s;
    auto n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i)
      s.push_back(make("t" + std::to_string(i), "h",
                       trial % 2 ? oracle::random_binary(rng, 12) : oracle::random_weighted(rng, 12)));
    auto core = common_core(s), foot = footprint(s);
    for (std::size_t k = 0; k < 12; ++k) {
      bool all = true, any = false;
      for (const auto& t : s) {
        all = all && t.vector[k] > 0.0;
        any = any || t.vector[k] > 0.0;
      }
      c.expect((core[k] == 1.0) == all, "core is not the support intersection");
      c.expect((foot[k] == 1.0) == any, "footprint is not the support union");
      c.expect(core[k] <= foot[k], "core not a subset of footprint");
    }
  }
}

void heatmap_structure(Check& c) {
  auto seed = seed_paper_corpus();
  auto slice = seed.slice("hilbert");
  auto svg = render_vector_heatmap(slice, seed.registry());
  static const std::regex rect(R"re(<rect class="cell"[^>]*data-row="(\d+)" data-col="(\d+)" data-value="([^"]+)")re");
  std::size_t cells = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect); it != std::sregex_iterator(); ++it) {
    ++cells;
    auto r = std::stoul((*it)[1]), col = std::stoul((*it)[2]);
    double v = std::stod((*it)[3]);
    c.expect(r < slice.size() && col < 12, "cell index out of range");
    if (r < slice.size() && col < 12) c.expect(std::abs(v - slice[r].vector[col]) <= k_roundtrip_tol, "cell value");
  }
  c.expect(cells == 36, "cell count " + std::to_string(cells));
  c.expect(svg == render_vector_heatmap(slice, seed.registry()), "output not byte-identical");
}

void round_trips(Check& c) {
  auto seed = seed_paper_corpus();
  auto back = import_corpus(export_corpus(seed));
  c.expect(back.theorems() == seed.theorems(), "corpus round trip");
  for (const char* sys : {"hilbert", "peano", "zfc"}) {
    for (auto m : {Metric::Cosine, Metric::Euclidean, Metric::Jaccard}) {
      auto mat = similarity_matrix(seed.slice(sys), m);
      auto table = parse_matrix_csv(export_matrix_csv(mat));
      c.expect(table.labels == mat.labels(), "csv labels");
      for (std::size_t i = 0; i < mat.size(); ++i)
        for (std::size_t j = 0; j < mat.size(); ++j)
          c.expect(std::abs(table.values[i][j] - mat.at(i, j)) <= k_roundtrip_tol, "csv value");
    }
  }
  for (const auto& s : builtin_registry().systems()) {
    auto again = load_system(dump_system(s));
    c.expect(again == s, "system round trip for " + s.id());
  }
}

void robustness(Check& c) {
  const char* statement = "There are infinitely many primes.";
  BackendConfig unreachable{"http://127.0.0.1:1/v1/chat/completions", "key", "model", 2, BackendMode::Auto};
  auto s = suggest(statement, seed_paper_corpus(), unreachable);
  c.expect(s.backend == BackendKind::Offline, "auto fallback not flagged offline");
  c.expect(s.vector.size() == 5 && s.system_id == "peano", "fallback suggestion invalid");

  test_support::StubServer stub(chat_body("Peano arithmetic, probably."));
  BackendConfig cfg{stub.endpoint(), "key", "model", 5, BackendMode::Remote};
  ErrorCode code = ErrorCode::Io;
  bool raised = false;
  try {
    suggest(statement, seed_paper_corpus(), cfg);
  } catch (const Error& e) {
    raised = true;
    code = e.code();
  }
  c.expect(raised && code == ErrorCode::MalformedBackendReply, "malformed reply not reported");
  c.expect(stub.requests() == 2, "expected 2 requests, saw " + std::to_string(stub.requests()));
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "seed fidelity", seed_fidelity},
      {2, "suggest: infinitely many primes",
       [](Check& c) { worked_example(c, "There are infinitely many primes.", "peano", {1, 1, 0, 0, 1}, "add_comm"); }},
      {3, "suggest: triangle angle sum",
       [](Check& c) {
         worked_example(c, "The sum of the interior angles of a triangle is 180 degrees.", "hilbert",
                        {1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1}, "pythagorean");
       }},
      {4, "derived hilbert cosine values", derived_metrics},
      {5, "clustering heights and naive reference", clustering},
      {6, "metric property suite", metric_properties},
      {7, "support algebra", support_algebra},
      {8, "heatmap structure", heatmap_structure},
      {9, "round trips", round_trips},
      {10, "backend robustness", robustness},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.failure = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.failure.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << cr.number << " " << cr.name << " (" << ms << " ms)";
    if (!ok) std::cout << ": " << check.failure;
    std::cout << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
