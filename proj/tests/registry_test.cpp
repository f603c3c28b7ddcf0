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

#include <set>
#include <string>

#include <gtest/gtest.h>

#include "atlas/assistant.hpp"
#include "atlas/registry.hpp"
#include "test_util.hpp"

using namespace atlas;

using atlas::test_support::code_of;
using atlas::test_support::slurp;

TEST(Registry, BuiltinHasFiveSystemsWithPinnedDimensions) {
  const auto& reg = builtin_registry();
  ASSERT_EQ(reg.size(), 5u);
  EXPECT_EQ(reg.at("hilbert").dimension(), 12u);
  EXPECT_EQ(reg.at("peano").dimension(), 5u);
  EXPECT_EQ(reg.at("zfc").dimension(), 10u);
  EXPECT_EQ(reg.at("vector_space").dimension(), 8u);
  EXPECT_EQ(reg.at("group").dimension(), 4u);
}

TEST(Registry, AxiomIndicesMatchPositions) {
  for (const auto& s : builtin_registry().systems()) {
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      EXPECT_EQ(s.axiom_at(i).index, i) << s.id();
      EXPECT_EQ(s.index_of(s.axiom_at(i).key), i) << s.id();
    }
  }
}

TEST(Registry, HilbertGroupsCoverTheFiveFamilies) {
  const auto& h = builtin_registry().at("hilbert");
  std::set<std::string> groups;
  for (const auto& ax : h.axioms()) groups.insert(ax.group);
  EXPECT_EQ(groups, (std::set<std::string>{"incidence", "order", "parallel", "congruence", "continuity"}));
}

TEST(Registry, LoadReportsErrors) {
  EXPECT_EQ(code_of([] { load_system(R"({"id": "empty", "name": "E", "axioms": []})"); }),
            ErrorCode::EmptySystem);
  EXPECT_EQ(code_of([] {
              load_system(R"({"id": "d", "name": "D", "axioms": [{"key": "A", "name": "a"}, {"key": "A", "name": "b"}]})");
            }),
            ErrorCode::DuplicateKey);
  EXPECT_EQ(code_of([] { load_system(R"({"id": "x", "name": "X", "axioms": [{"name": "no key"}]})"); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] { load_system(R"({"id": "Bad Id", "name": "X", "axioms": [{"key": "A", "name": "a"}]})"); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] { load_system(R"({"id": "x", "name": "X", "axioms": "nope"})"); }), ErrorCode::Parse);
}

TEST(Registry, ParseErrorsCarryLineAndField) {
  try {
    load_system("{\n  \"id\": \"x\",\n  \"name\": \"X\",\n  \"axioms\": [\n    {\"key\": 3, \"name\": \"a\"}\n  ]\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("$.axioms[0].key"), std::string::npos) << e.what();
  }
  try {
    load_system("{\n  \"id\": \"x\",\n  \"name\": \n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(Registry, DumpLoadRoundTrip) {
  for (const auto& s : builtin_registry().systems()) {
    EXPECT_EQ(load_system(dump_system(s)), s) << s.id();
  }
  AxiomSystem sparse("sparse", "Sparse", {{0, "K1", "first", "", ""}, {0, "K2", "second", "g", ""}});
  EXPECT_EQ(load_system(dump_system(sparse)), sparse);
}

TEST(Registry, ComposeOffsetsArePrefixSums) {
  const auto& reg = builtin_registry();
  std::vector<AxiomSystem> hp = {reg.at("hilbert"), reg.at("peano")};
  auto c = compose(hp);
  EXPECT_EQ(c.dimension(), 17u);
  EXPECT_EQ(c.offset_of("hilbert"), 0u);
  EXPECT_EQ(c.offset_of("peano"), 12u);
  EXPECT_EQ(c.id(), "hilbert+peano");

  std::vector<AxiomSystem> p = {reg.at("peano")};
  EXPECT_EQ(compose(p).dimension(), 5u);
  EXPECT_EQ(compose(p).offset_of("peano"), 0u);

  std::vector<AxiomSystem> pp = {reg.at("peano"), reg.at("peano")};
  EXPECT_EQ(code_of([&] { compose(pp); }), ErrorCode::DuplicatePart);
  EXPECT_EQ(code_of([] { compose(std::span<const AxiomSystem>{}); }), ErrorCode::EmptyComposition);
}

TEST(Registry, ComposeIsAssociativeUpToFlattening) {
  const auto& reg = builtin_registry();
  const auto& all = reg.systems();
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b)
      for (std::size_t c = 0; c < all.size(); ++c) {
        if (a == b || b == c || a == c) continue;
        std::vector<AxiomSystem> abc = {all[a], all[b], all[c]};
        std::vector<AxiomSystem> ab = {all[a], all[b]};
        std::vector<AxiomSystem> flat;
        const auto prefix = compose(ab);
        for (const auto& part : prefix.parts()) flat.push_back(reg.at(part));
        flat.push_back(all[c]);
        auto lhs = compose(abc), rhs = compose(flat);
        EXPECT_EQ(lhs.dimension(), rhs.dimension());
        for (const auto& part : lhs.parts()) EXPECT_EQ(lhs.offset_of(part), rhs.offset_of(part));
      }
}

TEST(Registry, CompositeIdsResolve) {
  const auto& reg = builtin_registry();
  EXPECT_TRUE(reg.contains("peano+zfc"));
  EXPECT_FALSE(reg.contains("peano+ring"));
  EXPECT_EQ(reg.dimension_of("peano+zfc"), 15u);
  EXPECT_EQ(code_of([&] { reg.at("ring"); }), ErrorCode::UnknownSystem);
}

TEST(Registry, ExtensionCreatesNewRegistry) {
  const auto& base = builtin_registry();
  auto ring = load_system(R"({"id": "ring", "name": "Ring", "axioms": [{"key": "R1", "name": "a"}]})");
  auto extended = base.with(ring);
  EXPECT_EQ(extended.size(), 6u);
  EXPECT_EQ(base.size(), 5u);
  EXPECT_EQ(code_of([&] { extended.with(ring); }), ErrorCode::DuplicateSystem);
}

TEST(DataFiles, ShippedDefinitionsMatchEmbeddedCopies) {
  for (const auto& s : builtin_registry().systems()) {
    auto path = std::string(ATLAS_DATA_DIR) + "/systems/" + s.id() + ".json";
    EXPECT_EQ(load_system(slurp(path)), s) << path;
  }
  auto lex = load_lexicon(slurp(std::string(ATLAS_DATA_DIR) + "/lexicon.json"));
  EXPECT_EQ(lex, default_lexicon());
}
