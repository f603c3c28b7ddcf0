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

#include <array>
#include <string_view>

// Embedded copies of data/systems/*.json and data/lexicon.json.
// Keep in sync with the files; data_files_test checks equality.

namespace atlas::builtin {

inline constexpr std::string_view k_hilbert_definition = R"json({
  "id": "hilbert",
  "name": "Hilbert Geometry",
  "axioms": [
    {"key": "I1", "name": "Line through two points", "group": "incidence", "description": "For any two distinct points there is exactly one line containing both."},
    {"key": "I2", "name": "Points on a line", "group": "incidence", "description": "Every line contains at least two distinct points."},
    {"key": "I3", "name": "Non-collinear points", "group": "incidence", "description": "There exist three points that do not lie on a common line."},
    {"key": "O1", "name": "Betweenness", "group": "order", "description": "If B lies between A and C, then A, B, C are distinct collinear points and B also lies between C and A."},
    {"key": "O2", "name": "Pasch's axiom", "group": "order", "description": "A line entering a triangle through one side, and missing the vertices, leaves through one of the other two sides."},
    {"key": "P1", "name": "Parallel postulate", "group": "parallel", "description": "Through a point not on a given line there is at most one line parallel to it."},
    {"key": "C1", "name": "Segment transfer", "group": "congruence", "description": "A segment can be laid off on a given ray from its origin, uniquely up to congruence."},
    {"key": "C2", "name": "Segment addition", "group": "congruence", "description": "Sums of congruent adjacent segments are congruent."},
    {"key": "C3", "name": "Angle transfer", "group": "congruence", "description": "An angle can be laid off on a given side of a given ray, uniquely up to congruence."},
    {"key": "C4", "name": "Side-angle-side", "group": "congruence", "description": "Two triangles with two congruent sides and congruent included angles have their remaining angles congruent."},
    {"key": "A1", "name": "Archimedean axiom", "group": "continuity", "description": "Any segment can be exceeded by laying off finitely many copies of another segment."},
    {"key": "A2", "name": "Line completeness", "group": "continuity", "description": "The points of a line admit no extension that preserves incidence, order, congruence and the Archimedean axiom."}
  ]
}
)json";

inline constexpr std::string_view k_peano_definition = R"json({
  "id": "peano",
  "name": "Peano Arithmetic",
  "axioms": [
    {"key": "P1", "name": "Zero is a natural number", "group": "construction", "description": "0 is a natural number."},
    {"key": "P2", "name": "Successor closure", "group": "construction", "description": "Every natural number n has a successor S(n) that is a natural number."},
    {"key": "P3", "name": "Successor injectivity", "group": "successor", "description": "If S(m) = S(n) then m = n."},
    {"key": "P4", "name": "Zero is not a successor", "group": "successor", "description": "There is no natural number n with S(n) = 0."},
    {"key": "P5", "name": "Induction", "group": "induction", "description": "A property holding for 0 and preserved by the successor holds for every natural number."}
  ]
}
)json";

inline constexpr std::string_view k_zfc_definition = R"json({
  "id": "zfc",
  "name": "ZFC Set Theory",
  "axioms": [
    {"key": "EXT", "name": "Extensionality", "group": "extensionality", "description": "Sets with the same elements are equal."},
    {"key": "PAIR", "name": "Pairing", "group": "construction", "description": "For any a and b there is a set containing exactly a and b."},
    {"key": "UNION", "name": "Union", "group": "construction", "description": "For any set of sets there is a set whose elements are the elements of its members."},
    {"key": "SEP", "name": "Separation", "group": "comprehension", "description": "For any set and any definable property there is the subset of elements with that property."},
    {"key": "POW", "name": "Power set", "group": "construction", "description": "For any set there is a set whose elements are exactly its subsets."},
    {"key": "EMPTY", "name": "Empty set", "group": "construction", "description": "There is a set with no elements."},
    {"key": "INF", "name": "Infinity", "group": "infinity", "description": "There is a set containing the empty set and closed under x -> x U {x}."},
    {"key": "REPL", "name": "Replacement", "group": "comprehension", "description": "The image of a set under a definable function is a set."},
    {"key": "FOUND", "name": "Foundation", "group": "foundation", "description": "Every non-empty set has an element disjoint from it."},
    {"key": "AC", "name": "Choice", "group": "choice", "description": "Every family of non-empty sets has a choice function."}
  ]
}
)json";

inline constexpr std::string_view k_vector_space_definition = R"json({
  "id": "vector_space",
  "name": "Vector Space",
  "axioms": [
    {"key": "V1", "name": "Additive associativity", "group": "addition", "description": "u + (v + w) = (u + v) + w."},
    {"key": "V2", "name": "Additive commutativity", "group": "addition", "description": "u + v = v + u."},
    {"key": "V3", "name": "Additive identity", "group": "addition", "description": "There is a zero vector 0 with v + 0 = v for every v."},
    {"key": "V4", "name": "Additive inverse", "group": "addition", "description": "For every v there is -v with v + (-v) = 0."},
    {"key": "V5", "name": "Scalar compatibility", "group": "scalar", "description": "a(bv) = (ab)v."},
    {"key": "V6", "name": "Scalar identity", "group": "scalar", "description": "1v = v."},
    {"key": "V7", "name": "Distributivity over vectors", "group": "distributivity", "description": "a(u + v) = au + av."},
    {"key": "V8", "name": "Distributivity over scalars", "group": "distributivity", "description": "(a + b)v = av + bv."}
  ]
}
)json";

inline constexpr std::string_view k_group_definition = R"json({
  "id": "group",
  "name": "Group Theory",
  "axioms": [
    {"key": "G1", "name": "Closure", "group": "structure", "description": "For all a and b in G, a * b is in G."},
    {"key": "G2", "name": "Associativity", "group": "structure", "description": "(a * b) * c = a * (b * c)."},
    {"key": "G3", "name": "Identity", "group": "identity", "description": "There is e in G with e * a = a * e = a for every a."},
    {"key": "G4", "name": "Inverse", "group": "inverse", "description": "For every a there is b with a * b = b * a = e."}
  ]
}
)json";

inline constexpr std::array<std::string_view, 5> k_system_definitions = {
    k_hilbert_definition,
    k_peano_definition,
    k_zfc_definition,
    k_vector_space_definition,
    k_group_definition,
};

inline constexpr std::string_view k_lexicon = R"json({
  "hilbert": ["angle", "angles", "bisector", "centroid", "circle", "circumcenter", "collinear", "congruent", "degrees", "geometry", "hypotenuse", "interior", "line", "lines", "orthocenter", "parallel", "perpendicular", "plane", "point", "points", "polygon", "right", "segment", "segments", "similar", "triangle", "triangles"],
  "peano": ["addition", "arithmetic", "composite", "composites", "divisible", "divisor", "even", "induction", "integer", "integers", "multiplication", "natural", "number", "numbers", "odd", "prime", "primes", "successor", "zero"],
  "zfc": ["cardinal", "choice", "element", "elements", "empty", "intersection", "ordinal", "pair", "power", "set", "sets", "singleton", "subset", "subsets", "union"],
  "vector_space": ["basis", "dimension", "linear", "linearly", "scalar", "scalars", "span", "subspace", "vector", "vectors"],
  "group": ["abelian", "associative", "coset", "cosets", "group", "groups", "homomorphism", "inverse", "inverses", "isomorphism", "subgroup", "subgroups"]
}
)json";

}  // namespace atlas::builtin
