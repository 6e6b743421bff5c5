/*
 *   Copyright 2026 The rml-rough Authors
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

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace rml;
using rml::testing::chain;
using rml::testing::diamond;
using rml::testing::m6;
using rml::testing::pure7;

TEST(ElementSet, BasicOperations) {
  ElementSet s{1, 3, 5};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.front(), 1u);
  EXPECT_EQ(s.indices(), (std::vector<Element>{1, 3, 5}));
  EXPECT_TRUE(ElementSet({1, 5}).subset_of(s));
  EXPECT_EQ(s - ElementSet{3}, (ElementSet{1, 5}));
  EXPECT_EQ(ElementSet::all(64).size(), 64u);
}

TEST(ElementSet, NonemptySubsetsAreVisitedOnce) {
  const ElementSet u{0, 2, 7};
  std::vector<ElementSet> seen;
  for_each_nonempty_subset(u, [&](ElementSet s) { seen.push_back(s); });
  EXPECT_EQ(seen.size(), 7u);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    EXPECT_TRUE(seen[i].subset_of(u));
    for (std::size_t j = 0; j < i; ++j) EXPECT_NE(seen[i], seen[j]);
  }
}

TEST(FinitePoset, M6BoundsOfAPair) {
  const FinitePoset p = m6();
  const ElementSet ab = p.set_of({"a", "b"});
  EXPECT_EQ(p.upper_bounds(ab), p.set_of({"c", "d", "top"}));
  EXPECT_EQ(p.multisup(ab), p.set_of({"c", "d"}));
  EXPECT_EQ(p.multiinf(ab), p.set_of({"bot"}));
  EXPECT_EQ(p.multiinf(p.set_of({"c", "d"})), p.set_of({"a", "b"}));
  EXPECT_EQ(p.format(p.multisup(ab)), "{c, d}");
}

TEST(FinitePoset, EmptySetBounds) {
  const FinitePoset p = m6();
  EXPECT_EQ(p.upper_bounds(ElementSet{}), p.all());
  EXPECT_EQ(p.multisup(ElementSet{}), p.set_of({"bot"}));
  EXPECT_EQ(p.multiinf(ElementSet{}), p.set_of({"top"}));
}

TEST(FinitePoset, ClosuresAndAntichains) {
  const FinitePoset p = m6();
  EXPECT_EQ(p.up_closure(p.set_of({"a"})), p.set_of({"a", "c", "d", "top"}));
  EXPECT_EQ(p.down_closure(p.set_of({"c"})), p.set_of({"bot", "a", "b", "c"}));
  EXPECT_TRUE(p.is_antichain(p.set_of({"c", "d"})));
  EXPECT_FALSE(p.is_antichain(p.set_of({"a", "c"})));
}

TEST(FinitePoset, CyclesAreRejectedWithTheCycle) {
  try {
    FinitePoset::from_pairs({"a", "b"}, {{0, 1}, {1, 0}});
    FAIL() << "expected an error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("a<b<a"), std::string::npos);
  }
}

TEST(FinitePoset, MatrixValidation) {
  EXPECT_THROW(FinitePoset::from_matrix({"a", "b"}, {{true, false}, {false, false}}), InputError);
  EXPECT_THROW(FinitePoset::from_matrix({"a", "b"}, {{true, true}, {true, true}}), InputError);
  EXPECT_THROW(FinitePoset::from_matrix({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}}),
               InputError);
  EXPECT_NO_THROW(FinitePoset::from_matrix({"a", "b"}, {{true, true}, {false, true}}));
}

TEST(FinitePoset, DuplicateAndUnknownNames) {
  EXPECT_THROW(FinitePoset::from_pairs({"a", "a"}, {}), InputError);
  EXPECT_THROW(m6().index_of("zz"), UnknownElement);
}

TEST(FinitePoset, CoversAndLinearExtension) {
  const FinitePoset p = m6();
  EXPECT_EQ(p.covers().size(), 8u);
  const auto ext = p.linear_extension();
  ASSERT_EQ(ext.size(), p.size());
  for (std::size_t i = 0; i < ext.size(); ++i)
    for (std::size_t j = i + 1; j < ext.size(); ++j) EXPECT_FALSE(p.less(ext[j], ext[i]));
}

TEST(Classify, Shapes) {
  const auto c3 = classify(chain(3));
  EXPECT_TRUE(c3.bounded && c3.lattice && c3.multilattice && c3.complete_multilattice);
  EXPECT_FALSE(c3.pure_multilattice);

  const auto d = classify(diamond());
  EXPECT_TRUE(d.lattice);

  const auto m = classify(m6());
  EXPECT_TRUE(m.bounded);
  EXPECT_FALSE(m.lattice);
  EXPECT_TRUE(m.multilattice);
  EXPECT_TRUE(m.pure_multilattice);
  EXPECT_TRUE(m.complete_multilattice);

  EXPECT_TRUE(classify(pure7()).pure_multilattice);

  const auto anti = classify(FinitePoset::from_pairs({"a", "b"}, {}));
  EXPECT_FALSE(anti.bounded);
  EXPECT_FALSE(anti.complete_multilattice);
}

// Property: multisup(X) is an antichain of upper bounds, and every upper bound lies above one of them.
TEST(FinitePoset, MultisupInvariantOnRandomSubsets) {
  std::mt19937_64 rng(7);
  for (const FinitePoset& p : {m6(), pure7(), diamond(), chain(5)}) {
    for (int i = 0; i < 200; ++i) {
      ElementSet x;
      for (Element e = 0; e < p.size(); ++e)
        if (rng() % 2) x.insert(e);
      const ElementSet sup = p.multisup(x);
      const ElementSet inf = p.multiinf(x);
      EXPECT_TRUE(p.is_antichain(sup));
      EXPECT_TRUE(p.is_antichain(inf));
      EXPECT_TRUE(sup.subset_of(p.upper_bounds(x)));
      EXPECT_TRUE(inf.subset_of(p.lower_bounds(x)));
      for (Element u : p.upper_bounds(x)) EXPECT_FALSE((sup & p.down(u)).empty());
      for (Element l : p.lower_bounds(x)) EXPECT_FALSE((inf & p.up(l)).empty());
    }
  }
}
