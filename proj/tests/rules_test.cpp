// Copyright 2026 The votepriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "votepriv/rules.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "testutil.hpp"
#include "votepriv/orders.hpp"

namespace votepriv {
namespace {

using testutil::Q;

Profile profile_from(int m, std::initializer_list<std::pair<LinearOrder, int>> votes) {
  Profile p;
  p.counts.assign(static_cast<std::size_t>(num_orders(m)), 0);
  for (const auto& [order, count] : votes) p[order_index(order)] += count;
  return p;
}

TEST(OrdersTest, CanonicalEnumeration) {
  const auto two = canonical_orders(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], (LinearOrder{0, 1}));
  EXPECT_EQ(two[1], (LinearOrder{1, 0}));

  const auto three = canonical_orders(3);
  ASSERT_EQ(three.size(), 6u);
  EXPECT_EQ(three[0], (LinearOrder{0, 1, 2}));
  EXPECT_EQ(three[5], (LinearOrder{2, 1, 0}));
  for (std::size_t i = 0; i < three.size(); ++i) {
    EXPECT_EQ(order_index(three[i]), static_cast<int>(i));
  }

  EXPECT_EQ(canonical_orders(1), std::vector<LinearOrder>{{0}});
  EXPECT_THROW(canonical_orders(6), std::invalid_argument);
  EXPECT_EQ(order_to_string(three[1]), "0>2>1");
}

TEST(PositionalTest, BordaAndPluralityExamples) {
  const GsrRule borda3 = GsrRule::borda(3);
  const Profile single = profile_from(3, {{{0, 1, 2}, 1}});
  EXPECT_EQ(borda3.score(single),
            (std::vector<Rational>{Q("2"), Q("1"), Q("0")}));
  EXPECT_EQ(borda3.winner(single), 0);

  // Top counts 2,2,1: the tie between candidates 0 and 1 breaks low.
  const GsrRule plurality3 = GsrRule::plurality(3);
  const Profile tied = profile_from(3, {{{0, 1, 2}, 2}, {{1, 0, 2}, 2}, {{2, 0, 1}, 1}});
  EXPECT_EQ(plurality3.score(tied),
            (std::vector<Rational>{Q("2"), Q("2"), Q("1")}));
  EXPECT_EQ(plurality3.winner(tied), 0);
  EXPECT_EQ(plurality3.winner_set(tied), (std::vector<int>{0, 1}));

  // A 2-approval vote approves its top two candidates.
  const GsrRule approval = GsrRule::k_approval(2, 3);
  EXPECT_EQ(approval.score(single),
            (std::vector<Rational>{Q("1"), Q("1"), Q("0")}));

  // Borda with two candidates is majority.
  const GsrRule borda2 = GsrRule::borda(2);
  const Profile majority = profile_from(2, {{{0, 1}, 3}, {{1, 0}, 1}});
  EXPECT_EQ(borda2.winner(majority), 0);

  EXPECT_THROW(GsrRule::positional({Q("0"), Q("1")}, 2), std::invalid_argument);
  EXPECT_THROW(GsrRule::positional({Q("1")}, 2), std::invalid_argument);
}

TEST(PairwiseRulesTest, CondorcetAndCycle) {
  const GsrRule maximin = GsrRule::maximin(3);
  const GsrRule copeland = GsrRule::copeland(3);

  // Fully symmetric cycle: every pairwise margin ties after the min/sum,
  // so the lexicographic tie-break picks candidate 0.
  const Profile cycle = profile_from(3, {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}});
  EXPECT_EQ(maximin.winner(cycle), 0);
  EXPECT_EQ(copeland.winner(cycle), 0);
  EXPECT_EQ(maximin.winner_set(cycle), (std::vector<int>{0, 1, 2}));

  // Candidate 1 is the Condorcet winner.
  const Profile condorcet = profile_from(3, {{{1, 0, 2}, 3}, {{0, 1, 2}, 2}});
  EXPECT_EQ(maximin.winner(condorcet), 1);
  EXPECT_EQ(copeland.winner(condorcet), 1);

  // With two candidates both rules coincide with majority.
  const Profile two = profile_from(2, {{{0, 1}, 2}, {{1, 0}, 5}});
  EXPECT_EQ(GsrRule::maximin(2).winner(two), 1);
  EXPECT_EQ(GsrRule::copeland(2).winner(two), 1);
}

TEST(StvTest, ExamplesAndPluralityAgreement) {
  const GsrRule stv3 = GsrRule::stv(3);

  // Candidate 2 is eliminated first, its vote transfers to 1.
  const Profile p = profile_from(3, {{{0, 1, 2}, 2}, {{1, 0, 2}, 2}, {{2, 1, 0}, 1}});
  EXPECT_EQ(stv3.winner(p), 1);

  // Fully symmetric profile resolves through the tie-break chain.
  Profile all_once;
  all_once.counts.assign(6, 1);
  EXPECT_EQ(stv3.winner(all_once), 0);

  // One elimination round with two candidates: identical to plurality,
  // exhaustively over every profile of up to 6 votes.
  const GsrRule stv2 = GsrRule::stv(2);
  const GsrRule plurality2 = GsrRule::plurality(2);
  for (int n = 0; n <= 6; ++n) {
    for (int a = 0; a <= n; ++a) {
      const Profile q{a, n - a};
      EXPECT_EQ(stv2.winner(q), plurality2.winner(q)) << a << "," << n - a;
    }
  }

  // Generalized score dimension sum_{i<m} C(m,i)(m-i).
  EXPECT_EQ(GsrRule::stv(2).score_dim(), 4);
  EXPECT_EQ(GsrRule::stv(3).score_dim(), 12);
  EXPECT_EQ(GsrRule::stv(4).score_dim(), 32);
}

TEST(AlphaMajorityTest, BoundaryIncluded) {
  EXPECT_EQ(alpha_majority(Q("1/2"), Histogram{4, 3}), 0);
  EXPECT_EQ(alpha_majority(Q("1/2"), Histogram{2, 2}), 0);
  EXPECT_EQ(alpha_majority(Q("1"), Histogram{6, 1}), 1);
  EXPECT_EQ(alpha_majority(Q("1"), Histogram{7, 0}), 0);
  EXPECT_EQ(alpha_majority(Q("0"), Histogram{0, 5}), 0);
  EXPECT_THROW(alpha_majority(Q("1/2"), Histogram{1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(alpha_majority(Q("3/2"), Histogram{1, 1}), std::invalid_argument);
}

std::vector<GsrRule> all_rules(int m) {
  std::vector<GsrRule> rules = {GsrRule::plurality(m), GsrRule::borda(m),
                                GsrRule::k_approval(2, m), GsrRule::veto(m),
                                GsrRule::maximin(m), GsrRule::copeland(m),
                                GsrRule::stv(m)};
  return rules;
}

TEST(GsrConsistencyProperty, SelectorMatchesDirectEvaluation) {
  testutil::TestRng rng(37);
  for (int m : {2, 3}) {
    const auto rules = all_rules(m);
    for (int i = 0; i < 500; ++i) {
      const Profile p = rng.histogram(rng.range(0, 20), num_orders(m));
      for (const GsrRule& rule : rules) {
        EXPECT_EQ(rule.winner(p), rule.winner_via_weak_order(p))
            << rule.name() << " on " << p.to_string();
      }
    }
  }
}

TEST(CancelingOutProperty, AddingEveryRankingOnceKeepsTheWinner) {
  testutil::TestRng rng(41);
  const int m = 3;
  const auto rules = all_rules(m);
  for (int i = 0; i < 500; ++i) {
    const Profile p = rng.histogram(rng.range(0, 15), num_orders(m));
    Profile padded = p;
    for (int v = 0; v < num_orders(m); ++v) ++padded[v];
    for (const GsrRule& rule : rules) {
      EXPECT_EQ(rule.winner(p), rule.winner(padded)) << rule.name();
    }
  }
}

TEST(MonotonicityProperty, RaisingTheWinnerNeverHurts) {
  testutil::TestRng rng(43);
  const int m = 3;
  const auto orders = canonical_orders(m);
  // STV is deliberately absent: it is not monotone.
  const std::vector<GsrRule> rules = {GsrRule::plurality(m), GsrRule::borda(m),
                                      GsrRule::k_approval(2, m), GsrRule::veto(m),
                                      GsrRule::maximin(m), GsrRule::copeland(m)};
  for (int i = 0; i < 500; ++i) {
    const Profile p = rng.histogram(rng.range(1, 15), num_orders(m));
    for (const GsrRule& rule : rules) {
      const int w = rule.winner(p);
      for (int v = 0; v < num_orders(m); ++v) {
        if (p[v] == 0) continue;
        const LinearOrder& order = orders[static_cast<std::size_t>(v)];
        const auto pos_it = std::find(order.begin(), order.end(), w);
        const int pos = static_cast<int>(pos_it - order.begin());
        if (pos == 0) continue;
        LinearOrder raised = order;
        std::swap(raised[static_cast<std::size_t>(pos)],
                  raised[static_cast<std::size_t>(pos - 1)]);
        Profile q = p;
        --q[v];
        ++q[order_index(raised)];
        EXPECT_EQ(rule.winner(q), w)
            << rule.name() << " raised " << order_to_string(order) << " in "
            << p.to_string();
      }
    }
  }
}

TEST(NeutralityProperty, RelabelingPermutesTheWinnerSet) {
  testutil::TestRng rng(47);
  const int m = 3;
  const auto orders = canonical_orders(m);
  const std::vector<GsrRule> rules = {GsrRule::plurality(m), GsrRule::borda(m),
                                      GsrRule::k_approval(2, m),
                                      GsrRule::maximin(m), GsrRule::copeland(m)};
  for (int i = 0; i < 200; ++i) {
    const Profile p = rng.histogram(rng.range(0, 12), num_orders(m));
    // Random candidate relabeling.
    LinearOrder sigma = orders[static_cast<std::size_t>(rng.below(num_orders(m)))];
    Profile relabeled;
    relabeled.counts.assign(p.counts.size(), 0);
    for (int v = 0; v < num_orders(m); ++v) {
      LinearOrder mapped = orders[static_cast<std::size_t>(v)];
      for (int& cand : mapped) cand = sigma[static_cast<std::size_t>(cand)];
      relabeled[order_index(mapped)] = p[v];
    }
    for (const GsrRule& rule : rules) {
      std::vector<int> expected;
      for (int cand : rule.winner_set(p)) {
        expected.push_back(sigma[static_cast<std::size_t>(cand)]);
      }
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(rule.winner_set(relabeled), expected) << rule.name();
    }
  }
}

TEST(RuleParsingTest, FromName) {
  EXPECT_EQ(GsrRule::from_name("plurality", 3).name(), "plurality");
  EXPECT_EQ(GsrRule::from_name("kapproval:2", 3).name(), "kapproval:2");
  EXPECT_EQ(GsrRule::from_name("2,1,0", 3).winner(
                profile_from(3, {{{0, 1, 2}, 1}})),
            0);
  EXPECT_THROW(GsrRule::from_name("approval", 3), std::invalid_argument);
  // Veto and Borda coincide at m = 2.
  const Profile p = profile_from(2, {{{0, 1}, 1}, {{1, 0}, 2}});
  EXPECT_EQ(GsrRule::from_name("veto", 2).winner(p),
            GsrRule::from_name("borda", 2).winner(p));
}

}  // namespace
}  // namespace votepriv
