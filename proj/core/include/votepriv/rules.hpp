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
#ifndef VOTEPRIV_RULES_HPP_
#define VOTEPRIV_RULES_HPP_

#include <string>
#include <vector>

#include "votepriv/histogram.hpp"
#include "votepriv/orders.hpp"
#include "votepriv/rational.hpp"

namespace votepriv {

// A profile is a histogram of votes over the m! canonical linear orders.
using Profile = Histogram;

// Generalized scoring rule: per-vote score vectors f : orders -> Q^K plus a
// winner selector g that reads only the weak order of the summed score's K
// components. All built-in tie-breaking is lexicographic by candidate index
// (the convention is centralized here so it can be swapped if a different
// one is ever needed for comparisons against external tabulations).
class GsrRule {
 public:
  enum class Kind { kPositional, kMaximin, kCopeland, kStv };

  // Positional rule from a non-increasing scoring vector of length m.
  // Throws if the vector increases anywhere.
  static GsrRule positional(std::vector<Rational> scores, int m,
                            std::string name = "");
  static GsrRule plurality(int m);
  static GsrRule k_approval(int k, int m);
  static GsrRule veto(int m);
  static GsrRule borda(int m);
  static GsrRule maximin(int m);
  static GsrRule copeland(int m);
  static GsrRule stv(int m);

  // Parses "plurality", "kapproval:k", "veto", "borda", "stv", "maximin",
  // "copeland", or a custom positional vector "s1,s2,...,sm" of rationals.
  static GsrRule from_name(const std::string& name, int m);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  int m() const { return m_; }
  int score_dim() const { return K_; }
  int order_count() const { return static_cast<int>(f_.size()); }

  // f(P) = sum_V P[V] f(V) as exact rationals.
  std::vector<Rational> score(const Profile& p) const;
  // Integer view: score(P) == score_int(P) / score_scale(), componentwise.
  std::vector<long long> score_int(const Profile& p) const;
  const BigInt& score_scale() const { return scale_; }

  // g(Ord(f(P))): the selector sees only the weak order of the components.
  int winner_via_weak_order(const Profile& p) const;

  // Direct evaluation (positional argmax / pairwise minima / Copeland
  // margins / STV elimination rounds). Agrees with winner_via_weak_order on
  // every profile; the delta engine uses this faster path.
  int winner(const Profile& p) const;

  // Pre-tie-break co-winner set, ascending. Defined for positional, maximin
  // and Copeland; throws for STV (its co-winner set is not score-local).
  std::vector<int> winner_set(const Profile& p) const;

 private:
  GsrRule() = default;
  void fill_positional(const std::vector<Rational>& scores);
  void fill_pairwise();
  void fill_stv();
  void check_profile(const Profile& p) const;

  std::vector<long long> pairwise_counts(const Profile& p) const;
  int stv_winner_direct(const Profile& p) const;

  Kind kind_ = Kind::kPositional;
  int m_ = 0;
  int K_ = 0;
  std::string name_;
  BigInt scale_ = 1;
  std::vector<std::vector<long long>> f_;  // order_count x K, scaled
  long long max_abs_f_ = 0;
  std::vector<LinearOrder> orders_;
  // stv_component_[eliminated_mask][j] -> component index of (mask, j).
  std::vector<std::vector<int>> stv_component_;
  // Pairwise component index (a, b), a != b, for maximin/copeland.
  int pair_component(int a, int b) const { return a * (m_ - 1) + b - (b > a); }
};

// Biased majority over two values: outputs 0 (value x1) iff at least
// alpha * n entries are x1 — the boundary is included — and 1 otherwise.
// Exact rational comparison. Requires t.bins() == 2 and 0 <= alpha <= 1.
int alpha_majority(const Rational& alpha, const Histogram& t);

}  // namespace votepriv

#endif  // VOTEPRIV_RULES_HPP_
