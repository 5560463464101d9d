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

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace votepriv {

namespace {

// Weak order of the components: rank[k] == 0 for the largest value, equal
// values share a rank.
std::vector<int> component_ranks(const std::vector<long long>& s) {
  std::vector<int> idx(s.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return s[static_cast<std::size_t>(a)] >
                                              s[static_cast<std::size_t>(b)]; });
  std::vector<int> ranks(s.size(), 0);
  int rank = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0 && s[static_cast<std::size_t>(idx[i])] !=
                     s[static_cast<std::size_t>(idx[i - 1])]) {
      ++rank;
    }
    ranks[static_cast<std::size_t>(idx[i])] = rank;
  }
  return ranks;
}

int argmax_lex(const std::vector<long long>& values) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[static_cast<std::size_t>(i)] >
        values[static_cast<std::size_t>(best)]) {
      best = i;
    }
  }
  return best;
}

std::vector<int> argmax_set(const std::vector<long long>& values) {
  const long long top = *std::max_element(values.begin(), values.end());
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (values[static_cast<std::size_t>(i)] == top) out.push_back(i);
  }
  return out;
}

}  // namespace

GsrRule GsrRule::positional(std::vector<Rational> scores, int m,
                            std::string name) {
  if (static_cast<int>(scores.size()) != m) {
    throw std::invalid_argument("positional rule: scoring vector length != m");
  }
  for (std::size_t i = 0; i + 1 < scores.size(); ++i) {
    if (scores[i] < scores[i + 1]) {
      throw std::invalid_argument(
          "positional rule: scoring vector must be non-increasing");
    }
  }
  GsrRule rule;
  rule.kind_ = Kind::kPositional;
  rule.m_ = m;
  rule.K_ = m;
  rule.orders_ = canonical_orders(m);
  rule.name_ = name.empty() ? "positional" : std::move(name);
  rule.fill_positional(scores);
  return rule;
}

GsrRule GsrRule::plurality(int m) {
  std::vector<Rational> s(static_cast<std::size_t>(m), Rational(0));
  s[0] = 1;
  return positional(std::move(s), m, "plurality");
}

GsrRule GsrRule::k_approval(int k, int m) {
  if (k < 1 || k > m) throw std::invalid_argument("k-approval: need 1 <= k <= m");
  std::vector<Rational> s(static_cast<std::size_t>(m), Rational(0));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = 1;
  return positional(std::move(s), m, "kapproval:" + std::to_string(k));
}

GsrRule GsrRule::veto(int m) {
  std::vector<Rational> s(static_cast<std::size_t>(m), Rational(1));
  s[static_cast<std::size_t>(m - 1)] = 0;
  return positional(std::move(s), m, "veto");
}

GsrRule GsrRule::borda(int m) {
  std::vector<Rational> s;
  s.reserve(static_cast<std::size_t>(m));
  for (int i = m - 1; i >= 0; --i) s.emplace_back(i);
  return positional(std::move(s), m, "borda");
}

GsrRule GsrRule::maximin(int m) {
  if (m < 2) throw std::invalid_argument("maximin: need m >= 2");
  GsrRule rule;
  rule.kind_ = Kind::kMaximin;
  rule.m_ = m;
  rule.K_ = m * (m - 1);
  rule.orders_ = canonical_orders(m);
  rule.name_ = "maximin";
  rule.fill_pairwise();
  return rule;
}

GsrRule GsrRule::copeland(int m) {
  if (m < 2) throw std::invalid_argument("copeland: need m >= 2");
  GsrRule rule;
  rule.kind_ = Kind::kCopeland;
  rule.m_ = m;
  rule.K_ = m * (m - 1);
  rule.orders_ = canonical_orders(m);
  rule.name_ = "copeland";
  rule.fill_pairwise();
  return rule;
}

GsrRule GsrRule::stv(int m) {
  if (m < 1) throw std::invalid_argument("stv: need m >= 1");
  GsrRule rule;
  rule.kind_ = Kind::kStv;
  rule.m_ = m;
  rule.orders_ = canonical_orders(m);
  rule.name_ = "stv";
  rule.fill_stv();
  return rule;
}

GsrRule GsrRule::from_name(const std::string& name, int m) {
  if (name == "plurality") return plurality(m);
  if (name == "veto") return veto(m);
  if (name == "borda") return borda(m);
  if (name == "stv") return stv(m);
  if (name == "maximin") return maximin(m);
  if (name == "copeland") return copeland(m);
  if (name.rfind("kapproval:", 0) == 0) {
    const int k = std::stoi(name.substr(10));
    return k_approval(k, m);
  }
  if (name.find(',') != std::string::npos) {
    std::vector<Rational> scores;
    std::size_t pos = 0;
    while (pos <= name.size()) {
      std::size_t comma = name.find(',', pos);
      if (comma == std::string::npos) comma = name.size();
      scores.push_back(parse_rational(name.substr(pos, comma - pos)));
      pos = comma + 1;
      if (comma == name.size()) break;
    }
    return positional(std::move(scores), m, name);
  }
  throw std::invalid_argument("unknown rule: " + name);
}

void GsrRule::fill_positional(const std::vector<Rational>& scores) {
  scale_ = 1;
  for (const Rational& s : scores) {
    mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), s.get_den().get_mpz_t());
  }
  std::vector<long long> scaled(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    BigInt v = scores[i].get_num() * (scale_ / scores[i].get_den());
    if (!v.fits_slong_p()) {
      throw std::invalid_argument("positional rule: scoring vector too large");
    }
    scaled[i] = v.get_si();
  }
  f_.assign(orders_.size(), std::vector<long long>(static_cast<std::size_t>(K_), 0));
  for (std::size_t v = 0; v < orders_.size(); ++v) {
    const LinearOrder& order = orders_[v];
    for (int pos = 0; pos < m_; ++pos) {
      f_[v][static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] =
          scaled[static_cast<std::size_t>(pos)];
    }
  }
  max_abs_f_ = 0;
  for (long long s : scaled) max_abs_f_ = std::max(max_abs_f_, std::abs(s));
}

void GsrRule::fill_pairwise() {
  scale_ = 1;
  max_abs_f_ = 1;
  f_.assign(orders_.size(), std::vector<long long>(static_cast<std::size_t>(K_), 0));
  for (std::size_t v = 0; v < orders_.size(); ++v) {
    const LinearOrder& order = orders_[v];
    for (int i = 0; i < m_; ++i) {
      for (int j = i + 1; j < m_; ++j) {
        const int above = order[static_cast<std::size_t>(i)];
        const int below = order[static_cast<std::size_t>(j)];
        f_[v][static_cast<std::size_t>(pair_component(above, below))] = 1;
      }
    }
  }
}

void GsrRule::fill_stv() {
  // Components are indexed by (A, j): A a proper subset of candidates
  // (possibly empty), j not in A; the component counts votes that rank j
  // first once A is removed. K = sum_{i=0}^{m-1} C(m,i) (m-i).
  std::vector<std::pair<int, int>> comps;
  for (int mask = 0; mask < (1 << m_); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) >= m_) continue;
    for (int j = 0; j < m_; ++j) {
      if (!(mask & (1 << j))) comps.emplace_back(mask, j);
    }
  }
  K_ = static_cast<int>(comps.size());
  stv_component_.assign(static_cast<std::size_t>(1 << m_),
                        std::vector<int>(static_cast<std::size_t>(m_), -1));
  for (int k = 0; k < K_; ++k) {
    stv_component_[static_cast<std::size_t>(comps[static_cast<std::size_t>(k)].first)]
                  [static_cast<std::size_t>(comps[static_cast<std::size_t>(k)].second)] = k;
  }
  scale_ = 1;
  max_abs_f_ = 1;
  f_.assign(orders_.size(), std::vector<long long>(static_cast<std::size_t>(K_), 0));
  for (std::size_t v = 0; v < orders_.size(); ++v) {
    const LinearOrder& order = orders_[v];
    for (const auto& [mask, j] : comps) {
      for (int pos = 0; pos < m_; ++pos) {
        const int cand = order[static_cast<std::size_t>(pos)];
        if (mask & (1 << cand)) continue;  // removed, look further down
        if (cand == j) {
          f_[v][static_cast<std::size_t>(
              stv_component_[static_cast<std::size_t>(mask)]
                            [static_cast<std::size_t>(j)])] = 1;
        }
        break;
      }
    }
  }
}

void GsrRule::check_profile(const Profile& p) const {
  if (p.bins() != static_cast<int>(orders_.size())) {
    throw std::invalid_argument("profile has wrong number of order bins");
  }
  if (max_abs_f_ > 0) {
    const long long n = p.total();
    if (n > std::numeric_limits<long long>::max() / 4 / std::max<long long>(1, max_abs_f_)) {
      throw std::overflow_error("profile too large for integer score path");
    }
  }
}

std::vector<long long> GsrRule::score_int(const Profile& p) const {
  check_profile(p);
  std::vector<long long> acc(static_cast<std::size_t>(K_), 0);
  for (std::size_t v = 0; v < f_.size(); ++v) {
    const int count = p[static_cast<int>(v)];
    if (count == 0) continue;
    const auto& row = f_[v];
    for (std::size_t k = 0; k < row.size(); ++k) {
      acc[k] += static_cast<long long>(count) * row[k];
    }
  }
  return acc;
}

std::vector<Rational> GsrRule::score(const Profile& p) const {
  const auto ints = score_int(p);
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (long long v : ints) {
    out.push_back(make_rational(BigInt(static_cast<long>(v)), scale_));
  }
  return out;
}

std::vector<long long> GsrRule::pairwise_counts(const Profile& p) const {
  return score_int(p);  // for pairwise rules f already is the tally vector
}

int GsrRule::winner(const Profile& p) const {
  switch (kind_) {
    case Kind::kPositional:
      return argmax_lex(score_int(p));
    case Kind::kMaximin: {
      const auto counts = pairwise_counts(p);
      std::vector<long long> mins(static_cast<std::size_t>(m_),
                                  std::numeric_limits<long long>::max());
      for (int a = 0; a < m_; ++a) {
        for (int b = 0; b < m_; ++b) {
          if (a == b) continue;
          mins[static_cast<std::size_t>(a)] =
              std::min(mins[static_cast<std::size_t>(a)],
                       counts[static_cast<std::size_t>(pair_component(a, b))]);
        }
      }
      return argmax_lex(mins);
    }
    case Kind::kCopeland: {
      const auto counts = pairwise_counts(p);
      std::vector<long long> doubled(static_cast<std::size_t>(m_), 0);
      for (int a = 0; a < m_; ++a) {
        for (int b = 0; b < m_; ++b) {
          if (a == b) continue;
          const long long ab = counts[static_cast<std::size_t>(pair_component(a, b))];
          const long long ba = counts[static_cast<std::size_t>(pair_component(b, a))];
          if (ab > ba) {
            doubled[static_cast<std::size_t>(a)] += 2;
          } else if (ab == ba) {
            doubled[static_cast<std::size_t>(a)] += 1;
          }
        }
      }
      return argmax_lex(doubled);
    }
    case Kind::kStv:
      return stv_winner_direct(p);
  }
  throw std::logic_error("unreachable");
}

int GsrRule::stv_winner_direct(const Profile& p) const {
  check_profile(p);
  int eliminated = 0;
  for (int round = 0; round + 1 < m_; ++round) {
    std::vector<long long> top(static_cast<std::size_t>(m_), 0);
    for (std::size_t v = 0; v < orders_.size(); ++v) {
      const int count = p[static_cast<int>(v)];
      if (count == 0) continue;
      for (int cand : orders_[v]) {
        if (!(eliminated & (1 << cand))) {
          top[static_cast<std::size_t>(cand)] += count;
          break;
        }
      }
    }
    // Eliminate the candidate ranked top least often; among ties, the
    // highest index goes (so surviving preference matches the lexicographic
    // winner tie-break used everywhere else).
    int victim = -1;
    long long worst = std::numeric_limits<long long>::max();
    for (int cand = 0; cand < m_; ++cand) {
      if (eliminated & (1 << cand)) continue;
      // "<=" walks forward, so the highest-index minimum sticks.
      if (top[static_cast<std::size_t>(cand)] <= worst) {
        victim = cand;
        worst = top[static_cast<std::size_t>(cand)];
      }
    }
    eliminated |= 1 << victim;
  }
  for (int cand = 0; cand < m_; ++cand) {
    if (!(eliminated & (1 << cand))) return cand;
  }
  throw std::logic_error("stv eliminated everyone");
}

int GsrRule::winner_via_weak_order(const Profile& p) const {
  const auto ranks = component_ranks(score_int(p));
  switch (kind_) {
    case Kind::kPositional: {
      for (int cand = 0; cand < m_; ++cand) {
        if (ranks[static_cast<std::size_t>(cand)] == 0) return cand;
      }
      throw std::logic_error("no top-ranked component");
    }
    case Kind::kMaximin: {
      // Smaller rank = larger value, so a candidate's minimum pairwise
      // support corresponds to its worst (largest) component rank.
      int best = -1;
      int best_worst = std::numeric_limits<int>::max();
      for (int a = 0; a < m_; ++a) {
        int worst = 0;
        for (int b = 0; b < m_; ++b) {
          if (a == b) continue;
          worst = std::max(worst,
                           ranks[static_cast<std::size_t>(pair_component(a, b))]);
        }
        if (worst < best_worst) {
          best_worst = worst;
          best = a;
        }
      }
      return best;
    }
    case Kind::kCopeland: {
      std::vector<long long> doubled(static_cast<std::size_t>(m_), 0);
      for (int a = 0; a < m_; ++a) {
        for (int b = 0; b < m_; ++b) {
          if (a == b) continue;
          const int ra = ranks[static_cast<std::size_t>(pair_component(a, b))];
          const int rb = ranks[static_cast<std::size_t>(pair_component(b, a))];
          if (ra < rb) {
            doubled[static_cast<std::size_t>(a)] += 2;
          } else if (ra == rb) {
            doubled[static_cast<std::size_t>(a)] += 1;
          }
        }
      }
      return argmax_lex(doubled);
    }
    case Kind::kStv: {
      int eliminated = 0;
      for (int round = 0; round + 1 < m_; ++round) {
        int victim = -1;
        int victim_rank = -1;
        for (int cand = 0; cand < m_; ++cand) {
          if (eliminated & (1 << cand)) continue;
          const int comp =
              stv_component_[static_cast<std::size_t>(eliminated)]
                            [static_cast<std::size_t>(cand)];
          const int rank = ranks[static_cast<std::size_t>(comp)];
          // Largest rank = smallest top count; ties fall to highest index.
          if (rank > victim_rank || (rank == victim_rank && cand > victim)) {
            victim_rank = rank;
            victim = cand;
          }
        }
        eliminated |= 1 << victim;
      }
      for (int cand = 0; cand < m_; ++cand) {
        if (!(eliminated & (1 << cand))) return cand;
      }
      throw std::logic_error("stv eliminated everyone");
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<int> GsrRule::winner_set(const Profile& p) const {
  switch (kind_) {
    case Kind::kPositional:
      return argmax_set(score_int(p));
    case Kind::kMaximin: {
      const auto counts = pairwise_counts(p);
      std::vector<long long> mins(static_cast<std::size_t>(m_),
                                  std::numeric_limits<long long>::max());
      for (int a = 0; a < m_; ++a) {
        for (int b = 0; b < m_; ++b) {
          if (a == b) continue;
          mins[static_cast<std::size_t>(a)] =
              std::min(mins[static_cast<std::size_t>(a)],
                       counts[static_cast<std::size_t>(pair_component(a, b))]);
        }
      }
      return argmax_set(mins);
    }
    case Kind::kCopeland: {
      const auto counts = pairwise_counts(p);
      std::vector<long long> doubled(static_cast<std::size_t>(m_), 0);
      for (int a = 0; a < m_; ++a) {
        for (int b = 0; b < m_; ++b) {
          if (a == b) continue;
          const long long ab = counts[static_cast<std::size_t>(pair_component(a, b))];
          const long long ba = counts[static_cast<std::size_t>(pair_component(b, a))];
          if (ab > ba) {
            doubled[static_cast<std::size_t>(a)] += 2;
          } else if (ab == ba) {
            doubled[static_cast<std::size_t>(a)] += 1;
          }
        }
      }
      return argmax_set(doubled);
    }
    case Kind::kStv:
      throw std::invalid_argument("winner_set is not defined for STV");
  }
  throw std::logic_error("unreachable");
}

int alpha_majority(const Rational& alpha, const Histogram& t) {
  if (t.bins() != 2) {
    throw std::invalid_argument("alpha_majority: histogram must have 2 bins");
  }
  if (alpha < 0 || alpha > 1) {
    throw std::invalid_argument("alpha_majority: alpha must be in [0, 1]");
  }
  return Rational(t[0]) >= alpha * t.total() ? 0 : 1;
}

}  // namespace votepriv
