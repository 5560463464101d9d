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
#ifndef VOTEPRIV_MECHANISM_HPP_
#define VOTEPRIV_MECHANISM_HPP_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "votepriv/histogram.hpp"
#include "votepriv/rational.hpp"
#include "votepriv/rules.hpp"

namespace votepriv {

// A deterministic, histogram-respecting mechanism over databases of n rows
// from c values: a total map from histograms of (n, c) to labels of a finite
// output alphabet. Outputs are interned to dense ids in first-seen order
// (enumeration order is fixed, so ids are deterministic). Instances are
// cheap, per-(n, c) objects; interning makes them stateful, so share one
// instance per thread, not across threads.
class Mechanism {
 public:
  Mechanism(int n, int c);
  virtual ~Mechanism() = default;

  int n() const { return n_; }
  int c() const { return c_; }

  virtual int output_id(const Histogram& t) = 0;
  virtual int output_count() const = 0;
  virtual std::string output_name(int id) const = 0;

 protected:
  void check_input(const Histogram& t) const;

 private:
  int n_;
  int c_;
};

// Outputs the histogram itself.
class HistogramIdentityMechanism : public Mechanism {
 public:
  HistogramIdentityMechanism(int n, int c);
  int output_id(const Histogram& t) override;
  int output_count() const override;
  std::string output_name(int id) const override;

 private:
  std::unordered_map<Histogram, int, HistogramHash> ids_;
  std::vector<std::string> names_;
};

// Outputs the winner of a GSR rule; alphabet is the m candidates
// (present whether or not each ever wins).
class GsrWinnerMechanism : public Mechanism {
 public:
  GsrWinnerMechanism(int n, const GsrRule& rule);
  int output_id(const Histogram& t) override;
  int output_count() const override;
  std::string output_name(int id) const override;
  const GsrRule& rule() const { return rule_; }

 private:
  const GsrRule& rule_;
};

// Outputs a rule's generalized score vector f(P); two profiles share a label
// iff their scores agree componentwise.
class GsrScoreMechanism : public Mechanism {
 public:
  GsrScoreMechanism(int n, const GsrRule& rule);
  int output_id(const Histogram& t) override;
  int output_count() const override;
  std::string output_name(int id) const override;
  const GsrRule& rule() const { return rule_; }
  // Scaled integer score vector behind an output id.
  const std::vector<long long>& score_key(int id) const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<long long>& key) const;
  };
  const GsrRule& rule_;
  std::unordered_map<std::vector<long long>, int, KeyHash> ids_;
  std::vector<std::vector<long long>> keys_;
};

// Two-value biased majority: outputs "x1" iff at least alpha * n entries
// hold the first value.
class AlphaMajorityMechanism : public Mechanism {
 public:
  AlphaMajorityMechanism(int n, Rational alpha);
  int output_id(const Histogram& t) override;
  int output_count() const override;
  std::string output_name(int id) const override;
  const Rational& alpha() const { return alpha_; }

 private:
  Rational alpha_;
};

// Arbitrary labeling function; the label strings are interned. Used for
// user-supplied output tables and post-processed mechanisms.
class FunctionMechanism : public Mechanism {
 public:
  FunctionMechanism(int n, int c,
                    std::function<std::string(const Histogram&)> label);
  int output_id(const Histogram& t) override;
  int output_count() const override;
  std::string output_name(int id) const override;

 private:
  std::function<std::string(const Histogram&)> label_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> names_;
};

// f o M for a deterministic relabeling f given on M's output alphabet.
class PostProcessedMechanism : public Mechanism {
 public:
  PostProcessedMechanism(std::shared_ptr<Mechanism> base,
                         std::map<std::string, std::string> f);
  int output_id(const Histogram& t) override;
  int output_count() const override;
  std::string output_name(int id) const override;

 private:
  std::shared_ptr<Mechanism> base_;
  std::map<std::string, std::string> f_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> names_;
};

// Composes f o M after checking that f covers M's entire output alphabet
// (materialized by evaluating M on every histogram of (n, c)); throws
// std::invalid_argument when f is partial.
std::shared_ptr<Mechanism> postprocess(std::shared_ptr<Mechanism> base,
                                       std::map<std::string, std::string> f);

}  // namespace votepriv

#endif  // VOTEPRIV_MECHANISM_HPP_
