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
#include "votepriv/mechanism.hpp"

#include <stdexcept>

namespace votepriv {

Mechanism::Mechanism(int n, int c) : n_(n), c_(c) {
  if (n < 0) throw std::invalid_argument("mechanism: n must be >= 0");
  if (c < 2) throw std::invalid_argument("mechanism: c must be >= 2");
}

void Mechanism::check_input(const Histogram& t) const {
  if (t.bins() != c_) {
    throw std::invalid_argument("mechanism input has wrong bin count");
  }
}

HistogramIdentityMechanism::HistogramIdentityMechanism(int n, int c)
    : Mechanism(n, c) {}

int HistogramIdentityMechanism::output_id(const Histogram& t) {
  check_input(t);
  auto [it, inserted] = ids_.try_emplace(t, static_cast<int>(names_.size()));
  if (inserted) names_.push_back(t.to_string());
  return it->second;
}

int HistogramIdentityMechanism::output_count() const {
  return static_cast<int>(names_.size());
}

std::string HistogramIdentityMechanism::output_name(int id) const {
  return names_.at(static_cast<std::size_t>(id));
}

GsrWinnerMechanism::GsrWinnerMechanism(int n, const GsrRule& rule)
    : Mechanism(n, rule.order_count()), rule_(rule) {}

int GsrWinnerMechanism::output_id(const Histogram& t) {
  check_input(t);
  return rule_.winner(t);
}

int GsrWinnerMechanism::output_count() const { return rule_.m(); }

std::string GsrWinnerMechanism::output_name(int id) const {
  return std::to_string(id);
}

GsrScoreMechanism::GsrScoreMechanism(int n, const GsrRule& rule)
    : Mechanism(n, rule.order_count()), rule_(rule) {}

std::size_t GsrScoreMechanism::KeyHash::operator()(
    const std::vector<long long>& key) const {
  std::size_t hash = 1469598103934665603ull;
  for (long long v : key) {
    hash ^= static_cast<std::size_t>(v);
    hash *= 1099511628211ull;
  }
  return hash;
}

int GsrScoreMechanism::output_id(const Histogram& t) {
  check_input(t);
  auto key = rule_.score_int(t);
  auto [it, inserted] = ids_.try_emplace(std::move(key),
                                         static_cast<int>(keys_.size()));
  if (inserted) keys_.push_back(it->first);
  return it->second;
}

int GsrScoreMechanism::output_count() const {
  return static_cast<int>(keys_.size());
}

std::string GsrScoreMechanism::output_name(int id) const {
  const auto& key = keys_.at(static_cast<std::size_t>(id));
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += ',';
    out += to_fraction_string(
        make_rational(BigInt(static_cast<long>(key[i])), rule_.score_scale()));
  }
  return out;
}

const std::vector<long long>& GsrScoreMechanism::score_key(int id) const {
  return keys_.at(static_cast<std::size_t>(id));
}

AlphaMajorityMechanism::AlphaMajorityMechanism(int n, Rational alpha)
    : Mechanism(n, 2), alpha_(std::move(alpha)) {
  if (alpha_ < 0 || alpha_ > 1) {
    throw std::invalid_argument("alpha_majority: alpha must be in [0, 1]");
  }
}

int AlphaMajorityMechanism::output_id(const Histogram& t) {
  check_input(t);
  return alpha_majority(alpha_, t);
}

int AlphaMajorityMechanism::output_count() const { return 2; }

std::string AlphaMajorityMechanism::output_name(int id) const {
  return id == 0 ? "x1" : "x2";
}

FunctionMechanism::FunctionMechanism(
    int n, int c, std::function<std::string(const Histogram&)> label)
    : Mechanism(n, c), label_(std::move(label)) {}

int FunctionMechanism::output_id(const Histogram& t) {
  check_input(t);
  std::string name = label_(t);
  auto [it, inserted] = ids_.try_emplace(std::move(name),
                                         static_cast<int>(names_.size()));
  if (inserted) names_.push_back(it->first);
  return it->second;
}

int FunctionMechanism::output_count() const {
  return static_cast<int>(names_.size());
}

std::string FunctionMechanism::output_name(int id) const {
  return names_.at(static_cast<std::size_t>(id));
}

PostProcessedMechanism::PostProcessedMechanism(
    std::shared_ptr<Mechanism> base, std::map<std::string, std::string> f)
    : Mechanism(base->n(), base->c()), base_(std::move(base)), f_(std::move(f)) {}

int PostProcessedMechanism::output_id(const Histogram& t) {
  const int base_id = base_->output_id(t);
  const auto it = f_.find(base_->output_name(base_id));
  if (it == f_.end()) {
    throw std::invalid_argument(
        "postprocess: map is not total on the base alphabet");
  }
  auto [slot, inserted] = ids_.try_emplace(it->second,
                                           static_cast<int>(names_.size()));
  if (inserted) names_.push_back(slot->first);
  return slot->second;
}

int PostProcessedMechanism::output_count() const {
  return static_cast<int>(names_.size());
}

std::string PostProcessedMechanism::output_name(int id) const {
  return names_.at(static_cast<std::size_t>(id));
}

std::shared_ptr<Mechanism> postprocess(std::shared_ptr<Mechanism> base,
                                       std::map<std::string, std::string> f) {
  // Materialize the base alphabet so a partial map fails here, not mid-sweep.
  for (HistogramEnumerator it(base->n(), base->c()); !it.done(); it.advance()) {
    const int id = base->output_id(it.current());
    if (f.find(base->output_name(id)) == f.end()) {
      throw std::invalid_argument(
          "postprocess: map is missing output \"" + base->output_name(id) +
          "\"");
    }
  }
  return std::make_shared<PostProcessedMechanism>(std::move(base), std::move(f));
}

}  // namespace votepriv
