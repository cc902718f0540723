// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BK_IO_HPP
#define BK_IO_HPP

#include <string>

#include <json.hpp>

#include "bk/instance.hpp"
#include "bk/pwl.hpp"
#include "bk/robust_finite.hpp"
#include "bk/robust_hard.hpp"
#include "bk/robust_interval.hpp"
#include "bk/stochastic.hpp"

namespace bk {

enum class ModelKind {
  kCertain,
  kFinite,
  kInterval,
  kProductFinite,
  kSimplex,
  kPNorm,
  kStochFinite,
  kStochProductDiscrete,
  kStochProductContinuous,
};

std::string model_kind_name(ModelKind kind);

// One solver input: items, capacity range, tie policy and a tagged model
// payload. All numerics are exact rationals serialized as strings.
struct InstanceFile {
  int version = 1;
  Items items;
  CapacityRange range;
  TiePolicy tie = TiePolicy::kPessimistic;
  ModelKind model = ModelKind::kCertain;

  std::vector<Rat> certain_c;
  FiniteUncertainty finite;
  IntervalUncertainty interval;
  ProductFiniteUncertainty product;
  SimplexUncertainty simplex;
  PNormUncertainty pnorm;
  FiniteSupportDistribution stoch_finite;
  ProductUniformDiscrete stoch_discrete;
  ProductUniformContinuous stoch_continuous;

  nlohmann::json provenance;  // generator metadata, passed through verbatim
};

/// Parses and schema-validates a JSON instance; throws InputError with the
/// violated invariant in the message.
InstanceFile parse_instance(const std::string& text);

InstanceFile load_instance(const std::string& path);

nlohmann::json instance_to_json(const InstanceFile& inst);

void save_instance(const InstanceFile& inst, const std::string& path);

/// Result record with exact rationals plus decimal renderings.
nlohmann::json result_to_json(const SolveResult& r, double elapsed_ms);

/// Breakpoint table "b_exact,b_decimal,v_exact,v_decimal" with LF endings.
std::string pwl_to_csv(const Pwl& f);
std::string pwl_to_csv(const PartialPwl& f);

}  // namespace bk

#endif  // BK_IO_HPP
