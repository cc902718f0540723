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

#include "bk/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bk/errors.hpp"

namespace bk {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw InputError(std::string("instance file: missing field '") + name +
                     "'");
  }
  return obj.at(name);
}

Rat parse_rat_field(const json& j, const char* context) {
  if (!j.is_string()) {
    throw InputError(std::string("instance file: ") + context +
                     " must be a rational string");
  }
  return parse_rat(j.get<std::string>());
}

std::vector<Rat> parse_rat_array(const json& j, const char* context) {
  if (!j.is_array()) {
    throw InputError(std::string("instance file: ") + context +
                     " must be an array");
  }
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(parse_rat_field(e, context));
  return out;
}

std::vector<std::vector<Rat>> parse_rat_matrix(const json& j,
                                               const char* context) {
  if (!j.is_array()) {
    throw InputError(std::string("instance file: ") + context +
                     " must be an array of arrays");
  }
  std::vector<std::vector<Rat>> out;
  out.reserve(j.size());
  for (const json& row : j) out.push_back(parse_rat_array(row, context));
  return out;
}

json rat_to_json(const Rat& r) { return format_rat(r); }

json rats_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& r : v) out.push_back(rat_to_json(r));
  return out;
}

json matrix_to_json(const std::vector<std::vector<Rat>>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(rats_to_json(row));
  return out;
}

std::string decimal(const Rat& r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", to_double(r));
  return buf;
}

}  // namespace

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kCertain: return "certain";
    case ModelKind::kFinite: return "finite";
    case ModelKind::kInterval: return "interval";
    case ModelKind::kProductFinite: return "product_finite";
    case ModelKind::kSimplex: return "simplex";
    case ModelKind::kPNorm: return "pnorm";
    case ModelKind::kStochFinite: return "stoch_finite";
    case ModelKind::kStochProductDiscrete: return "stoch_product_discrete";
    case ModelKind::kStochProductContinuous: return "stoch_product_continuous";
  }
  throw InternalError("unknown model kind");
}

InstanceFile parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("instance file: invalid JSON: ") + e.what());
  }
  InstanceFile inst;
  const json& version = field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != 1) {
    throw InputError("instance file: unsupported version (expected 1)");
  }
  inst.version = 1;
  const json& items = field(j, "items");
  inst.items.a = parse_rat_array(field(items, "a"), "items.a");
  inst.items.d = parse_rat_array(field(items, "d"), "items.d");
  inst.items.validate();
  const json& range = field(j, "range");
  inst.range.b_lo = parse_rat_field(field(range, "b_lo"), "range.b_lo");
  inst.range.b_hi = parse_rat_field(field(range, "b_hi"), "range.b_hi");
  inst.range.validate(inst.items);
  const json& tie = field(j, "tie");
  if (tie == "optimistic") {
    inst.tie = TiePolicy::kOptimistic;
  } else if (tie == "pessimistic") {
    inst.tie = TiePolicy::kPessimistic;
  } else {
    throw InputError(
        "instance file: tie must be 'optimistic' or 'pessimistic'");
  }
  const json& model = field(j, "model");
  const json& kind = field(model, "kind");
  if (kind == "certain") {
    inst.model = ModelKind::kCertain;
    inst.certain_c = parse_rat_array(field(model, "c"), "model.c");
    validate_profits(inst.items, inst.certain_c);
  } else if (kind == "finite") {
    inst.model = ModelKind::kFinite;
    inst.finite.scenarios =
        parse_rat_matrix(field(model, "scenarios"), "model.scenarios");
    inst.finite.validate(inst.items);
  } else if (kind == "interval") {
    inst.model = ModelKind::kInterval;
    inst.interval.c_lo = parse_rat_array(field(model, "c_lo"), "model.c_lo");
    inst.interval.c_hi = parse_rat_array(field(model, "c_hi"), "model.c_hi");
    inst.interval.validate(inst.items);
  } else if (kind == "product_finite") {
    inst.model = ModelKind::kProductFinite;
    inst.product.options =
        parse_rat_matrix(field(model, "options"), "model.options");
    inst.product.validate(inst.items);
  } else if (kind == "simplex") {
    inst.model = ModelKind::kSimplex;
    inst.simplex.c_hat = parse_rat_array(field(model, "c_hat"), "model.c_hat");
    inst.simplex.gamma = parse_rat_field(field(model, "gamma"), "model.gamma");
    inst.simplex.validate(inst.items);
  } else if (kind == "pnorm") {
    inst.model = ModelKind::kPNorm;
    inst.pnorm.c_hat = parse_rat_array(field(model, "c_hat"), "model.c_hat");
    inst.pnorm.gamma = parse_rat_field(field(model, "gamma"), "model.gamma");
    inst.pnorm.p = parse_rat_field(field(model, "p"), "model.p");
    const json& bits = field(model, "precision_bits");
    if (!bits.is_number_unsigned()) {
      throw InputError("instance file: precision_bits must be a nonnegative integer");
    }
    inst.pnorm.precision_bits = bits.get<unsigned>();
    inst.pnorm.validate(inst.items);
  } else if (kind == "stoch_finite") {
    inst.model = ModelKind::kStochFinite;
    inst.stoch_finite.scenarios =
        parse_rat_matrix(field(model, "scenarios"), "model.scenarios");
    inst.stoch_finite.probs =
        parse_rat_array(field(model, "probs"), "model.probs");
    inst.stoch_finite.validate(inst.items);
  } else if (kind == "stoch_product_discrete") {
    inst.model = ModelKind::kStochProductDiscrete;
    inst.stoch_discrete.supports =
        parse_rat_matrix(field(model, "supports"), "model.supports");
    inst.stoch_discrete.validate(inst.items);
  } else if (kind == "stoch_product_continuous") {
    inst.model = ModelKind::kStochProductContinuous;
    for (const auto& row :
         parse_rat_matrix(field(model, "boxes"), "model.boxes")) {
      if (row.size() != 2) {
        throw InputError("instance file: each box needs exactly [lo, hi]");
      }
      inst.stoch_continuous.boxes.emplace_back(row[0], row[1]);
    }
    inst.stoch_continuous.validate(inst.items);
  } else {
    throw InputError("instance file: unknown model kind");
  }
  if (j.contains("provenance")) inst.provenance = j.at("provenance");
  return inst;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

nlohmann::json instance_to_json(const InstanceFile& inst) {
  json j;
  j["version"] = inst.version;
  j["items"] = {{"a", rats_to_json(inst.items.a)},
                {"d", rats_to_json(inst.items.d)}};
  j["range"] = {{"b_lo", rat_to_json(inst.range.b_lo)},
                {"b_hi", rat_to_json(inst.range.b_hi)}};
  j["tie"] =
      inst.tie == TiePolicy::kOptimistic ? "optimistic" : "pessimistic";
  json model;
  model["kind"] = model_kind_name(inst.model);
  switch (inst.model) {
    case ModelKind::kCertain:
      model["c"] = rats_to_json(inst.certain_c);
      break;
    case ModelKind::kFinite:
      model["scenarios"] = matrix_to_json(inst.finite.scenarios);
      break;
    case ModelKind::kInterval:
      model["c_lo"] = rats_to_json(inst.interval.c_lo);
      model["c_hi"] = rats_to_json(inst.interval.c_hi);
      break;
    case ModelKind::kProductFinite:
      model["options"] = matrix_to_json(inst.product.options);
      break;
    case ModelKind::kSimplex:
      model["c_hat"] = rats_to_json(inst.simplex.c_hat);
      model["gamma"] = rat_to_json(inst.simplex.gamma);
      break;
    case ModelKind::kPNorm:
      model["c_hat"] = rats_to_json(inst.pnorm.c_hat);
      model["gamma"] = rat_to_json(inst.pnorm.gamma);
      model["p"] = rat_to_json(inst.pnorm.p);
      model["precision_bits"] = inst.pnorm.precision_bits;
      break;
    case ModelKind::kStochFinite:
      model["scenarios"] = matrix_to_json(inst.stoch_finite.scenarios);
      model["probs"] = rats_to_json(inst.stoch_finite.probs);
      break;
    case ModelKind::kStochProductDiscrete:
      model["supports"] = matrix_to_json(inst.stoch_discrete.supports);
      break;
    case ModelKind::kStochProductContinuous: {
      json boxes = json::array();
      for (const auto& [lo, hi] : inst.stoch_continuous.boxes) {
        boxes.push_back({rat_to_json(lo), rat_to_json(hi)});
      }
      model["boxes"] = boxes;
      break;
    }
  }
  j["model"] = model;
  if (!inst.provenance.is_null()) j["provenance"] = inst.provenance;
  return j;
}

void save_instance(const InstanceFile& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write instance file: " + path);
  out << instance_to_json(inst).dump(2) << "\n";
}

nlohmann::json result_to_json(const SolveResult& r, double elapsed_ms) {
  json j;
  j["b_star"] = {{"exact", rat_to_json(r.b_star)},
                 {"decimal", decimal(r.b_star)}};
  j["value"] = {{"exact", rat_to_json(r.value)}, {"decimal", decimal(r.value)}};
  json witness;
  if (!r.follower_x.empty()) witness["follower_x"] = rats_to_json(r.follower_x);
  if (r.worst_scenario) witness["scenario"] = *r.worst_scenario;
  if (r.worst_c) witness["c"] = rats_to_json(*r.worst_c);
  if (r.worst_head) witness["head"] = *r.worst_head;
  if (r.worst_prefix) {
    json prefix;
    prefix["members"] = r.worst_prefix->members;
    prefix["last"] = r.worst_prefix->last;
    prefix["fraction"] = r.worst_prefix->empty()
                             ? ""
                             : format_rat(r.worst_prefix->fraction);
    witness["prefix"] = prefix;
  }
  j["witness"] = witness;
  j["solver"] = r.solver;
  j["timing_ms"] = elapsed_ms;
  return j;
}

std::string pwl_to_csv(const Pwl& f) {
  std::string out = "b_exact,b_decimal,v_exact,v_decimal\n";
  for (const PwlPoint& p : f.points()) {
    out += format_rat(p.b) + "," + decimal(p.b) + "," + format_rat(p.v) + "," +
           decimal(p.v) + "\n";
  }
  return out;
}

std::string pwl_to_csv(const PartialPwl& f) {
  std::string out = "b_exact,b_decimal,v_exact,v_decimal\n";
  for (const Pwl& piece : f.pieces()) {
    for (const PwlPoint& p : piece.points()) {
      out += format_rat(p.b) + "," + decimal(p.b) + "," + format_rat(p.v) +
             "," + decimal(p.v) + "\n";
    }
  }
  return out;
}

}  // namespace bk
