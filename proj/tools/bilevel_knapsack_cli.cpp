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

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bk/certain.hpp"
#include "bk/errors.hpp"
#include "bk/io.hpp"
#include "bk/robust_finite.hpp"
#include "bk/robust_hard.hpp"
#include "bk/robust_interval.hpp"
#include "bk/stochastic.hpp"

namespace {

using bk::BigInt;
using bk::Rat;
using nlohmann::json;

struct Options {
  std::string instance_path;
  std::string out_path;
  std::string b_text;
  std::string tie_text;
  std::size_t model_budget = bk::kDefaultScenarioBudget;
  bool oracle = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  unsigned precision_bits = 64;
  // generator parameters
  std::string gen_kind;
  std::vector<std::string> w_text;
  std::string target_text;
  std::string p_text = "1";
  std::vector<std::string> a_star_text;
  std::string b_star_text;
  std::string tau_text = "0";
};

bk::TiePolicy effective_tie(const bk::InstanceFile& inst,
                            const std::string& override_text) {
  if (override_text.empty()) return inst.tie;
  if (override_text == "optimistic") return bk::TiePolicy::kOptimistic;
  if (override_text == "pessimistic") return bk::TiePolicy::kPessimistic;
  throw bk::InputError("--tie must be 'optimistic' or 'pessimistic'");
}

std::vector<BigInt> parse_int_list(const std::vector<std::string>& texts,
                                   const char* what) {
  if (texts.empty()) {
    throw bk::InputError(std::string("missing required list: ") + what);
  }
  std::vector<BigInt> out;
  for (const std::string& t : texts) {
    Rat r = bk::parse_rat(t);
    if (denominator(r) != 1) {
      throw bk::InputError(std::string(what) + " entries must be integers");
    }
    out.push_back(numerator(r));
  }
  return out;
}

BigInt parse_int(const std::string& text, const char* what) {
  if (text.empty()) {
    throw bk::InputError(std::string("missing required value: ") + what);
  }
  Rat r = bk::parse_rat(text);
  if (denominator(r) != 1) {
    throw bk::InputError(std::string(what) + " must be an integer");
  }
  return numerator(r);
}

void require_provenance(const bk::InstanceFile& inst, const char* kind) {
  if (!inst.provenance.is_object() || !inst.provenance.contains("kind") ||
      inst.provenance.at("kind") != kind) {
    throw bk::BudgetError(
        std::string("model '") + kind +
        "' is solvable only for generated reduction instances "
        "(missing provenance)");
  }
}

int run_solve(const Options& opt) {
  bk::InstanceFile inst = bk::load_instance(opt.instance_path);
  bk::TiePolicy tie = effective_tie(inst, opt.tie_text);
  auto start = std::chrono::steady_clock::now();
  bk::SolveResult result;
  switch (inst.model) {
    case bk::ModelKind::kCertain:
      result = bk::solve_certain(inst.items, inst.certain_c, inst.range, tie);
      break;
    case bk::ModelKind::kFinite:
      result = bk::solve_robust_finite(inst.items, inst.finite, inst.range,
                                       tie);
      break;
    case bk::ModelKind::kInterval:
      result = bk::solve_robust_interval(inst.items, inst.interval, inst.range,
                                         tie);
      if (opt.oracle) {
        bk::SolveResult check = bk::oracle_solve_interval(
            inst.items, inst.interval, inst.range, tie);
        if (check.value != result.value) {
          throw bk::InternalError(
              "oracle disagreement: brute-force value differs");
        }
      }
      break;
    case bk::ModelKind::kProductFinite:
      result = bk::solve_product_finite(inst.items, inst.product, inst.range,
                                        tie, opt.model_budget);
      break;
    case bk::ModelKind::kSimplex:
      require_provenance(inst, "simplex");
      result = bk::solve_simplex_family(inst.items, inst.simplex, inst.range,
                                        tie);
      break;
    case bk::ModelKind::kPNorm:
      throw bk::BudgetError(
          "no exact solver for p-norm uncertainty; use the generator and "
          "its source instance instead");
    case bk::ModelKind::kStochFinite:
      result = bk::solve_stochastic_finite(inst.items, inst.stoch_finite,
                                           inst.range, tie);
      break;
    case bk::ModelKind::kStochProductDiscrete:
      result = bk::solve_stochastic_product_discrete(
          inst.items, inst.stoch_discrete, inst.range, tie, opt.model_budget);
      break;
    case bk::ModelKind::kStochProductContinuous:
      throw bk::BudgetError(
          "exact optimization over continuous uniform distributions is not "
          "supported; use 'eval' with sampling");
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  json out = bk::result_to_json(result, ms);
  if (opt.oracle && inst.model == bk::ModelKind::kInterval) {
    out["oracle_checked"] = true;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_eval(const Options& opt) {
  bk::InstanceFile inst = bk::load_instance(opt.instance_path);
  bk::TiePolicy tie = effective_tie(inst, opt.tie_text);
  if (opt.b_text.empty()) throw bk::InputError("eval requires --b");
  Rat b = bk::parse_rat(opt.b_text);
  json out;
  auto set_value = [&out](const Rat& v) {
    out["value"] = {{"exact", bk::format_rat(v)}, {"decimal", bk::to_double(v)}};
  };
  auto dot_value = [&](const std::vector<Rat>& c) {
    bk::FollowerSolution sol = bk::follower_solve(inst.items, c, b, tie);
    Rat v = 0;
    for (std::size_t i = 0; i < inst.items.n(); ++i) {
      v += inst.items.d[i] * sol.x[i];
    }
    return std::pair(v, sol.x);
  };
  switch (inst.model) {
    case bk::ModelKind::kCertain: {
      auto [v, x] = dot_value(inst.certain_c);
      set_value(v);
      out["witness"]["follower_x"] = json::array();
      for (const Rat& xi : x) {
        out["witness"]["follower_x"].push_back(bk::format_rat(xi));
      }
      break;
    }
    case bk::ModelKind::kFinite: {
      auto [v, s] = bk::eval_robust_finite(inst.items, inst.finite, tie, b);
      set_value(v);
      out["witness"]["scenario"] = s;
      break;
    }
    case bk::ModelKind::kInterval: {
      bk::IntervalOrder order =
          bk::build_interval_order(inst.items, inst.interval);
      if (tie == bk::TiePolicy::kOptimistic) {
        order = bk::optimistic_preprocess(inst.items, inst.interval,
                                          std::move(order));
      }
      bk::AdversaryResult adv = bk::adversary_solve(inst.items, order, b);
      set_value(adv.value);
      out["witness"]["head"] = adv.head;
      out["witness"]["prefix"]["members"] = adv.prefix.members;
      out["witness"]["prefix"]["last"] = adv.prefix.last;
      if (!adv.prefix.empty()) {
        out["witness"]["prefix"]["fraction"] =
            bk::format_rat(adv.prefix.fraction);
      }
      std::vector<Rat> c = bk::recover_scenario(inst.items, inst.interval,
                                                order, adv.prefix, adv.head);
      out["witness"]["c"] = json::array();
      for (const Rat& ci : c) out["witness"]["c"].push_back(bk::format_rat(ci));
      break;
    }
    case bk::ModelKind::kProductFinite: {
      bk::FiniteUncertainty fin{
          bk::expand_product(inst.product, opt.model_budget)};
      auto [v, s] = bk::eval_robust_finite(inst.items, fin, tie, b);
      set_value(v);
      out["witness"]["scenario"] = s;
      break;
    }
    case bk::ModelKind::kSimplex: {
      require_provenance(inst, "simplex");
      set_value(bk::eval_simplex_family(inst.items, inst.simplex, b));
      break;
    }
    case bk::ModelKind::kPNorm:
      throw bk::BudgetError("evaluation under p-norm uncertainty is not supported");
    case bk::ModelKind::kStochFinite: {
      Rat v = 0;
      for (std::size_t s = 0; s < inst.stoch_finite.scenarios.size(); ++s) {
        v += inst.stoch_finite.probs[s] *
             dot_value(inst.stoch_finite.scenarios[s]).first;
      }
      set_value(v);
      break;
    }
    case bk::ModelKind::kStochProductDiscrete: {
      bk::Pwl f = bk::expected_pwl_product_discrete(inst.items,
                                                    inst.stoch_discrete, tie,
                                                    opt.model_budget);
      set_value(f.eval(b));
      break;
    }
    case bk::ModelKind::kStochProductContinuous: {
      bk::McEstimate est =
          bk::eval_stochastic_mc(inst.items, inst.stoch_continuous, b, tie,
                                 opt.samples, opt.seed);
      set_value(est.mean);
      out["stderr"] = est.stderr_;
      out["samples"] = opt.samples;
      out["seed"] = opt.seed;
      break;
    }
  }
  out["b"] = {{"exact", bk::format_rat(b)}, {"decimal", bk::to_double(b)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_gen(const Options& opt) {
  if (opt.out_path.empty()) throw bk::InputError("gen requires --out");
  bk::InstanceFile inst;
  json prov;
  if (opt.gen_kind == "product" || opt.gen_kind == "simplex" ||
      opt.gen_kind == "pnorm") {
    bk::SubsetSumInstance ss;
    ss.w = parse_int_list(opt.w_text, "--w");
    ss.target = parse_int(opt.target_text, "--W");
    prov["w"] = json::array();
    for (const BigInt& wi : ss.w) prov["w"].push_back(wi.str());
    prov["W"] = ss.target.str();
    if (opt.gen_kind == "product") {
      bk::GadgetProduct g = bk::gen_gadget_product(ss);
      inst.items = g.items;
      inst.range = g.range;
      inst.model = bk::ModelKind::kProductFinite;
      inst.product = g.u;
      prov["kind"] = "product";
    } else if (opt.gen_kind == "simplex") {
      bk::GadgetSimplex g = bk::gen_gadget_simplex(ss);
      inst.items = g.items;
      inst.range = g.range;
      inst.model = bk::ModelKind::kSimplex;
      inst.simplex = g.u;
      prov["kind"] = "simplex";
    } else {
      Rat p = bk::parse_rat(opt.p_text);
      bk::GadgetPNorm g = bk::gen_gadget_pnorm(ss, p, opt.precision_bits);
      inst.items = g.items;
      inst.range = g.range;
      inst.model = bk::ModelKind::kPNorm;
      inst.pnorm = g.u;
      prov["kind"] = "pnorm";
      prov["p"] = bk::format_rat(p);
      prov["precision_bits"] = opt.precision_bits;
    }
  } else if (opt.gen_kind == "stochastic") {
    std::vector<BigInt> a_star = parse_int_list(opt.a_star_text, "--a");
    BigInt b_star = parse_int(opt.b_star_text, "--b-star");
    Rat tau = bk::parse_rat(opt.tau_text);
    bk::GadgetStochastic g = bk::gen_gadget_stochastic(a_star, b_star, tau);
    inst.items = g.items;
    inst.range = g.range;
    inst.model = bk::ModelKind::kStochProductDiscrete;
    inst.stoch_discrete = g.dist;
    prov["kind"] = "stochastic";
    prov["a_star"] = json::array();
    for (const BigInt& ai : a_star) prov["a_star"].push_back(ai.str());
    prov["b_star"] = b_star.str();
    prov["tau"] = bk::format_rat(tau);
  } else {
    throw bk::InputError(
        "gen kind must be one of: product, simplex, pnorm, stochastic");
  }
  inst.provenance = prov;
  bk::save_instance(inst, opt.out_path);
  std::cout << "wrote " << opt.out_path << "\n";
  return 0;
}

int run_export(const Options& opt) {
  if (opt.out_path.empty()) throw bk::InputError("export-pwl requires --out");
  bk::InstanceFile inst = bk::load_instance(opt.instance_path);
  bk::TiePolicy tie = effective_tie(inst, opt.tie_text);
  std::string csv;
  switch (inst.model) {
    case bk::ModelKind::kCertain:
      csv = bk::pwl_to_csv(bk::leader_pwl(inst.items, inst.certain_c, tie,
                                          inst.range.b_lo, inst.range.b_hi));
      break;
    case bk::ModelKind::kFinite:
      csv = bk::pwl_to_csv(bk::robust_finite_envelope(
          inst.items, inst.finite, tie, inst.range.b_lo, inst.range.b_hi));
      break;
    case bk::ModelKind::kInterval: {
      bk::IntervalOrder order =
          bk::build_interval_order(inst.items, inst.interval);
      if (tie == bk::TiePolicy::kOptimistic) {
        order = bk::optimistic_preprocess(inst.items, inst.interval,
                                          std::move(order));
      }
      csv = bk::pwl_to_csv(bk::robust_interval_envelope(
          inst.items, order, inst.range.b_lo, inst.range.b_hi));
      break;
    }
    case bk::ModelKind::kProductFinite: {
      bk::FiniteUncertainty fin{
          bk::expand_product(inst.product, opt.model_budget)};
      csv = bk::pwl_to_csv(bk::robust_finite_envelope(
          inst.items, fin, tie, inst.range.b_lo, inst.range.b_hi));
      break;
    }
    case bk::ModelKind::kSimplex:
      require_provenance(inst, "simplex");
      csv = bk::pwl_to_csv(
          bk::simplex_family_profile(inst.items, inst.simplex)
              .clip(inst.range.b_lo, inst.range.b_hi));
      break;
    case bk::ModelKind::kPNorm:
      throw bk::BudgetError("no exact profile for p-norm uncertainty");
    case bk::ModelKind::kStochFinite: {
      std::vector<bk::Pwl> profiles;
      for (const auto& c : inst.stoch_finite.scenarios) {
        profiles.push_back(bk::leader_pwl(inst.items, c, tie, inst.range.b_lo,
                                          inst.range.b_hi));
      }
      csv = bk::pwl_to_csv(
          bk::weighted_sum(profiles, inst.stoch_finite.probs));
      break;
    }
    case bk::ModelKind::kStochProductDiscrete:
      csv = bk::pwl_to_csv(
          bk::expected_pwl_product_discrete(inst.items, inst.stoch_discrete,
                                            tie, opt.model_budget)
              .clip(inst.range.b_lo, inst.range.b_hi));
      break;
    case bk::ModelKind::kStochProductContinuous:
      throw bk::BudgetError(
          "no exact profile for continuous uniform distributions");
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw bk::InputError("cannot write: " + opt.out_path);
  out << csv;
  std::cout << "wrote " << opt.out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bilevel continuous knapsack solver"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tie", opt.tie_text, "override the file's tie policy");
    cmd->add_option("--model-budget", opt.model_budget,
                    "max scenarios for expanded product models");
  };

  CLI::App* solve = app.add_subcommand("solve", "optimize over the range");
  solve->add_option("instance", opt.instance_path)->required();
  solve->add_flag("--oracle", opt.oracle,
                  "cross-check with the brute-force oracle (interval model)");
  add_common(solve);

  CLI::App* eval = app.add_subcommand("eval", "evaluate at one capacity");
  eval->add_option("instance", opt.instance_path)->required();
  eval->add_option("--b", opt.b_text, "capacity, exact rational")->required();
  eval->add_option("--samples", opt.samples, "Monte Carlo sample count");
  eval->add_option("--seed", opt.seed, "Monte Carlo seed");
  add_common(eval);

  CLI::App* gen = app.add_subcommand("gen", "emit a reduction instance");
  gen->add_option("kind", opt.gen_kind, "product|simplex|pnorm|stochastic")
      ->required();
  gen->add_option("--w", opt.w_text, "subset-sum weights")->delimiter(',');
  gen->add_option("--W", opt.target_text, "subset-sum target");
  gen->add_option("--p", opt.p_text, "norm exponent (rational)");
  gen->add_option("--precision-bits", opt.precision_bits,
                  "fractional bits for irrational roots");
  gen->add_option("--a", opt.a_star_text, "counting weights")->delimiter(',');
  gen->add_option("--b-star", opt.b_star_text, "counting capacity");
  gen->add_option("--tau", opt.tau_text, "slope shift in [-1,1]");
  gen->add_option("--out", opt.out_path, "output instance path");

  CLI::App* exp = app.add_subcommand("export-pwl",
                                     "write the objective's breakpoints");
  exp->add_option("instance", opt.instance_path)->required();
  exp->add_option("--out", opt.out_path, "output CSV path");
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(opt);
    if (eval->parsed()) return run_eval(opt);
    if (gen->parsed()) return run_gen(opt);
    if (exp->parsed()) return run_export(opt);
  } catch (const bk::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const bk::BudgetError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 3;
  } catch (const bk::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
