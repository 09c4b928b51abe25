#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fairdiv/brute_force.hpp"
#include "fairdiv/efx_fpo.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/exante.hpp"
#include "fairdiv/fisher.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/lp.hpp"
#include "fairdiv/mixed_bobw.hpp"
#include "fairdiv/rng.hpp"
#include "fairdiv/two_agent.hpp"

namespace {

using namespace fairdiv;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::BadInput: return 2;
    case ErrorCode::Precondition: return 3;
    case ErrorCode::BudgetExceeded: return 3;
    case ErrorCode::Internal: return 4;
  }
  return 4;
}

void emit(const nlohmann::json& doc, const std::string& out_path) {
  std::string text = canonical_dump(doc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw bad_input("cannot write to " + out_path);
    out << text;
  }
}

std::vector<int> parse_perm(const std::string& text, int n) {
  std::vector<int> perm;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    try {
      perm.push_back(std::stoi(text.substr(pos, comma - pos)));
    } catch (...) {
      throw bad_input("--perm expects comma-separated agent indices");
    }
    pos = comma + 1;
  }
  if (!is_permutation_of(n, perm)) throw bad_input("--perm is not a permutation of the agents");
  return perm;
}

nlohmann::json certificate_to_json(const FisherCertificate& cert) {
  nlohmann::json doc;
  nlohmann::json prices = nlohmann::json::array();
  for (const Rational& p : cert.prices) prices.push_back(to_string(p));
  nlohmann::json budgets = nlohmann::json::array();
  for (const Rational& e : cert.budgets) budgets.push_back(to_string(e));
  nlohmann::json mbb = nlohmann::json::array();
  for (const Rational& r : cert.mbb) mbb.push_back(to_string(r));
  doc["prices"] = std::move(prices);
  doc["budgets"] = std::move(budgets);
  doc["mbb"] = std::move(mbb);
  return doc;
}

void emit_trace(const RunTrace& trace) {
  for (const auto& round : trace.rounds) {
    nlohmann::json line;
    line["round"] = round.round;
    line["Z"] = round.group;
    line["gamma"] = round.neighborhood;
    nlohmann::json matched = nlohmann::json::array();
    for (auto [agent, good] : round.matched) matched.push_back({{"agent", agent}, {"good", good}});
    line["matched"] = std::move(matched);
    line["frozen"] = round.frozen;
    line["quiet"] = round.quiet;
    line["swap_iterations"] = round.swap_iterations;
    std::cerr << line.dump() << "\n";
  }
}

PermSolver solver_by_name(const std::string& algo) {
  if (algo == "prop-efm")
    return [](const Instance& inst, const std::vector<int>& perm) {
      return solve_prop_efm(inst, perm);
    };
  if (algo == "efx-fpo")
    return [](const Instance& inst, const std::vector<int>& perm) {
      return solve_efx_fpo(inst, perm);
    };
  throw bad_input("unknown --algo: " + algo);
}

std::uint64_t enumeration_size(int n) {
  std::uint64_t factorial = 1;
  for (int k = 2; k <= n; ++k) {
    factorial *= static_cast<std::uint64_t>(k);
    if (factorial > 720)
      throw precondition("BudgetExceeded: permutation enumeration covers n <= 6");
  }
  return factorial;
}

int cmd_solve(const std::string& instance_path, const std::string& algo, std::uint64_t seed,
              const std::string& perm_text, bool enumerate, bool certificate, bool trace_flag,
              const std::string& out_path) {
  Instance inst = instance_from_json(load_json_file(instance_path));

  if (algo == "two-efx" || algo == "two-efm") {
    RandomizedAllocation lottery =
        algo == "two-efx" ? solve_two_agent_efx(inst) : solve_two_agent_efm(inst);
    emit(lottery_to_json(inst, lottery), out_path);
    return 0;
  }

  PermSolver solver = solver_by_name(algo);
  if (enumerate) {
    std::uint64_t factorial = enumeration_size(inst.n);
    RandomizedAllocation lottery;  // one entry per permutation, no aggregation
    std::vector<int> perm(inst.n);
    for (int i = 0; i < inst.n; ++i) perm[i] = i;
    Rational weight = Rational(1) / static_cast<long>(factorial);
    do {
      lottery.support.emplace_back(weight, solver(inst, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    emit(lottery_to_json(inst, lottery), out_path);
    return 0;
  }

  std::vector<int> perm;
  if (!perm_text.empty()) {
    perm = parse_perm(perm_text, inst.n);
  } else {
    SplitMix64 rng(seed);
    perm = random_permutation(inst.n, rng);
  }

  if (algo == "efx-fpo") {
    RunTrace trace;
    IntegralAllocation alloc = solve_efx_fpo(inst, perm, &trace);
    if (trace_flag) emit_trace(trace);
    if (certificate) {
      FisherCertificate cert = build_fisher_certificate(inst, alloc, trace);
      nlohmann::json doc;
      doc["allocation"] = allocation_to_json(inst, alloc);
      doc["certificate"] = certificate_to_json(cert);
      emit(doc, out_path);
    } else {
      emit(allocation_to_json(inst, alloc), out_path);
    }
    return 0;
  }

  if (certificate) throw bad_input("--certificate applies to --algo efx-fpo");
  emit(allocation_to_json(inst, solver(inst, perm)), out_path);
  return 0;
}

int cmd_check(const std::string& instance_path, const std::string& allocation_path,
              const std::string& property_text, const std::string& out_path) {
  Instance inst = instance_from_json(load_json_file(instance_path));
  IntegralAllocation alloc = allocation_from_json(inst, load_json_file(allocation_path));
  auto property = property_from_name(property_text);
  if (!property) throw bad_input("unknown --property: " + property_text);
  PropertyReport report = *property == Property::FPO ? check_fpo_lp(inst, alloc)
                                                     : check_property(inst, alloc, *property);
  emit(report_to_json(inst, report, *property), out_path);
  return report.holds ? 0 : 1;
}

int cmd_gen(const std::string& family, int n, int m, std::uint64_t seed, const std::string& a,
            const std::string& b, const std::string& density, long max_value, int divisible_count,
            long divisible_mass, const std::string& out_path) {
  GeneratorSpec spec;
  if (family == "bi-valued" || family == "bi_valued")
    spec.family = Family::BiValued;
  else if (family == "binary")
    spec.family = Family::Binary;
  else if (family == "uniform" || family == "uniform_additive")
    spec.family = Family::UniformAdditive;
  else if (family == "mixed")
    spec.family = Family::Mixed;
  else
    throw bad_input("unknown --family: " + family);
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  spec.a = parse_rational(a);
  spec.b = parse_rational(b);
  spec.density = parse_rational(density);
  spec.max_value = max_value;
  spec.divisible_count = divisible_count;
  spec.divisible_mass = divisible_mass;
  emit(instance_to_json(generate_instance(spec)), out_path);
  return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& algo,
               const std::string& property_text, const std::string& mode, int trials,
               std::uint64_t seed, const std::string& out_path) {
  Instance inst = instance_from_json(load_json_file(instance_path));
  auto property = property_from_name(property_text);
  if (!property || (*property != Property::EF && *property != Property::PROP))
    throw bad_input("--property must be ef or prop");

  RandomizedAllocation lottery;
  nlohmann::json doc;
  if (algo == "two-efx" || algo == "two-efm") {
    // These solvers emit their own lottery; there is no permutation to span.
    lottery = algo == "two-efx" ? solve_two_agent_efx(inst) : solve_two_agent_efm(inst);
    doc["mode"] = "exact";
  } else if (mode == "exact") {
    lottery = enumerate_lottery(solver_by_name(algo), inst);
    doc["mode"] = "exact";
  } else if (mode == "sample") {
    MixtureReport mixture = sample_lottery(solver_by_name(algo), inst, seed, trials);
    lottery = mixture.lottery;
    doc["mode"] = "sample";
    doc["trials"] = trials;
  } else {
    throw bad_input("--mode must be exact or sample");
  }

  ExAnteReport report = verify_exante(inst, lottery, *property);
  doc["support_size"] = static_cast<int>(lottery.support.size());
  doc["expected"] = fractional_to_json(expected_allocation(inst, lottery));
  doc["exante"] = report_to_json(inst, report.ex_ante, *property);
  nlohmann::json expost;
  expost["holds"] = report.ex_post_all;
  expost["failures"] = report.ex_post_failures;
  doc["expost"] = std::move(expost);
  emit(doc, out_path);
  return report.ex_ante.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairdiv: best-of-both-worlds fair division solvers and checkers"};
  app.require_subcommand(1);

  std::string instance_path, allocation_path, out_path, algo, property_text, perm_text;
  std::string family = "bi-valued", a = "1", b = "2", density = "1/2", mode = "exact";
  int n = 2, m = 2, trials = 100, divisible_count = 1;
  long max_value = 100, divisible_mass = 10;
  std::uint64_t seed = 0;
  bool enumerate = false, certificate = false, trace_flag = false;

  auto* solve = app.add_subcommand("solve", "run a solver on an instance file");
  solve->add_option("--instance", instance_path)->required();
  solve->add_option("--algo", algo, "two-efx | two-efm | prop-efm | efx-fpo")->required();
  solve->add_option("--seed", seed);
  solve->add_option("--perm", perm_text, "explicit permutation, e.g. 2,0,1");
  solve->add_flag("--enumerate", enumerate, "emit the full lottery over all permutations");
  solve->add_flag("--certificate", certificate, "emit the Fisher certificate (efx-fpo)");
  solve->add_flag("--trace", trace_flag, "emit per-round events as JSON lines on stderr");
  solve->add_option("--out", out_path);

  auto* check = app.add_subcommand("check", "check a property of an allocation");
  check->add_option("--instance", instance_path)->required();
  check->add_option("--allocation", allocation_path)->required();
  check->add_option("--property", property_text, "ef|prop|ef1|efx|efm|efxm|fpo")->required();
  check->add_option("--out", out_path);

  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--family", family, "bi-valued | binary | uniform | mixed");
  gen->add_option("--n", n)->required();
  gen->add_option("--m", m)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--a", a);
  gen->add_option("--b", b);
  gen->add_option("--density", density, "probability of the large value, e.g. 1/2");
  gen->add_option("--max", max_value, "utility bound for the uniform family");
  gen->add_option("--divisible-count", divisible_count);
  gen->add_option("--divisible-mass", divisible_mass);
  gen->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "verify ex-ante properties of a solver's lottery");
  verify->add_option("--instance", instance_path)->required();
  verify->add_option("--algo", algo)->required();
  verify->add_option("--property", property_text, "ef | prop")->required();
  verify->add_option("--mode", mode, "exact | sample");
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);
  verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
    if (solve->parsed())
      return cmd_solve(instance_path, algo, seed, perm_text, enumerate, certificate, trace_flag,
                       out_path);
    if (check->parsed()) return cmd_check(instance_path, allocation_path, property_text, out_path);
    if (gen->parsed())
      return cmd_gen(family, n, m, seed, a, b, density, max_value, divisible_count, divisible_mass,
                     out_path);
    if (verify->parsed())
      return cmd_verify(instance_path, algo, property_text, mode, trials, seed, out_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
