#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace fairdiv;

// JSON strings cross the boundary; the python side wraps them with json.loads.
// Keeps the binding thin and guarantees the wire format matches the CLI.

namespace {

Instance parse_instance(const std::string& text) {
  return instance_from_json(nlohmann::json::parse(text));
}

std::string solve(const std::string& instance_text, const std::string& algo, std::uint64_t seed) {
  Instance inst = parse_instance(instance_text);
  if (algo == "two-efx") return canonical_dump(lottery_to_json(inst, solve_two_agent_efx(inst)));
  if (algo == "two-efm") return canonical_dump(lottery_to_json(inst, solve_two_agent_efm(inst)));
  SplitMix64 rng(seed);
  std::vector<int> perm = random_permutation(inst.n, rng);
  if (algo == "prop-efm")
    return canonical_dump(allocation_to_json(inst, solve_prop_efm(inst, perm)));
  if (algo == "efx-fpo")
    return canonical_dump(allocation_to_json(inst, solve_efx_fpo(inst, perm)));
  throw bad_input("unknown algo: " + algo);
}

std::string check(const std::string& instance_text, const std::string& allocation_text,
                  const std::string& property) {
  Instance inst = parse_instance(instance_text);
  IntegralAllocation alloc = allocation_from_json(inst, nlohmann::json::parse(allocation_text));
  auto p = property_from_name(property);
  if (!p) throw bad_input("unknown property: " + property);
  PropertyReport report =
      *p == Property::FPO ? check_fpo_lp(inst, alloc) : check_property(inst, alloc, *p);
  return canonical_dump(report_to_json(inst, report, *p));
}

std::string generate(const std::string& family, int n, int m, std::uint64_t seed,
                     const std::string& a, const std::string& b, const std::string& density,
                     long max_value, int divisible_count, long divisible_mass) {
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
    throw bad_input("unknown family: " + family);
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  spec.a = parse_rational(a);
  spec.b = parse_rational(b);
  spec.density = parse_rational(density);
  spec.max_value = max_value;
  spec.divisible_count = divisible_count;
  spec.divisible_mass = divisible_mass;
  return canonical_dump(instance_to_json(generate_instance(spec)));
}

PermSolver named_solver(const std::string& algo) {
  if (algo == "prop-efm")
    return [](const Instance& i, const std::vector<int>& p) { return solve_prop_efm(i, p); };
  if (algo == "efx-fpo")
    return [](const Instance& i, const std::vector<int>& p) { return solve_efx_fpo(i, p); };
  throw bad_input("verification covers prop-efm and efx-fpo (two-agent lotteries are direct)");
}

std::string verify(const std::string& instance_text, const std::string& algo,
                   const std::string& property) {
  Instance inst = parse_instance(instance_text);
  auto p = property_from_name(property);
  if (!p || (*p != Property::EF && *p != Property::PROP)) throw bad_input("property must be ef or prop");
  RandomizedAllocation lottery;
  if (algo == "two-efx")
    lottery = solve_two_agent_efx(inst);
  else if (algo == "two-efm")
    lottery = solve_two_agent_efm(inst);
  else
    lottery = enumerate_lottery(named_solver(algo), inst);
  ExAnteReport report = verify_exante(inst, lottery, *p);
  nlohmann::json doc;
  doc["exante_holds"] = report.ex_ante.holds;
  doc["expost_holds"] = report.ex_post_all;
  doc["support_size"] = static_cast<int>(lottery.support.size());
  doc["lottery"] = lottery_to_json(inst, lottery);
  return canonical_dump(doc);
}

}  // namespace

PYBIND11_MODULE(_fairdiv, mod) {
  mod.doc() = "exact-arithmetic fair division engine";
  mod.def("solve_json", &solve, py::arg("instance"), py::arg("algo"), py::arg("seed") = 0);
  mod.def("check_json", &check, py::arg("instance"), py::arg("allocation"), py::arg("property"));
  mod.def("generate_json", &generate, py::arg("family"), py::arg("n"), py::arg("m"),
          py::arg("seed") = 0, py::arg("a") = "1", py::arg("b") = "2", py::arg("density") = "1/2",
          py::arg("max_value") = 100, py::arg("divisible_count") = 1,
          py::arg("divisible_mass") = 10);
  mod.def("verify_json", &verify, py::arg("instance"), py::arg("algo"), py::arg("property"));

  py::register_exception<Error>(mod, "FairdivError");
}
