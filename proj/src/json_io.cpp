#include "fairdiv/json_io.hpp"

#include <fstream>
#include <map>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

Rational rational_field(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw bad_input("expected a rational encoded as a string");
}

std::string name_of(const nlohmann::json& v) {
  if (!v.is_string()) throw bad_input("good names must be strings");
  return v.get<std::string>();
}

}  // namespace

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json doc;
  doc["agents"] = inst.n;
  doc["indivisible"] = inst.indivisible;
  doc["divisible"] = inst.divisible;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : inst.utilities) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rational& u : row) out.push_back(to_string(u));
    rows.push_back(std::move(out));
  }
  doc["utilities"] = std::move(rows);
  return doc;
}

Instance instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw bad_input("instance document must be a JSON object");
  Instance inst;
  try {
    inst.n = doc.at("agents").get<int>();
    for (const auto& v : doc.at("indivisible")) inst.indivisible.push_back(name_of(v));
    for (const auto& v : doc.at("divisible")) inst.divisible.push_back(name_of(v));
    for (const auto& row : doc.at("utilities")) {
      std::vector<Rational> out;
      for (const auto& v : row) out.push_back(rational_field(v));
      inst.utilities.push_back(std::move(out));
    }
  } catch (const nlohmann::json::exception& e) {
    throw bad_input(std::string("malformed instance: ") + e.what());
  }
  return validate_instance(std::move(inst));
}

nlohmann::json allocation_to_json(const Instance& inst, const IntegralAllocation& alloc) {
  nlohmann::json doc;
  nlohmann::json bundles = nlohmann::json::array();
  for (int i = 0; i < alloc.agents(); ++i) {
    nlohmann::json bundle;
    nlohmann::json names = nlohmann::json::array();
    for (int g : alloc.bundles[i]) names.push_back(inst.indivisible[g]);
    bundle["indivisible"] = std::move(names);
    nlohmann::json fracs = nlohmann::json::array();
    for (const Rational& x : alloc.fractions[i]) fracs.push_back(to_string(x));
    bundle["divisible"] = std::move(fracs);
    bundles.push_back(std::move(bundle));
  }
  doc["bundles"] = std::move(bundles);
  return doc;
}

IntegralAllocation allocation_from_json(const Instance& inst, const nlohmann::json& doc) {
  std::map<std::string, int> good_id;
  for (int g = 0; g < inst.m(); ++g) good_id[inst.indivisible[g]] = g;
  IntegralAllocation alloc = IntegralAllocation::empty(inst);
  try {
    const auto& bundles = doc.at("bundles");
    if (static_cast<int>(bundles.size()) != inst.n)
      throw bad_input("allocation has the wrong number of bundles");
    for (int i = 0; i < inst.n; ++i) {
      for (const auto& v : bundles[i].at("indivisible")) {
        auto it = good_id.find(name_of(v));
        if (it == good_id.end()) throw bad_input("unknown indivisible good in allocation");
        alloc.bundles[i].push_back(it->second);
      }
      const auto& fracs = bundles[i].at("divisible");
      if (static_cast<int>(fracs.size()) != inst.m_bar())
        throw bad_input("allocation fraction row width mismatch");
      for (int k = 0; k < inst.m_bar(); ++k) alloc.fractions[i][k] = rational_field(fracs[k]);
    }
  } catch (const nlohmann::json::exception& e) {
    throw bad_input(std::string("malformed allocation: ") + e.what());
  }
  alloc.sort_bundles();
  validate_allocation(inst, alloc);
  return alloc;
}

nlohmann::json lottery_to_json(const Instance& inst, const RandomizedAllocation& lottery) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& [p, alloc] : lottery.support) {
    nlohmann::json entry;
    entry["p"] = to_string(p);
    entry["allocation"] = allocation_to_json(inst, alloc);
    doc.push_back(std::move(entry));
  }
  return doc;
}

RandomizedAllocation lottery_from_json(const Instance& inst, const nlohmann::json& doc) {
  RandomizedAllocation lottery;
  try {
    for (const auto& entry : doc) {
      Rational p = rational_field(entry.at("p"));
      lottery.support.emplace_back(p, allocation_from_json(inst, entry.at("allocation")));
    }
  } catch (const nlohmann::json::exception& e) {
    throw bad_input(std::string("malformed lottery: ") + e.what());
  }
  validate_lottery(inst, lottery);
  return lottery;
}

nlohmann::json fractional_to_json(const FractionalAllocation& frac) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : frac.matrix) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rational& x : row) out.push_back(to_string(x));
    rows.push_back(std::move(out));
  }
  return rows;
}

nlohmann::json report_to_json(const Instance& inst, const PropertyReport& report, Property p) {
  nlohmann::json doc;
  doc["property"] = property_name(p);
  doc["holds"] = report.holds;
  if (report.witness) {
    nlohmann::json w;
    w["envier"] = report.witness->envier;
    if (report.witness->envied >= 0) w["envied"] = report.witness->envied;
    if (report.witness->good) w["good"] = inst.indivisible[*report.witness->good];
    if (report.witness->shortfall) w["shortfall"] = to_string(*report.witness->shortfall);
    doc["witness"] = std::move(w);
  }
  if (report.dominator) doc["dominator"] = fractional_to_json(*report.dominator);
  return doc;
}

std::string canonical_dump(const nlohmann::json& doc) {
  return doc.dump() + "\n";  // nlohmann objects already iterate in sorted key order
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bad_input("cannot open file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw bad_input(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

}  // namespace fairdiv
