#include "fairdiv/checkers.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"

namespace fairdiv {

std::optional<Property> property_from_name(const std::string& name) {
  if (name == "ef") return Property::EF;
  if (name == "prop") return Property::PROP;
  if (name == "ef1") return Property::EF1;
  if (name == "efx") return Property::EFX;
  if (name == "efm") return Property::EFM;
  if (name == "efxm") return Property::EFXM;
  if (name == "fpo") return Property::FPO;
  return std::nullopt;
}

std::string property_name(Property p) {
  switch (p) {
    case Property::EF: return "ef";
    case Property::PROP: return "prop";
    case Property::EF1: return "ef1";
    case Property::EFX: return "efx";
    case Property::EFM: return "efm";
    case Property::EFXM: return "efxm";
    case Property::FPO: return "fpo";
  }
  return "?";
}

namespace {

void require_complete_fractional(const Instance& inst, const FractionalAllocation& alloc) {
  if (static_cast<int>(alloc.matrix.size()) != inst.n)
    throw precondition("IncompleteAllocation: wrong number of rows");
  const size_t width = inst.utilities[0].size();
  for (const auto& row : alloc.matrix)
    if (row.size() != width) throw precondition("IncompleteAllocation: row width mismatch");
  for (size_t g = 0; g < width; ++g) {
    Rational column = 0;
    for (int i = 0; i < inst.n; ++i) {
      if (alloc.matrix[i][g] < 0 || alloc.matrix[i][g] > 1)
        throw precondition("IncompleteAllocation: entry outside [0, 1]");
      column += alloc.matrix[i][g];
    }
    if (column != 1) throw precondition("IncompleteAllocation: good not fully allocated");
  }
}

void require_complete(const Instance& inst, const IntegralAllocation& alloc) {
  validate_allocation(inst, alloc);
  if (!is_complete(inst, alloc)) throw precondition("IncompleteAllocation");
}

void require_indivisible_only(const Instance& inst, const IntegralAllocation& alloc) {
  validate_allocation(inst, alloc);
  std::vector<char> assigned(inst.m(), 0);
  for (const auto& bundle : alloc.bundles)
    for (int g : bundle) assigned[g] = 1;
  if (std::find(assigned.begin(), assigned.end(), 0) != assigned.end())
    throw precondition("IncompleteAllocation: indivisible good left unassigned");
  for (int i = 0; i < inst.n; ++i)
    if (alloc.has_divisible_share(i))
      throw precondition("DivisiblePresent: checker is defined for indivisible goods only");
}

// u_i(M_j \ {g}) minimized/maximized over removals g ∈ M_j.
struct RemovalScan {
  Rational smallest_remainder;  // drops the most valuable good (EF1 test)
  Rational largest_remainder;   // drops the least valuable good (EFX test)
  int efx_witness_good;         // a removal whose remainder is the largest
};

RemovalScan scan_removals(const Instance& inst, const IntegralAllocation& alloc, int viewer, int owner) {
  Rational total = inst.bundle_value(viewer, alloc.bundles[owner]);
  RemovalScan scan{total, Rational(-1), -1};
  for (int g : alloc.bundles[owner]) {
    Rational remainder = total - inst.util(viewer, g);
    scan.smallest_remainder = std::min(scan.smallest_remainder, remainder);
    if (remainder > scan.largest_remainder) {
      scan.largest_remainder = remainder;
      scan.efx_witness_good = g;
    }
  }
  return scan;
}

enum class UpTo { One, Any };

// Shared core of EF1/EFX: the up-to-g condition toward nonempty indivisible
// bundles, plain non-envy toward empty ones.
PropertyReport check_up_to(const Instance& inst, const IntegralAllocation& alloc, UpTo mode) {
  for (int i = 0; i < inst.n; ++i) {
    Rational own = inst.bundle_value(i, alloc.bundles[i]);
    for (int j = 0; j < inst.n; ++j) {
      if (i == j || alloc.bundles[j].empty()) continue;
      RemovalScan scan = scan_removals(inst, alloc, i, j);
      if (mode == UpTo::One) {
        if (own < scan.smallest_remainder) return PropertyReport::violation({i, j, std::nullopt, std::nullopt});
      } else {
        if (own < scan.largest_remainder)
          return PropertyReport::violation({i, j, scan.efx_witness_good, std::nullopt});
      }
    }
  }
  return PropertyReport::ok();
}

enum class MixedMode { EFM, EFXM };

PropertyReport check_mixed(const Instance& inst, const IntegralAllocation& alloc, MixedMode mode) {
  require_complete(inst, alloc);
  for (int i = 0; i < inst.n; ++i) {
    Rational own = alloc.bundle_value(inst, i, i);
    for (int j = 0; j < inst.n; ++j) {
      if (i == j) continue;
      // A positive fraction triggers the divisible branch regardless of value.
      if (!alloc.has_divisible_share(j) && !alloc.bundles[j].empty()) {
        RemovalScan scan = scan_removals(inst, alloc, i, j);
        const Rational& bar = mode == MixedMode::EFM ? scan.smallest_remainder : scan.largest_remainder;
        if (own < bar) {
          Witness w{i, j, std::nullopt, std::nullopt};
          if (mode == MixedMode::EFXM) w.good = scan.efx_witness_good;
          return PropertyReport::violation(w);
        }
      } else {
        if (own < alloc.bundle_value(inst, i, j))
          return PropertyReport::violation({i, j, std::nullopt, std::nullopt});
      }
    }
  }
  return PropertyReport::ok();
}

}  // namespace

PropertyReport check_ef(const Instance& inst, const FractionalAllocation& alloc) {
  require_complete_fractional(inst, alloc);
  for (int i = 0; i < inst.n; ++i) {
    Rational own = alloc.row_value(inst, i, i);
    for (int j = 0; j < inst.n; ++j)
      if (j != i && own < alloc.row_value(inst, i, j))
        return PropertyReport::violation({i, j, std::nullopt, std::nullopt});
  }
  return PropertyReport::ok();
}

PropertyReport check_ef(const Instance& inst, const IntegralAllocation& alloc) {
  require_complete(inst, alloc);
  return check_ef(inst, to_fractional(inst, alloc));
}

PropertyReport check_prop(const Instance& inst, const FractionalAllocation& alloc) {
  require_complete_fractional(inst, alloc);
  for (int i = 0; i < inst.n; ++i) {
    Rational share = inst.total_value(i) / inst.n;
    Rational own = alloc.row_value(inst, i, i);
    if (own < share) return PropertyReport::violation({i, -1, std::nullopt, share - own});
  }
  return PropertyReport::ok();
}

PropertyReport check_prop(const Instance& inst, const IntegralAllocation& alloc) {
  require_complete(inst, alloc);
  return check_prop(inst, to_fractional(inst, alloc));
}

PropertyReport check_ef1(const Instance& inst, const IntegralAllocation& alloc) {
  require_indivisible_only(inst, alloc);
  return check_up_to(inst, alloc, UpTo::One);
}

PropertyReport check_efx(const Instance& inst, const IntegralAllocation& alloc) {
  require_indivisible_only(inst, alloc);
  return check_up_to(inst, alloc, UpTo::Any);
}

PropertyReport check_efm(const Instance& inst, const IntegralAllocation& alloc) {
  return check_mixed(inst, alloc, MixedMode::EFM);
}

PropertyReport check_efxm(const Instance& inst, const IntegralAllocation& alloc) {
  return check_mixed(inst, alloc, MixedMode::EFXM);
}

PropertyReport check_property(const Instance& inst, const IntegralAllocation& alloc, Property p) {
  switch (p) {
    case Property::EF: return check_ef(inst, alloc);
    case Property::PROP: return check_prop(inst, alloc);
    case Property::EF1: return check_ef1(inst, alloc);
    case Property::EFX: return check_efx(inst, alloc);
    case Property::EFM: return check_efm(inst, alloc);
    case Property::EFXM: return check_efxm(inst, alloc);
    case Property::FPO: throw precondition("fpo is handled by the efficiency checker");
  }
  throw precondition("unknown property");
}

}  // namespace fairdiv
