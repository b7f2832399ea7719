#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "capric/capacity.hpp"
#include "capric/exact.hpp"
#include "capric/payoff.hpp"

namespace capric::io {

struct LoadedCapacity {
  Capacity capacity;
  /// Set when the file spelled any value as a decimal string; entries are the
  /// exact rationals those literals denote (plain numbers contribute their
  /// dyadic value). Feeds the exact LP mode.
  std::shared_ptr<const std::vector<Rational>> exact_table;
};

/// Capacity file: {"states": [...], "values": {"": 0, "a": 0.6, ...}} with
/// one entry per subset, keyed by comma-joined state names (any order
/// accepted; written in declared order). Values may be numbers or decimal
/// strings. Alternatively {"states": [...], "generate": {...}} builds a
/// named generator:
///   {"kind": "additive", "weights": [...]}
///   {"kind": "distortion", "p": [...], "gamma": g}
///   {"kind": "epsilon_contamination", "p": [...], "epsilon": e}
LoadedCapacity load_capacity(const std::string& path);
LoadedCapacity capacity_from_json(const nlohmann::json& doc);

/// Payoff file: {"states": [...], "values": [...]}. When `space` is given the
/// file's state list must match it exactly (same names, same order).
Payoff load_payoff(const std::string& path, const StateSpacePtr& space);
Payoff payoff_from_json(const nlohmann::json& doc, const StateSpacePtr& space);

nlohmann::json capacity_to_json(const Capacity& v);
nlohmann::json payoff_to_json(const Payoff& x);
void save_capacity(const Capacity& v, const std::string& path);

/// Deterministic report serialization: keys sorted (nlohmann objects are
/// already ordered), floating-point numbers at 12 significant digits, no
/// locale dependence. Identical documents produce identical bytes.
std::string stable_dump(const nlohmann::json& doc);

std::string read_file(const std::string& path);
std::string fnv1a64_hex(std::string_view bytes);
std::string file_digest(const std::string& path);

}  // namespace capric::io
