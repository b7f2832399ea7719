#include "capric/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "capric/errors.hpp"

namespace capric::io {

namespace {

using nlohmann::json;

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> names;
  if (key.empty()) return names;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = key.find(',', start);
    if (comma == std::string::npos) {
      names.push_back(key.substr(start));
      return names;
    }
    names.push_back(key.substr(start, comma - start));
    start = comma + 1;
  }
}

const json& require_field(const json& doc, const char* field,
                          const char* where) {
  const auto it = doc.find(field);
  if (it == doc.end()) {
    throw input_error(std::string(where) + ": missing field '" + field + "'");
  }
  return *it;
}

StateSpacePtr space_from_json(const json& doc, const char* where) {
  const json& states = require_field(doc, "states", where);
  if (!states.is_array()) {
    throw input_error(std::string(where) + ": 'states' must be an array");
  }
  std::vector<std::string> names;
  names.reserve(states.size());
  for (const json& s : states) {
    if (!s.is_string()) {
      throw input_error(std::string(where) +
                        ": state names must be strings");
    }
    names.push_back(s.get<std::string>());
  }
  return make_space(std::move(names));
}

std::vector<double> number_array(const json& arr, const char* where) {
  if (!arr.is_array()) {
    throw input_error(std::string(where) + ": expected an array of numbers");
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const json& x : arr) {
    if (!x.is_number()) {
      throw input_error(std::string(where) + ": expected an array of numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

LoadedCapacity generated_capacity(const StateSpacePtr& space,
                                  const json& spec) {
  if (!spec.is_object()) {
    throw input_error("capacity: 'generate' must be an object");
  }
  const json& kind_field = require_field(spec, "kind", "generate");
  if (!kind_field.is_string()) {
    throw input_error("generate: 'kind' must be a string");
  }
  const std::string kind = kind_field.get<std::string>();
  if (kind == "additive") {
    const std::vector<double> weights =
        number_array(require_field(spec, "weights", "generate"), "weights");
    return LoadedCapacity{Capacity::additive(space, weights), nullptr};
  }
  if (kind == "distortion") {
    const std::vector<double> p =
        number_array(require_field(spec, "p", "generate"), "p");
    const json& gamma = require_field(spec, "gamma", "generate");
    if (!gamma.is_number()) {
      throw input_error("generate: 'gamma' must be a number");
    }
    return LoadedCapacity{
        Capacity::distortion(space, p, gamma.get<double>()), nullptr};
  }
  if (kind == "epsilon_contamination") {
    const std::vector<double> p =
        number_array(require_field(spec, "p", "generate"), "p");
    const json& eps = require_field(spec, "epsilon", "generate");
    if (!eps.is_number()) {
      throw input_error("generate: 'epsilon' must be a number");
    }
    return LoadedCapacity{
        Capacity::epsilon_contamination(space, p, eps.get<double>()), nullptr};
  }
  throw input_error("generate: unknown kind '" + kind +
                    "' (additive, distortion, epsilon_contamination)");
}

}  // namespace

LoadedCapacity capacity_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw input_error("capacity: document must be an object");
  }
  StateSpacePtr space = space_from_json(doc, "capacity");

  if (doc.contains("generate")) {
    if (doc.contains("values")) {
      throw input_error("capacity: give either 'values' or 'generate'");
    }
    return generated_capacity(space, doc["generate"]);
  }

  const json& values = require_field(doc, "values", "capacity");
  if (!values.is_object()) {
    throw input_error("capacity: 'values' must map subset keys to values");
  }

  const std::size_t count = space->subset_count();
  std::vector<double> table(count, 0.0);
  std::vector<Rational> exact(count, Rational(0));
  std::vector<bool> seen(count, false);
  bool any_decimal_string = false;

  for (const auto& [key, value] : values.items()) {
    const SubsetMask mask = space->mask_of(split_key(key));
    if (seen[mask]) {
      throw input_error("capacity: subset '" + space->subset_key(mask) +
                        "' is listed twice");
    }
    seen[mask] = true;
    if (value.is_string()) {
      const Rational r = decimal_to_rational(value.get<std::string>());
      exact[mask] = r;
      table[mask] = to_double(r);
      any_decimal_string = true;
    } else if (value.is_number()) {
      table[mask] = value.get<double>();
      exact[mask] = dyadic_of(table[mask]);
    } else {
      throw input_error("capacity: value for '" + key +
                        "' must be a number or a decimal string");
    }
  }
  for (SubsetMask mask = 0; mask < count; ++mask) {
    if (!seen[mask]) {
      throw input_error("capacity: missing value for subset '" +
                        space->subset_key(mask) + "'");
    }
  }

  LoadedCapacity out{Capacity(space, std::move(table)), nullptr};
  if (any_decimal_string) {
    out.exact_table =
        std::make_shared<const std::vector<Rational>>(std::move(exact));
  }
  return out;
}

LoadedCapacity load_capacity(const std::string& path) {
  const std::string text = read_file(path);
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw input_error(path + ": not valid JSON");
  }
  try {
    return capacity_from_json(doc);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

Payoff payoff_from_json(const json& doc, const StateSpacePtr& space) {
  if (!doc.is_object()) {
    throw input_error("payoff: document must be an object");
  }
  StateSpacePtr own = space_from_json(doc, "payoff");
  if (space && !own->same_as(*space)) {
    throw input_error(
        "payoff: state list does not match the capacity's states "
        "(same names in the same order required)");
  }
  const StateSpacePtr& use = space ? space : own;

  const json& values = require_field(doc, "values", "payoff");
  if (!values.is_array() ||
      values.size() != static_cast<std::size_t>(use->size())) {
    throw input_error("payoff: 'values' must be an array with one number per "
                      "state");
  }
  std::vector<double> table;
  table.reserve(values.size());
  for (const json& x : values) {
    if (x.is_string()) {
      table.push_back(to_double(decimal_to_rational(x.get<std::string>())));
    } else if (x.is_number()) {
      table.push_back(x.get<double>());
    } else {
      throw input_error("payoff: values must be numbers or decimal strings");
    }
  }
  return Payoff(use, std::move(table));
}

Payoff load_payoff(const std::string& path, const StateSpacePtr& space) {
  const std::string text = read_file(path);
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw input_error(path + ": not valid JSON");
  }
  try {
    return payoff_from_json(doc, space);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

json capacity_to_json(const Capacity& v) {
  json values = json::object();
  const SubsetMask full = v.space()->full_mask();
  for (SubsetMask mask = 0; mask <= full; ++mask) {
    values[v.space()->subset_key(mask)] = v.at(mask);
  }
  return json{{"states", v.space()->states()}, {"values", std::move(values)}};
}

json payoff_to_json(const Payoff& x) {
  return json{{"states", x.space()->states()}, {"values", x.values()}};
}

void save_capacity(const Capacity& v, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw input_error(path + ": cannot open for writing");
  }
  out << stable_dump(capacity_to_json(v)) << '\n';
  if (!out) {
    throw input_error(path + ": write failed");
  }
}

namespace {

void stable_dump_to(const json& doc, std::string& out) {
  switch (doc.type()) {
    case json::value_t::null:
      out += "null";
      return;
    case json::value_t::boolean:
      out += doc.get<bool>() ? "true" : "false";
      return;
    case json::value_t::number_float: {
      const double x = doc.get<double>() + 0.0;  // folds -0 into +0
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", x);
      out += buf;
      return;
    }
    case json::value_t::string:
      out += json(doc.get<std::string>()).dump();
      return;
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const json& item : doc) {
        if (!first) out += ',';
        first = false;
        stable_dump_to(item, out);
      }
      out += ']';
      return;
    }
    case json::value_t::object: {
      // nlohmann objects are std::map-backed, so iteration is already sorted
      // by key.
      out += '{';
      bool first = true;
      for (const auto& [key, value] : doc.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        stable_dump_to(value, out);
      }
      out += '}';
      return;
    }
    default:
      out += doc.dump();
      return;
  }
}

}  // namespace

std::string stable_dump(const json& doc) {
  std::string out;
  stable_dump_to(doc, out);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw input_error(path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw input_error(path + ": read failed");
  }
  return std::move(buffer).str();
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

std::string file_digest(const std::string& path) {
  return fnv1a64_hex(read_file(path));
}

}  // namespace capric::io
