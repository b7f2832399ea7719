#include "capric/state_space.hpp"

#include <bit>

#include "capric/errors.hpp"

namespace capric {

StateSpace::StateSpace(std::vector<std::string> states)
    : states_(std::move(states)) {
  if (states_.empty()) {
    throw input_error("state space: at least one state is required");
  }
  if (static_cast<int>(states_.size()) > kMaxStates) {
    throw budget_error("state space: " + std::to_string(states_.size()) +
                       " states exceeds the cap of " +
                       std::to_string(kMaxStates));
  }
  for (int i = 0; i < static_cast<int>(states_.size()); ++i) {
    const std::string& name = states_[i];
    if (name.empty()) {
      throw input_error("state space: state names must be non-empty");
    }
    if (name.find(',') != std::string::npos) {
      throw input_error("state space: state name '" + name +
                        "' may not contain a comma");
    }
    if (!index_.emplace(name, i).second) {
      throw input_error("state space: duplicate state name '" + name + "'");
    }
  }
}

int StateSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw input_error("state space: unknown state '" + name + "'");
  }
  return it->second;
}

SubsetMask StateSpace::mask_of(const std::vector<std::string>& names) const {
  SubsetMask m = 0;
  for (const auto& name : names) m |= state_bit(index_of(name));
  return m;
}

std::vector<std::string> StateSpace::names_of(SubsetMask m) const {
  std::vector<std::string> out;
  out.reserve(std::popcount(m));
  for (int i = 0; i < size(); ++i) {
    if (m & state_bit(i)) out.push_back(states_[i]);
  }
  return out;
}

std::string StateSpace::subset_key(SubsetMask m) const {
  std::string out;
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!(m & state_bit(i))) continue;
    if (!first) out += ',';
    out += states_[i];
    first = false;
  }
  return out;
}

std::string StateSpace::subset_label(SubsetMask m) const {
  return "{" + subset_key(m) + "}";
}

StateSpacePtr make_space(std::vector<std::string> states) {
  return std::make_shared<const StateSpace>(std::move(states));
}

}  // namespace capric
