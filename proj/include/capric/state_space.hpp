#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace capric {

/// Subsets of a state space are bitmasks over the declared state order:
/// bit i set means the i-th declared state is in the subset. The 24-state cap
/// keeps every mask in one 32-bit word and every full table at desk scale.
using SubsetMask = std::uint32_t;

inline SubsetMask state_bit(int i) { return SubsetMask{1} << i; }

/// Ordered finite set of named market states. Immutable after construction;
/// shared by payoffs and capacities via StateSpacePtr.
class StateSpace {
 public:
  static constexpr int kMaxStates = 24;

  /// Names must be non-empty, distinct, and free of commas (commas delimit
  /// subset keys in capacity files).
  explicit StateSpace(std::vector<std::string> states);

  int size() const { return static_cast<int>(states_.size()); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state_name(int i) const { return states_.at(i); }
  int index_of(const std::string& name) const;

  SubsetMask full_mask() const {
    return static_cast<SubsetMask>((std::uint64_t{1} << size()) - 1);
  }
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  SubsetMask complement(SubsetMask m) const { return full_mask() & ~m; }

  SubsetMask mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(SubsetMask m) const;

  /// Canonical file key: state names in declared order joined by commas,
  /// "" for the empty set.
  std::string subset_key(SubsetMask m) const;
  /// Human-readable form for text reports: "{a,b}".
  std::string subset_label(SubsetMask m) const;

  bool same_as(const StateSpace& other) const {
    return states_ == other.states_;
  }

 private:
  std::vector<std::string> states_;
  std::unordered_map<std::string, int> index_;
};

using StateSpacePtr = std::shared_ptr<const StateSpace>;

StateSpacePtr make_space(std::vector<std::string> states);

}  // namespace capric
