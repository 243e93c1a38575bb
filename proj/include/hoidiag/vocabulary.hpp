#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hoidiag/errors.hpp"

namespace hoidiag {

/// One HOI category: a (object class, action class) pair. AP is averaged
/// over these.
struct HoiCategory {
  int object_id = 0;
  int action_id = 0;

  friend auto operator<=>(const HoiCategory&, const HoiCategory&) = default;
};

/// Object/action class names plus the set of feasible (object, action)
/// combinations. Actions listed in excluded_actions (e.g. placeholder
/// non-interaction classes) are removed from evaluation: categories using
/// them are not assigned an index and do not participate in mAP.
class Vocabulary {
 public:
  Vocabulary() = default;

  Vocabulary(std::vector<std::string> objects, std::vector<std::string> actions,
             std::vector<HoiCategory> valid_hoi, std::vector<int> excluded_actions,
             int person_id)
      : object_names_(std::move(objects)),
        action_names_(std::move(actions)),
        excluded_actions_(excluded_actions.begin(), excluded_actions.end()),
        person_id_(person_id) {
    const int n_obj = static_cast<int>(object_names_.size());
    const int n_act = static_cast<int>(action_names_.size());
    if (person_id_ < 0 || person_id_ >= n_obj) {
      throw ValidationError("vocabulary: person id " + std::to_string(person_id_) +
                            " outside object range");
    }
    for (int a : excluded_actions_) {
      if (a < 0 || a >= n_act) {
        throw ValidationError("vocabulary: excluded action id " + std::to_string(a) +
                              " outside action range");
      }
    }
    for (const auto& c : valid_hoi) {
      if (c.object_id < 0 || c.object_id >= n_obj || c.action_id < 0 || c.action_id >= n_act) {
        throw ValidationError("vocabulary: valid_hoi entry (" + std::to_string(c.object_id) +
                              ", " + std::to_string(c.action_id) + ") out of range");
      }
      valid_hoi_.insert(c);
    }
    for (const auto& c : valid_hoi_) {
      if (!excluded_actions_.count(c.action_id)) {
        category_index_[c] = static_cast<int>(categories_.size());
        categories_.push_back(c);
      }
    }
  }

  int num_objects() const { return static_cast<int>(object_names_.size()); }
  int num_actions() const { return static_cast<int>(action_names_.size()); }
  const std::string& object_name(int id) const { return object_names_.at(id); }
  const std::string& action_name(int id) const { return action_names_.at(id); }
  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& action_names() const { return action_names_; }

  int person_id() const { return person_id_; }
  bool is_excluded_action(int action_id) const { return excluded_actions_.count(action_id) > 0; }
  const std::set<int>& excluded_actions() const { return excluded_actions_; }

  /// Membership in the raw feasibility set, before exclusion filtering.
  bool is_valid_hoi(int object_id, int action_id) const {
    return valid_hoi_.count(HoiCategory{object_id, action_id}) > 0;
  }
  const std::set<HoiCategory>& valid_hoi() const { return valid_hoi_; }

  /// Number of categories that survive exclusion filtering.
  int num_categories() const { return static_cast<int>(categories_.size()); }
  const HoiCategory& category(int index) const { return categories_.at(index); }
  const std::vector<HoiCategory>& categories() const { return categories_; }

  /// Index of an evaluated category, or nullopt if the combination is
  /// infeasible or its action is excluded.
  std::optional<int> category_index(int object_id, int action_id) const {
    auto it = category_index_.find(HoiCategory{object_id, action_id});
    if (it == category_index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<std::string> object_names_;
  std::vector<std::string> action_names_;
  std::set<HoiCategory> valid_hoi_;
  std::set<int> excluded_actions_;
  int person_id_ = 0;
  std::vector<HoiCategory> categories_;
  std::map<HoiCategory, int> category_index_;
};

}  // namespace hoidiag
