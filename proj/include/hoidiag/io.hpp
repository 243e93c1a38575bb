#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "hoidiag/types.hpp"

namespace hoidiag {

/// Canonical on-disk formats, both versioned with "format_version": 1.
/// Ground truth:
///   { "format_version": 1,
///     "vocabulary": { "objects": [...], "actions": [...],
///                     "valid_hoi": [[obj, act], ...],
///                     "excluded_actions": [...], "person_id": int },
///     "images": [ { "id": str, "gt_pairs": [ { "human_box": [x1,y1,x2,y2],
///                   "object_box": [...], "object_category": int,
///                   "actions": [int, ...] } ] } ] }
/// Predictions:
///   { "format_version": 1,
///     "predictions": [ { "image_id": str, "human_box": [...], "human_score": f,
///                        "object_box": [...], "object_category": int,
///                        "object_score": f, "action": int, "action_score": f,
///                        "confidence": f (optional) } ] }
inline constexpr int kFormatVersion = 1;

/// Loads and validates ground truth. Excluded actions are dropped from each
/// pair's action set; pairs left with no actions are removed entirely.
Dataset load_ground_truth(const std::filesystem::path& path);
Dataset dataset_from_json(const nlohmann::json& j);

/// Loads predictions against an already loaded dataset. When score_threshold
/// is given, predictions whose human or object box score falls below it are
/// removed. Predictions with excluded actions or infeasible (object, action)
/// combinations are dropped and counted.
PredictionSet load_predictions(const std::filesystem::path& path, const Dataset& dataset,
                               std::optional<double> score_threshold = std::nullopt);
PredictionSet predictions_from_json(const nlohmann::json& j, const Dataset& dataset,
                                    std::optional<double> score_threshold = std::nullopt);

nlohmann::json dataset_to_json(const Dataset& dataset);
nlohmann::json predictions_to_json(const PredictionSet& predictions, const Dataset& dataset);

void save_ground_truth(const Dataset& dataset, const std::filesystem::path& path);
void save_predictions(const PredictionSet& predictions, const Dataset& dataset,
                      const std::filesystem::path& path);

/// FNV-1a 64-bit content hash of a file, as 16 hex digits. Used to pin
/// reports to exact inputs.
std::string file_content_hash(const std::filesystem::path& path);

}  // namespace hoidiag
