#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hoidiag/geometry.hpp"
#include "hoidiag/vocabulary.hpp"

namespace hoidiag {

/// Annotated interacting human-object pair. One pair may carry several
/// action labels; each (pair, action) combination is one GT triplet.
struct GtPair {
  BoundingBox human_box;
  BoundingBox object_box;
  std::vector<int> action_ids;  // sorted, unique, non-empty

  bool has_action(int action_id) const {
    return std::binary_search(action_ids.begin(), action_ids.end(), action_id);
  }
};

struct ImageRecord {
  std::string id;
  std::vector<GtPair> gt_pairs;
};

/// Detector output triplet: human box, object box, action, three scores.
struct PredictedTriplet {
  int image_index = -1;
  BoundingBox human_box;   // score = s_h
  BoundingBox object_box;  // score = s_o
  int action_id = 0;
  double action_score = 0.0;  // s_a
  std::optional<double> confidence;  // fused score, overrides the product
};

/// Triplet confidence: the precomputed fused score when the detector
/// supplied one, otherwise s_h * s_o * s_a.
inline double triplet_confidence(const PredictedTriplet& p) {
  if (p.confidence) return *p.confidence;
  return p.human_box.score * p.object_box.score * p.action_score;
}

/// Ground truth: vocabulary, images, and per-category GT triplet counts.
/// Immutable after finalize(); safe to share across workers.
struct Dataset {
  Vocabulary vocabulary;
  std::vector<ImageRecord> images;

  std::vector<long> category_gt_counts;  // indexed by vocabulary category index
  long total_gt_pairs = 0;
  long total_gt_triplets = 0;

  int image_index(const std::string& id) const {
    auto it = image_index_.find(id);
    return it == image_index_.end() ? -1 : it->second;
  }

  /// Builds the image index and occurrence counts, validating every pair
  /// against the vocabulary. Call once after images are populated.
  void finalize() {
    image_index_.clear();
    for (int i = 0; i < static_cast<int>(images.size()); ++i) {
      if (!image_index_.emplace(images[i].id, i).second) {
        throw ValidationError("dataset: duplicate image id '" + images[i].id + "'");
      }
    }
    category_gt_counts.assign(vocabulary.num_categories(), 0);
    total_gt_pairs = 0;
    total_gt_triplets = 0;
    for (const auto& im : images) {
      for (size_t pi = 0; pi < im.gt_pairs.size(); ++pi) {
        const auto& pair = im.gt_pairs[pi];
        if (!pair.human_box.valid() || !pair.object_box.valid()) {
          throw ValidationError("dataset: degenerate box in image '" + im.id + "' pair " +
                                std::to_string(pi));
        }
        if (pair.human_box.category_id != vocabulary.person_id()) {
          throw ValidationError("dataset: human box in image '" + im.id +
                                "' is not labeled with the person category");
        }
        if (pair.action_ids.empty()) {
          throw ValidationError("dataset: empty action set in image '" + im.id + "' pair " +
                                std::to_string(pi));
        }
        ++total_gt_pairs;
        for (int a : pair.action_ids) {
          auto ci = vocabulary.category_index(pair.object_box.category_id, a);
          if (!ci) {
            throw ValidationError("dataset: pair in image '" + im.id + "' uses (object " +
                                  std::to_string(pair.object_box.category_id) + ", action " +
                                  std::to_string(a) + ") which is not an evaluated HOI category");
          }
          ++category_gt_counts[*ci];
          ++total_gt_triplets;
        }
      }
    }
  }

 private:
  std::map<std::string, int> image_index_;
};

/// A loaded prediction file: triplets grouped per image, plus filter
/// bookkeeping from ingestion.
struct PredictionSet {
  std::vector<PredictedTriplet> predictions;
  std::vector<std::vector<int>> by_image;  // image index -> prediction indices

  std::optional<double> applied_score_threshold;
  long dropped_excluded_action = 0;
  long dropped_invalid_hoi = 0;
  long dropped_below_threshold = 0;

  /// Rebuilds the per-image index. Prediction order defines identity for
  /// deterministic tie-breaking, so it is preserved.
  void finalize(int n_images) {
    by_image.assign(n_images, {});
    for (int i = 0; i < static_cast<int>(predictions.size()); ++i) {
      by_image.at(predictions[i].image_index).push_back(i);
    }
  }
};

}  // namespace hoidiag
