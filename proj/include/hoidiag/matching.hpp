#pragma once

#include <utility>
#include <vector>

#include "hoidiag/types.hpp"

namespace hoidiag {

enum class Verdict { TruePositive, FalsePositive };

/// One scored prediction inside a category's confidence-ranked list.
/// best_iou_h / best_iou_o are diagnostics against the category's
/// best-overlapping GT pair in the image (kept for FPs too).
struct MatchRecord {
  int prediction_index = -1;
  int image_index = -1;
  double confidence = 0.0;
  Verdict verdict = Verdict::FalsePositive;
  int gt_pair_index = -1;  // valid iff TP
  double best_iou_h = 0.0;
  double best_iou_o = 0.0;
};

struct CategoryLedger {
  std::vector<MatchRecord> records;  // confidence-descending, canonical ties
  long gt_count = 0;
};

/// Per-category match results over the whole dataset. The substrate for AP,
/// diagnosis, and the oracles.
struct MatchLedger {
  std::vector<CategoryLedger> categories;  // indexed as vocabulary categories
  const Dataset* dataset = nullptr;
  const PredictionSet* predictions = nullptr;
  double iou_threshold = 0.5;
};

struct MatchOptions {
  double iou_threshold = 0.5;
  int threads = 0;  // 0 = library default, 1 = strictly serial
};

/// Greedy triplet-level assignment: per category and image, predictions are
/// visited in descending confidence; a prediction is a TP iff both category
/// labels are correct and both IoUs exceed the threshold against a
/// not-yet-matched GT pair annotated with the predicted action. Among
/// eligible GT pairs the one maximizing min(IoU_h, IoU_o) wins.
MatchLedger match_triplets(const Dataset& dataset, const PredictionSet& predictions,
                           const MatchOptions& options = {});

/// Detected human-object pair after per-image deduplication. Carries the
/// max action score per predicted action for the classification metrics.
struct PairDetection {
  int image_index = -1;
  BoundingBox human_box;
  BoundingBox object_box;
  double confidence = 0.0;       // max triplet confidence over the pair's triplets
  double max_action_score = 0.0;  // max p_i over the pair's predicted actions
  std::vector<std::pair<int, double>> action_scores;  // (action, max score), sorted
  bool tp = false;
  bool covers_gt = false;  // overlaps some GT pair above threshold (matched or not)
  int gt_pair_index = -1;  // valid iff tp
};

struct PairLedger {
  std::vector<PairDetection> detections;  // grouped by image, confidence order
  std::vector<long> per_image_gt;
  std::vector<long> per_image_tp;
  std::vector<long> per_image_detections;
  long total_gt_pairs = 0;
  long tp_count = 0;
};

/// Pair-level assignment ignoring action labels: detections are deduplicated
/// to unique (human box, object box, object category) pairs per image keeping
/// the max triplet confidence, then greedily matched one-to-one to GT pairs.
PairLedger match_pairs(const Dataset& dataset, const PredictionSet& predictions,
                       const MatchOptions& options = {});

/// Pair-level NMS: within each image and (object category, action) group,
/// keeps the highest-confidence triplet and suppresses any other whose
/// min(human IoU, object IoU) with a kept one exceeds the threshold.
PredictionSet nms_pairs(const PredictionSet& predictions, const Dataset& dataset,
                        double pair_iou_threshold = 0.7);

/// Canonical record order: confidence descending, ties broken by image id,
/// box coordinates, action, then prediction index. Makes ledgers invariant
/// to input prediction order.
bool record_less(const MatchRecord& a, const MatchRecord& b, const Dataset& dataset,
                 const PredictionSet& predictions);
void sort_records(std::vector<MatchRecord>& records, const Dataset& dataset,
                  const PredictionSet& predictions);

namespace reference {

/// Plain single-pass serial matcher, kept as an independent cross-check for
/// the parallel implementation.
MatchLedger match_triplets(const Dataset& dataset, const PredictionSet& predictions,
                           double iou_threshold = 0.5);

}  // namespace reference

}  // namespace hoidiag
