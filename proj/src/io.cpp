#include "hoidiag/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>

namespace hoidiag {

namespace {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

void check_format_version(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("format_version")) {
    throw ParseError(what + ": missing format_version");
  }
  const int v = j.at("format_version").get<int>();
  if (v != kFormatVersion) {
    throw ParseError(what + ": unsupported format_version " + std::to_string(v));
  }
}

BoundingBox parse_box(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError(ctx + ": box must be [x1, y1, x2, y2]");
  }
  BoundingBox b;
  b.x1 = j[0].get<double>();
  b.y1 = j[1].get<double>();
  b.x2 = j[2].get<double>();
  b.y2 = j[3].get<double>();
  if (b.x2 <= b.x1 || b.y2 <= b.y1) {
    throw ValidationError(ctx + ": degenerate box [" + std::to_string(b.x1) + ", " +
                          std::to_string(b.y1) + ", " + std::to_string(b.x2) + ", " +
                          std::to_string(b.y2) + "]");
  }
  return b;
}

json box_to_json(const BoundingBox& b) { return json::array({b.x1, b.y1, b.x2, b.y2}); }

double parse_score(const json& j, const std::string& ctx, const char* field) {
  const double s = j.at(field).get<double>();
  if (s < 0.0 || s > 1.0) {
    throw ValidationError(ctx + ": " + field + " = " + std::to_string(s) +
                          " outside [0, 1]");
  }
  return s;
}

}  // namespace

Dataset dataset_from_json(const json& j) {
  check_format_version(j, "ground truth");
  if (!j.contains("vocabulary") || !j.contains("images")) {
    throw ParseError("ground truth: missing vocabulary or images");
  }
  const json& jv = j.at("vocabulary");
  std::vector<std::string> objects = jv.at("objects").get<std::vector<std::string>>();
  std::vector<std::string> actions = jv.at("actions").get<std::vector<std::string>>();

  std::vector<HoiCategory> valid;
  for (const auto& e : jv.at("valid_hoi")) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("ground truth: valid_hoi entries must be [object_id, action_id]");
    }
    valid.push_back(HoiCategory{e[0].get<int>(), e[1].get<int>()});
  }
  std::vector<int> excluded;
  if (jv.contains("excluded_actions")) {
    excluded = jv.at("excluded_actions").get<std::vector<int>>();
  }
  int person_id = -1;
  if (jv.contains("person_id")) {
    person_id = jv.at("person_id").get<int>();
  } else {
    auto it = std::find(objects.begin(), objects.end(), "person");
    if (it == objects.end()) {
      throw ValidationError(
          "ground truth: vocabulary has no person_id and no object named 'person'");
    }
    person_id = static_cast<int>(it - objects.begin());
  }

  Dataset ds;
  ds.vocabulary = Vocabulary(std::move(objects), std::move(actions), std::move(valid),
                             std::move(excluded), person_id);

  const int n_act = ds.vocabulary.num_actions();
  const int n_obj = ds.vocabulary.num_objects();
  for (const auto& jim : j.at("images")) {
    ImageRecord im;
    im.id = jim.at("id").get<std::string>();
    const std::string ctx = "image '" + im.id + "'";
    if (jim.contains("gt_pairs")) {
      int pi = 0;
      for (const auto& jp : jim.at("gt_pairs")) {
        const std::string pctx = ctx + " pair " + std::to_string(pi++);
        GtPair pair;
        pair.human_box = parse_box(jp.at("human_box"), pctx + " human_box");
        pair.human_box.category_id = person_id;
        pair.object_box = parse_box(jp.at("object_box"), pctx + " object_box");
        pair.object_box.category_id = jp.at("object_category").get<int>();
        if (pair.object_box.category_id < 0 || pair.object_box.category_id >= n_obj) {
          throw ValidationError(pctx + ": unknown object category " +
                                std::to_string(pair.object_box.category_id));
        }
        std::set<int> acts;
        for (const auto& ja : jp.at("actions")) {
          const int a = ja.get<int>();
          if (a < 0 || a >= n_act) {
            throw ValidationError(pctx + ": unknown action id " + std::to_string(a));
          }
          if (!ds.vocabulary.is_excluded_action(a)) acts.insert(a);
        }
        // Pairs whose actions were all excluded disappear entirely.
        if (acts.empty()) continue;
        pair.action_ids.assign(acts.begin(), acts.end());
        im.gt_pairs.push_back(std::move(pair));
      }
    }
    ds.images.push_back(std::move(im));
  }
  ds.finalize();
  return ds;
}

Dataset load_ground_truth(const std::filesystem::path& path) {
  return dataset_from_json(read_json_file(path));
}

PredictionSet predictions_from_json(const json& j, const Dataset& dataset,
                                    std::optional<double> score_threshold) {
  check_format_version(j, "predictions");
  if (!j.contains("predictions")) {
    throw ParseError("predictions: missing predictions array");
  }
  PredictionSet ps;
  ps.applied_score_threshold = score_threshold;
  const auto& vocab = dataset.vocabulary;
  int idx = 0;
  for (const auto& jp : j.at("predictions")) {
    const std::string ctx = "prediction " + std::to_string(idx++);
    PredictedTriplet p;
    const std::string image_id = jp.at("image_id").get<std::string>();
    p.image_index = dataset.image_index(image_id);
    if (p.image_index < 0) {
      throw ValidationError(ctx + ": unknown image id '" + image_id + "'");
    }
    p.human_box = parse_box(jp.at("human_box"), ctx + " human_box");
    p.human_box.category_id = vocab.person_id();
    p.human_box.score = parse_score(jp, ctx, "human_score");
    p.object_box = parse_box(jp.at("object_box"), ctx + " object_box");
    p.object_box.category_id = jp.at("object_category").get<int>();
    if (p.object_box.category_id < 0 || p.object_box.category_id >= vocab.num_objects()) {
      throw ValidationError(ctx + ": unknown object category " +
                            std::to_string(p.object_box.category_id));
    }
    p.object_box.score = parse_score(jp, ctx, "object_score");
    p.action_id = jp.at("action").get<int>();
    if (p.action_id < 0 || p.action_id >= vocab.num_actions()) {
      throw ValidationError(ctx + ": unknown action id " + std::to_string(p.action_id));
    }
    p.action_score = parse_score(jp, ctx, "action_score");
    if (jp.contains("confidence")) {
      const double c = jp.at("confidence").get<double>();
      if (c < 0.0 || c > 1.0) {
        throw ValidationError(ctx + ": confidence outside [0, 1]");
      }
      p.confidence = c;
    }

    if (vocab.is_excluded_action(p.action_id)) {
      ++ps.dropped_excluded_action;
      continue;
    }
    if (!vocab.category_index(p.object_box.category_id, p.action_id)) {
      ++ps.dropped_invalid_hoi;
      continue;
    }
    if (score_threshold &&
        (p.human_box.score < *score_threshold || p.object_box.score < *score_threshold)) {
      ++ps.dropped_below_threshold;
      continue;
    }
    ps.predictions.push_back(std::move(p));
  }
  ps.finalize(static_cast<int>(dataset.images.size()));
  return ps;
}

PredictionSet load_predictions(const std::filesystem::path& path, const Dataset& dataset,
                               std::optional<double> score_threshold) {
  return predictions_from_json(read_json_file(path), dataset, score_threshold);
}

json dataset_to_json(const Dataset& dataset) {
  const auto& v = dataset.vocabulary;
  json jv;
  jv["objects"] = v.object_names();
  jv["actions"] = v.action_names();
  json valid = json::array();
  for (const auto& c : v.valid_hoi()) {
    valid.push_back(json::array({c.object_id, c.action_id}));
  }
  jv["valid_hoi"] = std::move(valid);
  jv["excluded_actions"] = std::vector<int>(v.excluded_actions().begin(),
                                            v.excluded_actions().end());
  jv["person_id"] = v.person_id();

  json jims = json::array();
  for (const auto& im : dataset.images) {
    json jim;
    jim["id"] = im.id;
    json jpairs = json::array();
    for (const auto& p : im.gt_pairs) {
      json jp;
      jp["human_box"] = box_to_json(p.human_box);
      jp["object_box"] = box_to_json(p.object_box);
      jp["object_category"] = p.object_box.category_id;
      jp["actions"] = p.action_ids;
      jpairs.push_back(std::move(jp));
    }
    jim["gt_pairs"] = std::move(jpairs);
    jims.push_back(std::move(jim));
  }

  json j;
  j["format_version"] = kFormatVersion;
  j["vocabulary"] = std::move(jv);
  j["images"] = std::move(jims);
  return j;
}

json predictions_to_json(const PredictionSet& predictions, const Dataset& dataset) {
  json arr = json::array();
  for (const auto& p : predictions.predictions) {
    json jp;
    jp["image_id"] = dataset.images.at(p.image_index).id;
    jp["human_box"] = box_to_json(p.human_box);
    jp["human_score"] = p.human_box.score;
    jp["object_box"] = box_to_json(p.object_box);
    jp["object_category"] = p.object_box.category_id;
    jp["object_score"] = p.object_box.score;
    jp["action"] = p.action_id;
    jp["action_score"] = p.action_score;
    if (p.confidence) jp["confidence"] = *p.confidence;
    arr.push_back(std::move(jp));
  }
  json j;
  j["format_version"] = kFormatVersion;
  j["predictions"] = std::move(arr);
  return j;
}

void save_ground_truth(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << dataset_to_json(dataset).dump(2) << '\n';
}

void save_predictions(const PredictionSet& predictions, const Dataset& dataset,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << predictions_to_json(predictions, dataset).dump() << '\n';
}

std::string file_content_hash(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "' for hashing");
  std::uint64_t h = 1469598103934665603ULL;
  char buf[65536];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    const std::streamsize n = in.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
    if (!in) break;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
  return std::string(out);
}

}  // namespace hoidiag
