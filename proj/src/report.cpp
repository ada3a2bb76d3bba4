#include "aces/report.hpp"

#include <cstdio>

namespace aces {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

nlohmann::ordered_json RerankReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = "rerank";
  doc["method"] = method;
  doc["n"] = n;
  doc["m"] = m;
  doc["warnings"] = warnings;
  doc["removed_tests"] = removed_tests;
  doc["candidate_ids"] = candidate_ids;
  doc["test_ids"] = test_ids;
  doc["pass_rates"] = pass_rates;

  ordered_json loo_json;
  auto values = ordered_json::array();
  auto defined = ordered_json::array();
  for (std::size_t j = 0; j < loo.values.size(); ++j) {
    defined.push_back(static_cast<bool>(loo.defined[j]));
    if (loo.defined[j])
      values.push_back(loo.values[j]);
    else
      values.push_back(nullptr);
  }
  loo_json["values"] = std::move(values);
  loo_json["defined"] = std::move(defined);
  doc["loo_auc"] = std::move(loo_json);

  doc["weights"] = ordered_json{{"raw", weights_raw.values},
                                {"normalized", weights_normalized.values}};
  doc["scores"] = scores.values;

  ordered_json ranking_json;
  ranking_json["order"] = ranking.order;
  auto groups = ordered_json::array();
  std::size_t pos = 0;
  for (std::size_t g : ranking.group_sizes) {
    auto group = ordered_json::array();
    for (std::size_t t = pos; t < pos + g; ++t) group.push_back(ranking.order[t]);
    groups.push_back(std::move(group));
    pos += g;
  }
  ranking_json["tie_groups"] = std::move(groups);
  doc["ranking"] = std::move(ranking_json);

  if (auc_vs_labels)
    doc["auc"] = *auc_vs_labels;
  else
    doc["auc"] = nullptr;

  auto pk = nlohmann::ordered_json::array();
  for (const PassAtK& p : pass_at_k) pk.push_back({{"k", p.k}, {"value", p.value}});
  doc["pass_at_k"] = std::move(pk);
  return doc;
}

}  // namespace aces
