#include "ocusim/manifest.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ocusim/rng.hpp"

namespace ocusim {

namespace {
const std::map<std::string, Task>& task_table() {
  static const std::map<std::string, Task> table = {
      {"segment", Task::segment},   {"detect", Task::detect},     {"translate", Task::translate},
      {"enhance", Task::enhance},   {"sr", Task::sr},             {"inpaint", Task::inpaint},
      {"outpaint", Task::outpaint}, {"progress", Task::progress}, {"exemplar", Task::exemplar}};
  return table;
}
}  // namespace

std::string task_name(Task t) {
  for (const auto& [name, task] : task_table())
    if (task == t) return name;
  return "segment";
}

Task task_from_name(const std::string& s) {
  auto it = task_table().find(s);
  if (it == task_table().end()) throw std::invalid_argument("unknown task: " + s);
  return it->second;
}

std::string split_name(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::val: return "val";
    case Split::test: return "test";
    default: return "unassigned";
  }
}

Split split_from_name(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "val") return Split::val;
  if (s == "test") return Split::test;
  if (s == "unassigned") return Split::unassigned;
  throw std::invalid_argument("unknown split: " + s);
}

std::vector<std::string> DatasetManifest::patient_ids() const {
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (const auto& r : records)
    if (seen.insert(r.patient_id).second) ids.push_back(r.patient_id);
  return ids;
}

std::string DatasetManifest::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["patient_id"] = r.patient_id;
    if (!r.volume_id.empty()) j["volume_id"] = r.volume_id;
    j["task"] = task_name(r.task);
    j["input_refs"] = r.input_refs;
    j["target_ref"] = r.target_ref;
    j["prompt"] = r.prompt;
    if (r.delta_t) j["delta_t"] = *r.delta_t;
    j["split"] = split_name(r.split);
    arr.push_back(j);
  }
  return arr.dump(2);
}

DatasetManifest DatasetManifest::from_json(const std::string& text) {
  nlohmann::json arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("manifest: top-level JSON array expected");
  static const std::set<std::string> known = {"patient_id", "volume_id", "task",   "input_refs",
                                              "target_ref", "prompt",    "delta_t", "split"};
  DatasetManifest m;
  for (const auto& j : arr) {
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!known.count(it.key()))
        throw std::invalid_argument("manifest: unknown field '" + it.key() + "'");
    SampleRecord r;
    r.patient_id = j.at("patient_id").get<std::string>();
    if (r.patient_id.empty()) throw std::invalid_argument("manifest: empty patient_id");
    if (j.contains("volume_id")) r.volume_id = j.at("volume_id").get<std::string>();
    r.task = task_from_name(j.at("task").get<std::string>());
    r.input_refs = j.at("input_refs").get<std::vector<std::string>>();
    r.target_ref = j.at("target_ref").get<std::string>();
    r.prompt = j.at("prompt").get<std::string>();
    if (j.contains("delta_t")) r.delta_t = j.at("delta_t").get<double>();
    r.split = split_from_name(j.at("split").get<std::string>());
    m.records.push_back(std::move(r));
  }
  return m;
}

void DatasetManifest::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("manifest: cannot write " + path);
  out << to_json() << "\n";
}

DatasetManifest DatasetManifest::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("manifest: cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

DatasetManifest patient_split(const DatasetManifest& manifest, std::array<double, 3> ratios,
                              uint64_t seed) {
  if (manifest.records.empty()) throw std::invalid_argument("patient_split: empty manifest");
  if (std::fabs(ratios[0] + ratios[1] + ratios[2] - 1.0) > 1e-9)
    throw std::invalid_argument("patient_split: ratios must sum to 1");
  std::set<std::string> identities;
  for (const auto& r : manifest.records) {
    if (r.patient_id.empty()) throw std::invalid_argument("patient_split: empty patient_id");
    if (r.split != Split::unassigned)
      throw std::invalid_argument("patient_split: all records must be unassigned");
    // Record identity: same target plus same inputs means a duplicate entry.
    std::string key = r.target_ref + "|" + r.prompt;
    for (const auto& in : r.input_refs) key += "|" + in;
    if (!identities.insert(key).second)
      throw std::invalid_argument("patient_split: duplicate record ids");
  }

  std::vector<std::string> patients = manifest.patient_ids();
  Rng rng(seed);
  rng.shuffle(patients);

  size_t n = patients.size();
  size_t n_val = static_cast<size_t>(std::floor(ratios[1] * static_cast<double>(n)));
  size_t n_test = static_cast<size_t>(std::floor(ratios[2] * static_cast<double>(n)));
  size_t n_train = n - n_val - n_test;  // train absorbs the rounding remainder

  std::map<std::string, Split> assignment;
  for (size_t i = 0; i < n; ++i) {
    Split s = i < n_train ? Split::train : (i < n_train + n_val ? Split::val : Split::test);
    assignment[patients[i]] = s;
  }

  DatasetManifest out = manifest;
  for (auto& r : out.records) r.split = assignment.at(r.patient_id);
  return out;
}

}  // namespace ocusim
