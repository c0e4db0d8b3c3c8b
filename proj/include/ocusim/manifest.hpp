#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ocusim {

enum class Task { segment, detect, translate, enhance, sr, inpaint, outpaint, progress, exemplar };
enum class Split { train, val, test, unassigned };

std::string task_name(Task t);
Task task_from_name(const std::string& s);
std::string split_name(Split s);
Split split_from_name(const std::string& s);

struct SampleRecord {
  std::string patient_id;
  std::string volume_id;  // empty = none
  Task task = Task::segment;
  std::vector<std::string> input_refs;
  std::string target_ref;
  std::string prompt;
  std::optional<double> delta_t;  // months
  Split split = Split::unassigned;

  // In-memory flag, not part of the manifest schema.
  bool warn_empty_rpe = false;
};

struct DatasetManifest {
  std::vector<SampleRecord> records;

  std::vector<std::string> patient_ids() const;  // distinct, first-appearance order

  std::string to_json() const;
  static DatasetManifest from_json(const std::string& text);  // unknown fields rejected
  void save(const std::string& path) const;
  static DatasetManifest load(const std::string& path);
};

// Shuffles patients by seed and partitions them by cumulative ratio; floor for
// val/test counts, remainder to train. Every record inherits its patient's
// split.
DatasetManifest patient_split(const DatasetManifest& manifest,
                              std::array<double, 3> ratios,  // train, val, test
                              uint64_t seed);

}  // namespace ocusim
