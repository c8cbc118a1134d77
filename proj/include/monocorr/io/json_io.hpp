#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "monocorr/cube/boolean_family.hpp"
#include "monocorr/stieltjes/step.hpp"

namespace monocorr::io {

using nlohmann::json;

/// {"kind": "tribes", "n": 12, "r": 3} and friends. Dictator uses "i",
/// threshold "k", ltf "weights" and "t", random_monotone "seed".
cube::FamilyDescriptor descriptor_from_json(const json& j);
json to_json(const cube::FamilyDescriptor& d);

/// {"base": b, "atoms": [[t, delta], ...]}.
stieltjes::MonotoneStep step_from_json(const json& j);
json to_json(const stieltjes::MonotoneStep& f);

/// One Gaussian-side instance for the step-function audit.
struct StepInstance {
  std::string label;
  stieltjes::MonotoneStep f;
  stieltjes::MonotoneStep g;
  std::vector<double> w;
  std::vector<double> v;
};

StepInstance step_instance_from_json(const json& j);
json to_json(const StepInstance& inst);

json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// A catalog file is either an array of descriptors or {"families": [...]}.
/// Every descriptor is validated against `cap`.
std::vector<cube::FamilyDescriptor> load_catalog(const std::filesystem::path& path,
                                                  int cap = cube::kDefaultDimensionCap);

/// An array of instances or {"instances": [...]}.
std::vector<StepInstance> load_step_instances(const std::filesystem::path& path);

/// Named regression constants, stored as a flat JSON object.
using Pins = std::map<std::string, double>;

/// A missing file reads as no pins.
Pins load_pins(const std::filesystem::path& path);
void save_pins(const std::filesystem::path& path, const Pins& pins);

}  // namespace monocorr::io
