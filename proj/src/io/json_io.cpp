#include "monocorr/io/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "monocorr/error.hpp"

namespace monocorr::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    if constexpr (std::is_integral_v<T>) {
      if (!j.at(key).is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    }
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

json unwrap(const json& j, const char* key) {
  if (j.is_array()) return j;
  if (j.is_object() && j.contains(key) && j.at(key).is_array()) return j.at(key);
  throw ParseError(std::string("expected an array or an object with '") + key + "'");
}

}  // namespace

cube::FamilyDescriptor descriptor_from_json(const json& j) {
  const auto kind = field<std::string>(j, "kind");
  if (kind == "dictator") return cube::Dictator{field<int>(j, "n"), field<int>(j, "i")};
  if (kind == "majority") return cube::Majority{field<int>(j, "n")};
  if (kind == "tribes") return cube::Tribes{field<int>(j, "n"), field<int>(j, "r")};
  if (kind == "ltf") return cube::Ltf{field<std::vector<double>>(j, "weights"), field<double>(j, "t")};
  if (kind == "threshold") return cube::Threshold{field<int>(j, "n"), field<int>(j, "k")};
  if (kind == "random_monotone") return cube::RandomMonotone{field<int>(j, "n"), field<std::uint64_t>(j, "seed")};
  throw ParseError("unknown family kind '" + kind + "'");
}

json to_json(const cube::FamilyDescriptor& d) {
  json j{{"kind", cube::kind_name(d)}};
  std::visit(
      [&j](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, cube::Dictator>) {
          j["n"] = x.n;
          j["i"] = x.i;
        } else if constexpr (std::is_same_v<T, cube::Majority>) {
          j["n"] = x.n;
        } else if constexpr (std::is_same_v<T, cube::Tribes>) {
          j["n"] = x.n;
          j["r"] = x.r;
        } else if constexpr (std::is_same_v<T, cube::Ltf>) {
          j["weights"] = x.weights;
          j["t"] = x.t;
        } else if constexpr (std::is_same_v<T, cube::Threshold>) {
          j["n"] = x.n;
          j["k"] = x.k;
        } else {
          j["n"] = x.n;
          j["seed"] = x.seed;
        }
      },
      d);
  return j;
}

stieltjes::MonotoneStep step_from_json(const json& j) {
  const double base = j.is_object() && j.contains("base") ? field<double>(j, "base") : 0.0;
  const auto atoms = field<std::vector<std::pair<double, double>>>(j, "atoms");
  return stieltjes::make_step(base, atoms);
}

json to_json(const stieltjes::MonotoneStep& f) {
  json atoms = json::array();
  for (std::size_t i = 0; i < f.atoms(); ++i) atoms.push_back({f.breakpoints()[i], f.jumps()[i]});
  return {{"base", f.base()}, {"atoms", atoms}};
}

StepInstance step_instance_from_json(const json& j) {
  StepInstance inst;
  inst.label = field<std::string>(j, "label");
  try {
    inst.f = step_from_json(j.at("f"));
    inst.g = step_from_json(j.at("g"));
  } catch (const json::exception&) {
    throw ParseError("instance '" + inst.label + "' needs step functions 'f' and 'g'");
  }
  inst.w = field<std::vector<double>>(j, "w");
  inst.v = field<std::vector<double>>(j, "v");
  return inst;
}

json to_json(const StepInstance& inst) {
  return {{"label", inst.label}, {"f", to_json(inst.f)}, {"g", to_json(inst.g)}, {"w", inst.w}, {"v", inst.v}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<cube::FamilyDescriptor> load_catalog(const std::filesystem::path& path, int cap) {
  const json items = unwrap(read_json(path), "families");
  std::vector<cube::FamilyDescriptor> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      out.push_back(descriptor_from_json(items[i]));
      cube::validate(out.back(), cap);
    } catch (const Error& e) {
      throw ParseError(path.string() + " entry " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

std::vector<StepInstance> load_step_instances(const std::filesystem::path& path) {
  const json items = unwrap(read_json(path), "instances");
  std::vector<StepInstance> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      out.push_back(step_instance_from_json(items[i]));
    } catch (const Error& e) {
      throw ParseError(path.string() + " entry " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

Pins load_pins(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  const json j = read_json(path);
  if (!j.is_object()) throw ParseError(path.string() + ": pins must be a JSON object");
  Pins pins;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) throw ParseError(path.string() + ": pin '" + key + "' is not a number");
    pins[key] = value.get<double>();
  }
  return pins;
}

void save_pins(const std::filesystem::path& path, const Pins& pins) {
  json j = json::object();
  for (const auto& [key, value] : pins) j[key] = value;
  write_text(path, j.dump(2) + "\n");
}

}  // namespace monocorr::io
